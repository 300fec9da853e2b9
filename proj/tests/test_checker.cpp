#include <doctest.h>

#include "modvar/checker.hpp"

using namespace modvar;
namespace ex = modvar::examples;

namespace {

Verdict check(std::string_view text, CheckOptions const& o = {}) {
  return verdict(parse_presentation(text), o);
}

VarietyPresentation meet_v1_v2() {
  return variety_meet(parse_presentation(ex::v1), parse_presentation(ex::v2));
}

}  // namespace

TEST_CASE("V1 and V2 are modular") {
  for (auto text : {ex::v1, ex::v2}) {
    auto const v = check(text);
    CHECK(v.status == Status::Modular);
    CHECK(v.mode == ClosureMode::Exact);
    CHECK(v.nil_degree == 5);
    CHECK(v.bound == 4);
    CHECK(v.witnesses().empty());
  }
}

TEST_CASE("the meet of V1 and V2 fails condition (c)") {
  auto const v = verdict(meet_v1_v2());
  CHECK(v.status == Status::NotModular);
  CHECK(v.a.passed);
  CHECK(v.b.passed);
  REQUIRE_FALSE(v.c.passed);
  REQUIRE(v.c.witness);
  auto const& w = *v.c.witness;
  REQUIRE(w.words.size() == 2);
  CHECK(display(w.words[0]) == "x^2 y z");
  CHECK(display(w.words[1]) == "x y z^2");
  CHECK(compare(w.words[0], w.words[1]) == WordRelation::Incomparable);
  CHECK(w.words[0].alphabet() == w.words[1].alphabet());
  for (auto const& s : w.stabilizers) {
    CHECK(is_transposition_group(s));
  }
  CHECK(display(w.stabilizers[0]) == "order 2, generated by (y z)");
}

TEST_CASE("the unrepaired equations break condition (a)") {
  auto const v = check(ex::v1_bare);
  CHECK(v.status == Status::NotModular);
  REQUIRE(v.a.witness);
  CHECK(display(v.a.witness->words[0]) == "x^3 y");
  CHECK(display(v.a.witness->words[1]) == "x^2 y x");
  CHECK(check(ex::v2_bare).status == Status::NotModular);
}

TEST_CASE("commutative varieties") {
  CHECK(check(ex::commutative_modular).status == Status::Modular);
  auto const v = check(ex::commutative_nil4);
  CHECK(v.status == Status::NotModular);
  REQUIRE(v.a.witness);
  CHECK(display(v.a.witness->words[0]) == "x^2 y");
  CHECK(display(v.a.witness->words[1]) == "x y x");
}

TEST_CASE("permutational identities of length 3") {
  for (auto text : ex::permut3) {
    CAPTURE(text);
    CHECK(check(text).status == Status::Modular);
    CheckOptions o;
    o.resolve_gap = false;
    auto const raw = check(text, o).status;
    CHECK((raw == Status::Modular || raw == Status::Gap));
  }
}

TEST_CASE("0-reduced presentations are modular") {
  for (std::string_view text : {"x y z = 0\n", "x^2 = 0\nx y x = 0\n", "x y = 0\n",
                                "x^3 = 0\nx^2 y^2 = 0\nx y z t = 0\n"}) {
    CAPTURE(text);
    auto const v = check(text);
    CHECK(v.status == Status::Modular);
    CHECK(v.note == "every identity is 0-reduced");
  }
}

TEST_CASE("non-nil input") {
  CHECK_THROWS_AS(check("x y = y x\n"), NotNilError);
  CHECK_THROWS_AS(check("x^2 = x\n"), NotNilError);
  auto const v = check("x y = x\n");
  CHECK(v.status == Status::BoundedOnly);
  CHECK(v.mode == ClosureMode::Bounded);
  CheckOptions o;
  o.bounded_length = 3;
  CHECK(check("x^2 y = x y^2\nx y = x^2\n", o).bound == 3);
}

TEST_CASE("join flags do not change the verdict") {
  auto p = parse_presentation(ex::v1);
  p.join = JoinFlag::SL;
  auto const v = verdict(p);
  CHECK(v.status == Status::Modular);
  CHECK(v.join == JoinFlag::SL);
  CHECK(to_report(v).find("joined with") != std::string::npos);
}

TEST_CASE("disabling condition (c) leaves a gap") {
  CheckOptions o;
  o.disable_condition_c = true;
  o.resolve_gap = false;
  auto const v = verdict(meet_v1_v2(), o);
  CHECK_FALSE(v.c.evaluated);
  CHECK(v.status == Status::Gap);
}

TEST_CASE("stabilizer types and forbidden pairs") {
  using S = StabilizerType;
  CHECK(classify_stabilizer(named_subgroup("T12", 3)) == S::Transposition);
  CHECK(classify_stabilizer(Subgroup::alternating(3)) == S::Alternating3);
  CHECK(classify_stabilizer(named_subgroup("I13,24", 4)) == S::Dihedral);
  CHECK(classify_stabilizer(Subgroup::alternating(4)) == S::Alternating4);
  CHECK(classify_stabilizer(Subgroup::symmetric(3)) == S::Other);
  CHECK(forbidden_pair(S::Transposition, S::Transposition));
  CHECK(forbidden_pair(S::Alternating3, S::Transposition));
  CHECK(forbidden_pair(S::Alternating4, S::Dihedral));
  CHECK_FALSE(forbidden_pair(S::Alternating3, S::Alternating3));
  CHECK_FALSE(forbidden_pair(S::Alternating4, S::Alternating4));
  CHECK_FALSE(forbidden_pair(S::Transposition, S::Dihedral));
  CHECK(is_modular_subgroup(named_subgroup("V4", 4)));
  CHECK_FALSE(is_modular_subgroup(named_subgroup("T12", 4)));
  CHECK(is_modular_subgroup(Subgroup::alternating(5)));
  CHECK_FALSE(is_modular_subgroup(named_subgroup("T12", 5)));
}

TEST_CASE("JSON verdict round-trips and is deterministic") {
  auto const v = verdict(meet_v1_v2());
  auto const j = to_json(v);
  CHECK(j.at("status") == "NotModular");
  CHECK(j.at("bound") == 4);
  for (auto key : {"a", "b", "c", "c_prime"}) {
    CHECK(j.at("conditions").contains(key));
  }
  CHECK(j.at("conditions").at("c").at("passed") == false);
  CHECK(j.at("witnesses").at(0).at("words").at(0) == "x^2 y z");
  CHECK(nlohmann::json::parse(j.dump()) == j);
  CHECK(to_json(verdict(meet_v1_v2())).dump() == j.dump());
  auto const report = to_report(v);
  CHECK(report.rfind("NotModular\n", 0) == 0);
  CHECK(report.find("x^2 y z vs x y z^2") != std::string::npos);
}
