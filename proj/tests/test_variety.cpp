#include <doctest.h>

#include <cstdlib>
#include <map>
#include <numeric>

#include "modvar/error.hpp"
#include "modvar/variety.hpp"

using namespace modvar;

namespace {

// Naive closure: every word over `letters` letters up to length `bound`,
// plus a zero node, united along every elementary deduction a xi(u) b =
// a xi(v) b. Words longer than the bound are 0 by nilpotency.
class NaiveClosure {
 public:
  NaiveClosure(VarietyPresentation const& p, std::size_t bound)
      : bound_(bound) {
    for (std::size_t n = 1; n <= bound; ++n) {
      for (auto const& u : all_words(bound, n)) {
        index_.emplace(u, index_.size());
      }
    }
    zero_ = index_.size();
    parent_.resize(zero_ + 1);
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    for (auto const& id : p.identities) {
      apply_identity(id);
    }
  }

  std::vector<Word> universe() const {
    std::vector<Word> out;
    for (auto const& [u, i] : index_) {
      out.push_back(u);
    }
    return out;
  }
  bool equal(Word const& u, Word const& v) { return find(node(u)) == find(node(v)); }
  bool zero(Word const& u) { return find(node(u)) == find(zero_); }

 private:
  std::size_t node(std::optional<Word> const& u) const {
    if (!u || u->length() > bound_) {
      return zero_;
    }
    return index_.at(*u);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      x = parent_[x] = parent_[parent_[x]];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

  void apply_identity(Identity const& id) {
    std::vector<Letter> vars = id.lhs.alphabet();
    if (id.rhs) {
      for (auto l : id.rhs->alphabet()) {
        if (std::find(vars.begin(), vars.end(), l) == vars.end()) {
          vars.push_back(l);
        }
      }
    }
    std::vector<Word> images;
    for (auto const& [u, i] : index_) {
      images.push_back(u);
    }
    std::vector<std::size_t> choice(vars.size(), 0);
    // Each variable gets any word of the universe; longer images make both
    // sides exceed the bound and collapse to 0 anyway.
    while (true) {
      Substitution s;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        s.set(vars[i], images[choice[i]]);
      }
      Word const l = apply(s, id.lhs);
      std::optional<Word> r;
      if (id.rhs) {
        r = apply(s, *id.rhs);
      }
      if (l.length() <= bound_ || (r && r->length() <= bound_)) {
        add_with_contexts(l, r);
      }
      std::size_t i = 0;
      while (i < vars.size() && ++choice[i] == images.size()) {
        choice[i++] = 0;
      }
      if (i == vars.size()) {
        break;
      }
    }
  }

  void add_with_contexts(Word const& l, std::optional<Word> const& r) {
    std::vector<std::optional<Word>> contexts{std::nullopt};
    for (auto const& [u, i] : index_) {
      contexts.push_back(u);
    }
    for (auto const& a : contexts) {
      for (auto const& b : contexts) {
        Word const lw = concat(a, l, b);
        std::optional<Word> rw;
        if (r) {
          rw = concat(a, *r, b);
        }
        if (lw.length() > bound_ && (!rw || rw->length() > bound_)) {
          continue;
        }
        unite(node(lw), node(rw));
      }
    }
  }

  std::size_t bound_;
  std::map<Word, std::size_t> index_;
  std::size_t zero_ = 0;
  std::vector<std::size_t> parent_;
};

VarietyPresentation parse(std::string_view text) { return parse_presentation(text); }

}  // namespace

TEST_CASE("presentation syntax") {
  auto const p = parse("# comment\n\nx^2 y z = x^2 z y   # trailing\nx1 x2 x3 x4 x5 = 0\n");
  CHECK(p.identities.size() == 2);
  CHECK(p.nil_degree == 5);
  CHECK(p.explicit_witness);
  CHECK(p.identities[0].line == 3);
  CHECK(p.identities[1].is_nil_witness());
  CHECK_FALSE(p.purely_zero_reduced());
  CHECK(parse("x y z = 0\n").purely_zero_reduced());
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("# nothing\n"), ParseError);
  CHECK_THROWS_AS(parse("x y\n"), ParseError);
  CHECK_THROWS_AS(parse("x = y = z\n"), ParseError);
  try {
    parse("x y = y x\nx Y = 0\n");
    FAIL("expected a parse error");
  } catch (ParseError const& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
}

TEST_CASE("nilpotency degree") {
  // x1 x2 = x1^2 = 0 without a linear witness.
  auto const p = parse("x y = x^2\nx^2 = 0\n");
  CHECK(p.nil_degree == 2);
  CHECK_FALSE(p.explicit_witness);
  CHECK_THROWS_AS(parse_presentation("x y = x^2\nx^2 = 0\n", ParseOptions{true, 8}),
                  ParseError);
  CHECK_FALSE(parse("x^2 y = x y^2\n").nil_degree);
  auto const meet = variety_meet(parse("x y = y x\nx1 x2 x3 x4 = 0\n"),
                                 parse("x1 x2 x3 = 0\n"));
  CHECK(meet.nil_degree == 3);
  CHECK(meet.identities.size() == 3);
}

TEST_CASE("bound cap from the environment") {
  ::setenv("MODVAR_BOUND_CAP", "3", 1);
  CHECK(bound_cap_from_environment() == 3);
  ::setenv("MODVAR_BOUND_CAP", "99", 1);
  CHECK(bound_cap_from_environment() == max_nil_degree);
  ::setenv("MODVAR_BOUND_CAP", "x", 1);
  CHECK(bound_cap_from_environment() == 8);
  ::unsetenv("MODVAR_BOUND_CAP");
  CHECK(bound_cap_from_environment() == 8);
}

TEST_CASE("closure equals the naive oracle for nilpotency degree <= 4") {
  std::string_view const presentations[] = {
      "x1 x2 x3 = 0\n",
      "x y = y x\nx1 x2 x3 x4 = 0\n",
      "x^2 = 0\nx1 x2 x3 x4 = 0\n",
      "x y x = x^2 y\nx1 x2 x3 x4 = 0\n",
      "x y z = z y x\nx1 x2 x3 x4 = 0\n",
      "x y = x^2\nx1 x2 x3 x4 = 0\n",
      "x^2 y = y x^2\nx y^2 = 0\nx1 x2 x3 x4 = 0\n",
      "x y z = x z y\nx^3 = 0\nx1 x2 x3 x4 = 0\n",
      "x y = y x\nx^2 y = x y^2\nx1 x2 x3 x4 = 0\n",
      "x y = x^2\nx^2 = 0\n",
  };
  for (auto text : presentations) {
    CAPTURE(text);
    auto const p = parse(text);
    REQUIRE(p.nil_degree);
    ClosureTable const t = build_closure(p);
    REQUIRE(t.mode() == ClosureMode::Exact);
    // The oracle works up to the stated degree; the table may have found a
    // smaller one.
    std::size_t const bound = *p.nil_degree - 1;
    CHECK(t.bound() <= bound);
    NaiveClosure oracle(p, bound);
    auto const words = oracle.universe();
    for (auto const& u : words) {
      CHECK(t.is_zero(u) == oracle.zero(u));
      for (auto const& v : words) {
        if (u < v) {
          CHECK(t.are_equal(u, v) == oracle.equal(u, v));
        }
      }
    }
  }
}

TEST_CASE("stabilizers") {
  auto const v1 = parse("x^2 y z = x^2 z y\nx^3 y = 0\nx1 x2 x3 x4 x5 = 0\n");
  auto const t = build_closure(v1);
  auto const s = t.stabilizer(Word({0, 0, 1, 2}));
  CHECK(s.group.order() == 2);
  CHECK_FALSE(s.zero);
  CHECK(t.stabilizer(Word({0, 1, 2})).group.is_trivial());
  auto const z = t.stabilizer(Word({0, 0, 0, 1}));
  CHECK(z.zero);
  CHECK(z.group == Subgroup::symmetric(2));
  CHECK(t.is_zero(Word({0, 1, 2, 3, 4, 5})));

  auto const comm = build_closure(parse("x y = y x\nx1 x2 x3 x4 = 0\n"));
  CHECK(comm.stabilizer(Word({0, 1, 2})).group == Subgroup::symmetric(3));
}

TEST_CASE("bounded closure without a nilpotency witness") {
  auto const p = parse("x^2 y = x y^2\n");
  CHECK_THROWS_AS(build_closure(p), InvalidArgument);
  auto const t = build_closure(p, 3);
  CHECK(t.mode() == ClosureMode::Bounded);
  CHECK(t.are_equal(Word({0, 0, 1}), Word({0, 1, 1})));
  CHECK_FALSE(t.is_zero(Word({0, 1})));
  CHECK_THROWS_AS(t.is_zero(Word({0, 1, 2, 3})), InvalidArgument);
  auto const j = t.to_json();
  CHECK(j.is_object());
}
