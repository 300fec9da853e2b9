// Command-line front end. Exit codes: 0 Modular, 1 NotModular, 2 Gap or
// BoundedOnly, 3 input error.
#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>

#include "modvar/checker.hpp"
#include "modvar/gset.hpp"
#include "modvar/gset_lemmas.hpp"
#include "modvar/lattice_io.hpp"
#include "modvar/subgroup_lattice.hpp"

namespace {

using namespace modvar;

constexpr int exit_input = 3;

int exit_code(Status s) {
  switch (s) {
    case Status::Modular:
      return 0;
    case Status::NotModular:
      return 1;
    default:
      return 2;
  }
}

std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot read " + path);
  }
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

VarietyPresentation load(std::string const& path) {
  ParseOptions o;
  o.bound_cap = bound_cap_from_environment();
  try {
    return parse_presentation(read_file(path), o);
  } catch (ParseError const& e) {
    throw ParseError(path + ": " + e.what(), 0, 0);
  }
}

int run_check(std::string const& file, bool join_sl, bool join_t,
              std::size_t bound, bool json) {
  VarietyPresentation p = load(file);
  if (join_sl) {
    p.join = JoinFlag::SL;
  } else if (join_t) {
    p.join = JoinFlag::T;
  }
  CheckOptions o;
  o.bounded_length = bound;
  Verdict const v = verdict(p, o);
  if (json) {
    std::cout << to_json(v).dump(2) << '\n';
  } else {
    std::cout << to_report(v);
  }
  return exit_code(v.status);
}

int run_sublattice(std::size_t n, bool dot, bool modular_only) {
  SubgroupLattice const& s = subgroup_lattice(n);
  std::vector<FiniteLattice::Element> order(s.subgroups.size());
  std::iota(order.begin(), order.end(), FiniteLattice::Element{0});
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    auto const& x = s.subgroups[a];
    auto const& y = s.subgroups[b];
    if (x.order() != y.order()) {
      return x.order() < y.order();
    }
    return describe(x) < describe(y);
  });
  std::vector<FiniteLattice::Element> shown;
  for (auto e : order) {
    if (!modular_only || s.modular[e]) {
      shown.push_back(e);
    }
  }
  if (dot) {
    DotOptions o;
    o.graph_name = "Sub_S" + std::to_string(n);
    o.node_order = order;
    for (auto e : order) {
      if (s.modular[e]) {
        o.highlighted.push_back(e);
      }
    }
    if (modular_only) {
      o.only = shown;
    }
    std::cout << to_dot(s.lattice, o);
    return 0;
  }
  std::cout << "Sub(S" << n << "): " << s.subgroups.size() << " subgroups";
  if (modular_only) {
    std::cout << ", " << shown.size() << " modular";
  }
  std::cout << '\n';
  for (auto e : shown) {
    std::cout << describe(s.subgroups[e]) << "  order " << s.subgroups[e].order()
              << (s.modular[e] ? "  modular" : "") << '\n';
  }
  return 0;
}

// Command-line words carry no line number; report the column only.
Word parse_argument(std::string const& text, LetterTable& table) {
  try {
    return parse_word(text, table);
  } catch (ParseError const& e) {
    throw ParseError("word '" + text + "', column " + std::to_string(e.column()) +
                         ": " + e.what(),
                     0, 0);
  }
}

int run_word_order(std::string const& u, std::string const& v) {
  LetterTable table;
  Word const a = parse_argument(u, table);
  Word const b = parse_argument(v, table);
  std::cout << to_string(compare(a, b)) << '\n';
  return 0;
}

int run_stabilizer(std::string const& file, std::string const& text) {
  VarietyPresentation p = load(file);
  Word const u = parse_argument(text, p.letters);
  ClosureTable const t = build_closure(
      p, p.nil_degree ? std::nullopt : std::optional<std::size_t>(u.length()));
  StabilizerResult const s = t.stabilizer(u);
  std::vector<std::string> names;
  for (auto l : u.first_occurrences()) {
    names.push_back(p.letters.name(l));
  }
  if (s.zero) {
    std::cout << "zero: " << text << " = 0 holds; ";
  }
  std::cout << "order " << s.group.order();
  auto const gens = s.group.generators();
  if (gens.empty()) {
    std::cout << ", trivial";
  } else {
    std::cout << ", generated by ";
    for (std::size_t i = 0; i < gens.size(); ++i) {
      std::cout << (i ? ", " : "") << gens[i].to_string(names);
    }
  }
  std::cout << '\n';
  return 0;
}

Subgroup parse_group(std::string const& name) {
  if (name.size() == 2 && (name[0] == 's' || name[0] == 'a') && name[1] >= '1' &&
      name[1] <= '5') {
    std::size_t const n = static_cast<std::size_t>(name[1] - '0');
    return name[0] == 's' ? Subgroup::symmetric(n) : Subgroup::alternating(n);
  }
  throw InvalidArgument("unknown group '" + name + "' (expected s1..s5 or a1..a5)");
}

int run_gset_verify(std::string const& group, std::size_t orbits) {
  if (orbits < 1 || orbits > 4) {
    throw InvalidArgument("--orbits must be between 1 and 4");
  }
  GSet const a = free_gset(parse_group(group), orbits);
  bool all = true;
  for (auto const& r : verify_gset_lemmas(a)) {
    all = all && r.passed;
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.detail.empty()) {
      std::cout << ": " << r.detail;
    }
    std::cout << '\n';
  }
  return all ? 0 : 1;
}

int run_verify_paper(RegressionOptions const& o) {
  bool all = true;
  for (auto const& r : verify_paper(o)) {
    all = all && r.passed;
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.id << ' ' << r.title << ": "
              << r.detail << '\n';
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Modular nil-varieties of semigroups"};
  app.require_subcommand(1, 1);

  std::string file;
  bool join_sl = false;
  bool join_t = false;
  std::size_t bound = 5;
  bool json = false;
  auto* check = app.add_subcommand("check", "decide modularity of a variety");
  check->add_option("file", file, "identity file")->required();
  auto* sl = check->add_flag("--join-sl", join_sl, "join with the semilattice variety");
  check->add_flag("--join-t", join_t, "join with the trivial variety")->excludes(sl);
  check->add_option("--bound", bound, "word length for bounded closures")
      ->check(CLI::Range(1, static_cast<int>(max_nil_degree) - 1));
  check->add_flag("--json", json, "JSON verdict");

  std::size_t degree = 0;
  bool dot = false;
  bool modular_only = false;
  auto* sub = app.add_subcommand("sublattice", "subgroup lattice of S_n");
  sub->add_option("n", degree, "degree")->required()->check(CLI::Range(2, 5));
  sub->add_flag("--dot", dot, "Graphviz Hasse diagram");
  sub->add_flag("--modular-only", modular_only, "only modular elements");

  std::string u;
  std::string v;
  auto* order = app.add_subcommand("word-order", "relation between two words");
  order->add_option("u", u)->required();
  order->add_option("v", v)->required();

  std::string word;
  auto* stab = app.add_subcommand("stabilizer", "stabilizer of a word in a variety");
  stab->add_option("file", file, "identity file")->required();
  stab->add_option("word", word)->required();

  std::string group = "s3";
  std::size_t orbits = 2;
  auto* gset = app.add_subcommand("gset-verify", "G-set lemma suite on a free G-set");
  gset->add_option("--group", group, "s1..s5 or a1..a5");
  gset->add_option("--orbits", orbits, "number of orbits");

  RegressionOptions ro;
  auto* paper = app.add_subcommand("verify-paper", "regression over the documented results");
  paper->add_flag("--mutate-dihedral", ro.mutate_dihedral);
  paper->add_flag("--disable-condition-c", ro.disable_condition_c);
  paper->add_flag("--skip-slow", ro.skip_slow);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const rc = app.exit(e);
    return rc == 0 ? 0 : exit_input;
  }

  try {
    if (*check) {
      return run_check(file, join_sl, join_t, bound, json);
    }
    if (*sub) {
      return run_sublattice(degree, dot, modular_only);
    }
    if (*order) {
      return run_word_order(u, v);
    }
    if (*stab) {
      return run_stabilizer(file, word);
    }
    if (*gset) {
      return run_gset_verify(group, orbits);
    }
    return run_verify_paper(ro);
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input;
  }
}
