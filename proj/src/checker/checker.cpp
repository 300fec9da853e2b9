#include <algorithm>

#include "modvar/checker.hpp"
#include "modvar/error.hpp"
#include "modvar/subgroup_lattice.hpp"

namespace modvar {

namespace {

bool exact(ClosureTable const& t) { return t.mode() == ClosureMode::Exact; }

struct Typed {
  Word word;
  Subgroup stab;
  StabilizerType type;
};

}  // namespace

StabilizerType classify_stabilizer(Subgroup const& h) {
  if (h.degree() == 3) {
    if (is_transposition_group(h)) {
      return StabilizerType::Transposition;
    }
    if (is_alternating(h)) {
      return StabilizerType::Alternating3;
    }
  } else if (h.degree() == 4) {
    if (is_dihedral_over_v4(h)) {
      return StabilizerType::Dihedral;
    }
    if (is_alternating(h)) {
      return StabilizerType::Alternating4;
    }
  }
  return StabilizerType::Other;
}

bool forbidden_pair(StabilizerType u, StabilizerType v) {
  using S = StabilizerType;
  auto either = [&](S x, S y) { return (u == x && v == y) || (u == y && v == x); };
  return either(S::Transposition, S::Transposition) ||
         either(S::Transposition, S::Alternating3) ||
         either(S::Dihedral, S::Dihedral) || either(S::Dihedral, S::Alternating4);
}

bool is_modular_subgroup(Subgroup const& h) {
  std::size_t const k = h.degree();
  if (k <= 4) {
    return subgroup_lattice(k).is_modular(h);
  }
  return h.is_trivial() || h == Subgroup::alternating(k) ||
         h == Subgroup::symmetric(k);
}

ConditionResult check_condition_a(ClosureTable const& t) {
  ConditionResult r;
  r.condition = Condition::A;
  r.evaluated = true;
  std::vector<bool> seen(t.word_count(), false);
  for (auto id : t.canonical_ids()) {
    if (t.zero(id) || seen[t.root(id)]) {
      continue;
    }
    seen[t.root(id)] = true;
    ++r.checked;
    std::vector<Word> words;
    for (auto m : t.members(t.root(id))) {
      words.push_back(t.word(m));
    }
    std::sort(words.begin(), words.end());
    Word const base = canonical_form(words.front());
    for (auto const& w : words) {
      if (canonical_form(w) != base) {
        r.passed = false;
        r.witness = Witness{Condition::A,
                            {words.front(), w},
                            {},
                            "non-substitutive identity between non-zero words"};
        return r;
      }
    }
  }
  return r;
}

ConditionResult check_condition_b(ClosureTable const& t) {
  ConditionResult r;
  r.condition = Condition::B;
  for (auto id : t.canonical_ids()) {
    if (t.zero(id)) {
      continue;
    }
    Word const& u = t.word(id);
    ++r.checked;
    if (u.alphabet().size() < 3) {
      continue;  // Sub(S1) and Sub(S2) are chains
    }
    Subgroup const stab = t.stabilizer(u).group;
    if (!is_modular_subgroup(stab)) {
      r.passed = false;
      r.witness = Witness{Condition::B,
                          {u},
                          {stab},
                          "stabilizer is not modular in Sub(S" +
                              std::to_string(stab.degree()) + ")"};
      return r;
    }
  }
  return r;
}

ConditionResult check_condition_c(ClosureTable const& t, bool strict) {
  ConditionResult r;
  r.condition = strict ? Condition::CPrime : Condition::C;
  std::vector<Typed> typed;
  for (auto id : t.canonical_ids()) {
    Word const& u = t.word(id);
    std::size_t const k = u.alphabet().size();
    if (t.zero(id) || (k != 3 && k != 4)) {
      continue;
    }
    Subgroup stab = t.stabilizer(u).group;
    StabilizerType const type = classify_stabilizer(stab);
    if (type != StabilizerType::Other) {
      typed.push_back({u, std::move(stab), type});
    }
  }
  for (std::size_t i = 0; i < typed.size(); ++i) {
    for (std::size_t j = i + 1; j < typed.size(); ++j) {
      auto const& u = typed[i];
      auto const& v = typed[j];
      if (u.word.alphabet().size() != v.word.alphabet().size() ||
          !forbidden_pair(u.type, v.type)) {
        continue;
      }
      ++r.checked;
      WordRelation const rel = compare(u.word, v.word);
      bool const bad = strict ? rel != WordRelation::Equivalent
                              : rel == WordRelation::Incomparable;
      if (bad) {
        r.passed = false;
        r.witness = Witness{r.condition,
                            {u.word, v.word},
                            {u.stab, v.stab},
                            std::string(to_string(rel)) +
                                " words with a forbidden stabilizer pair"};
        return r;
      }
    }
  }
  return r;
}

std::vector<Witness> Verdict::witnesses() const {
  std::vector<Witness> out;
  if (status == Status::Modular) {
    return out;
  }
  for (auto const* r : {&a, &b, &c, &c_prime}) {
    if (r->evaluated && !r->passed && r->witness) {
      out.push_back(*r->witness);
    }
  }
  return out;
}

namespace {

Word linear(std::size_t k) {
  std::vector<Letter> letters(k);
  for (std::size_t i = 0; i < k; ++i) {
    letters[i] = static_cast<Letter>(i);
  }
  return Word(std::move(letters));
}

bool holds_all(ClosureTable const& t, std::string_view text) {
  VarietyPresentation const sys = parse_presentation(text, ParseOptions{false, 1});
  return std::all_of(sys.identities.begin(), sys.identities.end(),
                     [&](Identity const& id) { return t.holds(id); });
}

// Known classifications that decide some Gap cases outright.
std::optional<std::pair<bool, std::string>> resolve_gap(ClosureTable const& t) {
  if (!exact(t)) {
    return std::nullopt;
  }
  if (t.bound() >= 2 && t.are_equal(Word({0, 1}), Word({1, 0}))) {
    bool const ok = t.is_zero(Word({0, 0, 1}));
    return std::pair{ok, std::string("commutative variety: x^2 y = 0 ") +
                             (ok ? "holds" : "fails")};
  }
  Word const xyz = linear(3);
  if (t.bound() < 3 || t.is_zero(xyz) || !t.stabilizer(xyz).group.is_trivial()) {
    static constexpr std::string_view systems[4] = {
        "x y z = z y x\nx^2 y = 0\n",
        "x y z = y z x\nx^2 y = 0\n",
        "x y z = y x z\nx y z t = x z t y\nx y^2 = 0\n",
        "x y z = x z y\nx y z t = y z x t\nx^2 y = 0\n",
    };
    for (std::size_t i = 0; i < 4; ++i) {
      if (holds_all(t, systems[i])) {
        return std::pair{true, "permutational identity of length 3: system " +
                                   std::to_string(i + 1) + " holds"};
      }
    }
    return std::pair{false,
                     std::string("permutational identity of length 3: none of "
                                 "the four modular systems holds")};
  }
  return std::nullopt;
}

}  // namespace

Verdict verdict(VarietyPresentation const& p, ClosureTable const& t,
                CheckOptions const& o) {
  Verdict v;
  v.mode = t.mode();
  v.bound = t.bound();
  v.nil_degree = t.nil_degree();
  v.join = p.join;
  v.a = check_condition_a(t);
  v.b = check_condition_b(t);
  if (o.disable_condition_c) {
    v.c.condition = Condition::C;
    v.c.evaluated = false;
  } else {
    v.c = check_condition_c(t, false);
  }
  v.c_prime = check_condition_c(t, true);
  if (v.c.evaluated && !v.c.passed && v.c_prime.passed) {
    throw Error("condition (c) failed while (c') passed");
  }

  if (!exact(t)) {
    v.status = Status::BoundedOnly;
    v.note = "no nilpotency witness; identities checked up to length " +
             std::to_string(t.bound());
  } else if (!v.a.passed || !v.b.passed || !v.c.passed) {
    v.status = Status::NotModular;
  } else if (v.c_prime.passed) {
    v.status = Status::Modular;
  } else {
    v.status = Status::Gap;
    if (o.resolve_gap) {
      if (auto res = resolve_gap(t)) {
        v.status = res->first ? Status::Modular : Status::NotModular;
        v.note = "conditions (a), (b), (c) hold and (c') fails; settled by "
                 "classification: " + res->second;
      }
    }
  }

  if (p.purely_zero_reduced()) {
    if (exact(t) && v.status != Status::Modular) {
      throw Error("0-reduced presentation not recognized as modular");
    }
    v.status = Status::Modular;
    v.note = "every identity is 0-reduced";
  }
  return v;
}

Verdict verdict(VarietyPresentation const& p, CheckOptions const& o) {
  if (!p.nil_degree && !p.purely_zero_reduced()) {
    bool const semilattice = std::all_of(
        p.identities.begin(), p.identities.end(), [](Identity const& id) {
          return !id.is_zero_reduced() && id.lhs.alphabet() == id.rhs->alphabet();
        });
    if (semilattice) {
      throw NotNilError(
          "not a nil-variety: every identity holds in semilattices; a modular "
          "variety must be T or SL joined with a nil-variety, so pass the nil "
          "part with --join-sl or --join-t");
    }
  }
  std::optional<std::size_t> bound;
  if (!p.nil_degree) {
    bound = std::clamp<std::size_t>(o.bounded_length, 1, max_nil_degree - 1);
  }
  return verdict(p, build_closure(p, bound), o);
}

}  // namespace modvar
