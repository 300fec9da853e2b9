#include <algorithm>
#include <map>
#include <numeric>

#include "modvar/error.hpp"
#include "modvar/partition.hpp"
#include "modvar/variety.hpp"

namespace modvar {

namespace {

std::string key_of(std::span<Letter const> letters) {
  std::string key;
  key.reserve(letters.size());
  for (auto l : letters) {
    key.push_back(static_cast<char>(l));
  }
  return key;
}

// Every word of length <= bound with alphabet {0, ..., k-1}: each canonical
// word under each permutation of its letters, grouped by canonical word.
std::vector<Word> standard_words(std::size_t bound) {
  std::vector<Word> out;
  for (auto const& c : canonical_words(bound)) {
    std::size_t const k = c.alphabet().size();
    std::vector<Letter> perm(k);
    std::iota(perm.begin(), perm.end(), Letter{0});
    do {
      out.push_back(rename(c, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

struct Rule {
  Word source;
  std::optional<Word> target;  // empty: the source is 0
};

// Letters of w renumbered 0, 1, ... by first occurrence.
std::vector<Letter> first_occurrence_map(Word const& w) {
  Letter max_letter = *std::max_element(w.letters().begin(), w.letters().end());
  std::vector<Letter> map(max_letter + 1u, Letter(0xFFFF));
  Letter next = 0;
  for (auto l : w.letters()) {
    if (map[l] == 0xFFFF) {
      map[l] = next++;
    }
  }
  return map;
}

}  // namespace

ClosureTable build_closure(VarietyPresentation const& p,
                           std::optional<std::size_t> bounded_length) {
  ClosureTable t;
  if (p.nil_degree) {
    t.mode_ = ClosureMode::Exact;
    if (*p.nil_degree > max_nil_degree) {
      throw InvalidArgument("nilpotency degree " + std::to_string(*p.nil_degree) +
                            " exceeds the supported maximum " +
                            std::to_string(max_nil_degree));
    }
    t.bound_ = *p.nil_degree - 1;
    t.nil_degree_ = p.nil_degree;
  } else {
    if (!bounded_length) {
      throw InvalidArgument(
          "no nilpotency witness: a bound is needed for bounded closure");
    }
    if (*bounded_length < 1 || *bounded_length >= max_nil_degree) {
      throw InvalidArgument("bound must be between 1 and " +
                            std::to_string(max_nil_degree - 1));
    }
    t.mode_ = ClosureMode::Bounded;
    t.bound_ = *bounded_length;
  }
  bool const exact = t.mode_ == ClosureMode::Exact;

  std::vector<Rule> rules;
  for (auto const& id : p.identities) {
    if (id.is_zero_reduced()) {
      rules.push_back({id.lhs, std::nullopt});
    } else if (id.lhs.alphabet() == id.rhs->alphabet()) {
      rules.push_back({id.lhs, id.rhs});
      rules.push_back({*id.rhs, id.lhs});
    } else if (exact) {
      // In a nil-variety both sides of such an identity equal 0.
      rules.push_back({id.lhs, std::nullopt});
      rules.push_back({*id.rhs, std::nullopt});
    }
  }

  t.words_ = standard_words(t.bound_);
  std::size_t const n = t.words_.size();
  for (std::size_t i = 0; i < n; ++i) {
    t.index_.emplace(key_of(t.words_[i].letters()), static_cast<ClosureTable::Id>(i));
    if (is_canonical(t.words_[i])) {
      t.canonical_.push_back(static_cast<ClosureTable::Id>(i));
    }
  }

  std::size_t const zero_node = n;
  UnionFind uf(n + 1);
  std::vector<Letter> result;
  for (std::size_t i = 0; i < n; ++i) {
    Word const& w = t.words_[i];
    for (auto const& rule : rules) {
      if (!rule.target) {
        bool hit = false;
        enumerate_matches(rule.source, w, [&](Match const&) {
          hit = true;
          return false;
        });
        if (hit) {
          uf.unite(i, zero_node);
        }
        continue;
      }
      auto const firsts = rule.source.first_occurrences();
      std::vector<std::size_t> slot;
      for (auto l : rule.target->letters()) {
        slot.push_back(static_cast<std::size_t>(
            std::find(firsts.begin(), firsts.end(), l) - firsts.begin()));
      }
      enumerate_matches(rule.source, w, [&](Match const& m) {
        std::size_t length = w.length() - (m.end - m.begin);
        for (auto s : slot) {
          length += m.image[s].second;
        }
        if (length > t.bound_) {
          if (exact) {
            uf.unite(i, zero_node);
          }
          return true;
        }
        result.assign(w.letters().begin(),
                      w.letters().begin() + static_cast<std::ptrdiff_t>(m.begin));
        for (auto s : slot) {
          auto [off, len] = m.image[s];
          result.insert(result.end(),
                        w.letters().begin() + static_cast<std::ptrdiff_t>(off),
                        w.letters().begin() + static_cast<std::ptrdiff_t>(off + len));
        }
        result.insert(result.end(),
                      w.letters().begin() + static_cast<std::ptrdiff_t>(m.end),
                      w.letters().end());
        uf.unite(i, t.index_.at(key_of(result)));
        return true;
      });
    }
  }

  // Representative: least id in the class.
  std::vector<ClosureTable::Id> least(n + 1, static_cast<ClosureTable::Id>(-1));
  for (std::size_t i = 0; i < n; ++i) {
    auto& l = least[uf.find(i)];
    l = std::min(l, static_cast<ClosureTable::Id>(i));
  }
  std::size_t const zero_root = uf.find(zero_node);
  t.root_.resize(n);
  t.zero_.assign(n, false);
  t.members_.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t const r = uf.find(i);
    t.root_[i] = least[r];
    t.zero_[least[r]] = r == zero_root;
    t.members_[least[r]].push_back(static_cast<ClosureTable::Id>(i));
  }

  if (exact) {
    // The least nilpotency degree: shortest linear word equal to 0.
    for (std::size_t k = 1; k <= t.bound_; ++k) {
      std::vector<Letter> linear(k);
      std::iota(linear.begin(), linear.end(), Letter{0});
      if (t.zero(t.index_.at(key_of(linear)))) {
        if (k < *t.nil_degree_) {
          VarietyPresentation smaller = p;
          smaller.nil_degree = k;
          return build_closure(smaller);
        }
        break;
      }
    }
  }
  return t;
}

std::optional<ClosureTable::Id> ClosureTable::find(Word const& w) const {
  auto it = index_.find(key_of(w.letters()));
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::optional<ClosureTable::Id> ClosureTable::lookup(
    Word const& w, std::vector<Letter> const& map) const {
  if (w.length() > bound_) {
    if (mode_ == ClosureMode::Bounded) {
      throw InvalidArgument("word of length " + std::to_string(w.length()) +
                            " exceeds the bound " + std::to_string(bound_) +
                            " and no nilpotency witness is known");
    }
    return std::nullopt;
  }
  std::vector<Letter> letters(w.letters().begin(), w.letters().end());
  for (auto& l : letters) {
    l = map[l];
  }
  auto it = index_.find(key_of(letters));
  if (it == index_.end()) {
    throw InvalidArgument("word is not over a standard alphabet");
  }
  return it->second;
}

bool ClosureTable::is_zero(Word const& u) const {
  auto id = lookup(u, first_occurrence_map(u));
  return !id || zero(*id);
}

bool ClosureTable::are_equal(Word const& u, Word const& v) const {
  if (u.alphabet() != v.alphabet()) {
    return is_zero(u) && is_zero(v);
  }
  auto const map = first_occurrence_map(u);
  auto a = lookup(u, map);
  auto b = lookup(v, map);
  bool const za = !a || zero(*a);
  bool const zb = !b || zero(*b);
  if (za || zb) {
    return za && zb;
  }
  return root(*a) == root(*b);
}

StabilizerResult ClosureTable::stabilizer(Word const& u) const {
  Word const c = canonical_form(u);
  std::size_t const k = c.alphabet().size();
  if (is_zero(c)) {
    return {Subgroup::symmetric(k), true};
  }
  std::vector<Permutation> fixing;
  for (auto const& sigma : all_permutations(k)) {
    std::vector<Letter> map(sigma.images().begin(), sigma.images().end());
    if (are_equal(c, rename(c, map))) {
      fixing.push_back(sigma);
    }
  }
  return {Subgroup::from_elements(k, std::move(fixing)), false};
}

bool ClosureTable::holds(Identity const& id) const {
  if (id.is_zero_reduced()) {
    return is_zero(id.lhs);
  }
  return are_equal(id.lhs, *id.rhs);
}

nlohmann::json ClosureTable::to_json() const {
  std::map<std::string, std::vector<std::string>> classes;
  std::vector<std::string> zero_set;
  for (auto id : canonical_) {
    if (zero(id)) {
      zero_set.push_back(to_string(words_[id]));
      continue;
    }
    std::vector<std::string> members;
    for (auto m : members_[root(id)]) {
      members.push_back(to_string(words_[m]));
    }
    std::sort(members.begin(), members.end());
    classes.emplace(to_string(words_[id]), std::move(members));
  }
  nlohmann::json out = {
      {"mode", mode_ == ClosureMode::Exact ? "exact" : "bounded"},
      {"bound", bound_},
      {"classes", classes},
      {"zero_set", zero_set},
  };
  out["nil_degree"] = nil_degree_ ? nlohmann::json(*nil_degree_) : nlohmann::json();
  return out;
}

}  // namespace modvar
