#include <algorithm>

#include "modvar/word.hpp"

namespace modvar {

namespace {

class MatchSearch {
 public:
  MatchSearch(Word const& pattern, Word const& text,
              std::function<bool(Match const&)> const& visit)
      : pattern_(pattern), text_(text), visit_(visit) {
    auto const firsts = pattern.first_occurrences();
    index_.reserve(pattern.length());
    for (auto l : pattern.letters()) {
      index_.push_back(static_cast<std::size_t>(
          std::find(firsts.begin(), firsts.end(), l) - firsts.begin()));
    }
    match_.image.assign(firsts.size(), {0, 0});
    assigned_.assign(firsts.size(), false);
  }

  // Returns false once visit asked to stop.
  bool from(std::size_t begin) {
    match_.begin = begin;
    return step(0, begin);
  }

 private:
  bool step(std::size_t p, std::size_t t) {
    if (p == pattern_.length()) {
      match_.end = t;
      return visit_(match_);
    }
    std::size_t const v = index_[p];
    std::size_t const remaining_positions = pattern_.length() - p - 1;
    if (assigned_[v]) {
      auto [off, len] = match_.image[v];
      if (t + len + remaining_positions > text_.length()) {
        return true;
      }
      for (std::size_t i = 0; i < len; ++i) {
        if (text_[t + i] != text_[off + i]) {
          return true;
        }
      }
      return step(p + 1, t + len);
    }
    assigned_[v] = true;
    for (std::size_t len = 1; t + len + remaining_positions <= text_.length();
         ++len) {
      match_.image[v] = {t, len};
      if (!step(p + 1, t + len)) {
        assigned_[v] = false;
        return false;
      }
    }
    assigned_[v] = false;
    return true;
  }

  Word const& pattern_;
  Word const& text_;
  std::function<bool(Match const&)> const& visit_;
  std::vector<std::size_t> index_;  // pattern position -> letter slot
  std::vector<bool> assigned_;
  Match match_;
};

}  // namespace

void enumerate_matches_at(Word const& pattern, Word const& text,
                          std::size_t begin,
                          std::function<bool(Match const&)> const& visit) {
  if (begin + pattern.length() > text.length()) {
    return;
  }
  MatchSearch(pattern, text, visit).from(begin);
}

void enumerate_matches(Word const& pattern, Word const& text,
                       std::function<bool(Match const&)> const& visit) {
  if (pattern.length() > text.length()) {
    return;
  }
  MatchSearch search(pattern, text, visit);
  for (std::size_t begin = 0; begin + pattern.length() <= text.length();
       ++begin) {
    if (!search.from(begin)) {
      return;
    }
  }
}

bool leq(Word const& u, Word const& v) {
  bool found = false;
  enumerate_matches(u, v, [&](Match const&) {
    found = true;
    return false;
  });
  return found;
}

bool equivalent(Word const& u, Word const& v) {
  return u.length() == v.length() && canonical_form(u) == canonical_form(v);
}

WordRelation compare(Word const& u, Word const& v) {
  if (equivalent(u, v)) {
    return WordRelation::Equivalent;
  }
  bool const uv = leq(u, v);
  bool const vu = leq(v, u);
  if (uv && !vu) {
    return WordRelation::Less;
  }
  if (vu && !uv) {
    return WordRelation::Greater;
  }
  // Mutual <= forces equal length and hence equivalence, handled above.
  return WordRelation::Incomparable;
}

std::string_view to_string(WordRelation r) {
  switch (r) {
    case WordRelation::Equivalent:
      return "equivalent";
    case WordRelation::Less:
      return "less";
    case WordRelation::Greater:
      return "greater";
    case WordRelation::Incomparable:
      return "incomparable";
  }
  return "incomparable";
}

bool is_substitutive(Word const& u, Word const& v) {
  if (u.length() != v.length() || u.alphabet() != v.alphabet()) {
    return false;
  }
  return canonical_form(u) == canonical_form(v);
}

}  // namespace modvar
