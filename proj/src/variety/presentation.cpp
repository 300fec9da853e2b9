#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>

#include "modvar/error.hpp"
#include "modvar/variety.hpp"

namespace modvar {

Identity Identity::equation(Word u, Word v) {
  if (u == v) {
    throw InvalidArgument("vacuous identity: both sides are the same word");
  }
  return Identity{std::move(u), std::move(v)};
}

Identity Identity::zero_reduced(Word w) {
  return Identity{std::move(w), std::nullopt};
}

bool Identity::is_nil_witness() const {
  return is_zero_reduced() && lhs.alphabet().size() == lhs.length();
}

std::string_view to_string(JoinFlag flag) {
  switch (flag) {
    case JoinFlag::None:
      return "none";
    case JoinFlag::T:
      return "T";
    case JoinFlag::SL:
      return "SL";
  }
  return "none";
}

bool VarietyPresentation::purely_zero_reduced() const {
  return std::all_of(identities.begin(), identities.end(),
                     [](Identity const& id) { return id.is_zero_reduced(); });
}

std::string VarietyPresentation::to_string(Identity const& id) const {
  std::string out = modvar::to_string(id.lhs, letters) + " = ";
  out += id.rhs ? modvar::to_string(*id.rhs, letters) : "0";
  return out;
}

std::size_t bound_cap_from_environment() {
  char const* raw = std::getenv("MODVAR_BOUND_CAP");
  if (raw == nullptr || *raw == '\0') {
    return 8;
  }
  char* end = nullptr;
  long value = std::strtol(raw, &end, 10);
  if (*end != '\0' || value < 1) {
    return 8;
  }
  return std::min<std::size_t>(static_cast<std::size_t>(value), max_nil_degree);
}

namespace {

std::string_view trim(std::string_view s, std::size_t& offset) {
  offset = 0;
  while (offset < s.size() && (s[offset] == ' ' || s[offset] == '\t' ||
                               s[offset] == '\r')) {
    ++offset;
  }
  std::size_t end = s.size();
  while (end > offset &&
         (s[end - 1] == ' ' || s[end - 1] == '\t' || s[end - 1] == '\r')) {
    --end;
  }
  return s.substr(offset, end - offset);
}

}  // namespace

VarietyPresentation parse_presentation(std::string_view text,
                                       ParseOptions const& options) {
  VarietyPresentation p;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      nl = text.size();
    }
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::size_t lead = 0;
    if (trim(line, lead).empty()) {
      continue;
    }
    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("expected 'LHS = RHS'", line_no, lead + 1);
    }
    if (line.find('=', eq + 1) != std::string_view::npos) {
      throw ParseError("more than one '=' on a line", line_no,
                       line.find('=', eq + 1) + 1);
    }
    std::size_t lhs_off = 0;
    std::size_t rhs_off = 0;
    std::string_view lhs = trim(line.substr(0, eq), lhs_off);
    std::string_view rhs = trim(line.substr(eq + 1), rhs_off);
    rhs_off += eq + 1;
    if (lhs.empty()) {
      throw ParseError("missing left-hand side", line_no, eq + 1);
    }
    if (rhs.empty()) {
      throw ParseError("missing right-hand side", line_no, eq + 2);
    }
    if (lhs == "0" && rhs == "0") {
      throw ParseError("vacuous identity 0 = 0", line_no, lhs_off + 1);
    }
    Identity id = [&] {
      if (rhs == "0") {
        return Identity::zero_reduced(
            parse_word(lhs, p.letters, line_no, lhs_off + 1));
      }
      if (lhs == "0") {
        return Identity::zero_reduced(
            parse_word(rhs, p.letters, line_no, rhs_off + 1));
      }
      Word u = parse_word(lhs, p.letters, line_no, lhs_off + 1);
      Word v = parse_word(rhs, p.letters, line_no, rhs_off + 1);
      if (u == v) {
        throw ParseError("vacuous identity: both sides are the same word",
                         line_no, lhs_off + 1);
      }
      return Identity::equation(std::move(u), std::move(v));
    }();
    id.line = line_no;
    p.identities.push_back(std::move(id));
  }
  if (p.identities.empty()) {
    throw ParseError("no identities in input", 0, 0);
  }

  for (auto const& id : p.identities) {
    if (id.is_nil_witness() &&
        (!p.nil_degree || id.lhs.length() < *p.nil_degree)) {
      p.nil_degree = id.lhs.length();
      p.explicit_witness = true;
    }
  }
  if (!p.nil_degree) {
    if (options.strict) {
      throw ParseError("missing nilpotency witness 'x1 x2 ... xn = 0'", 0, 0);
    }
    p.nil_degree = detect_nil_degree(p, options.bound_cap);
  }
  if (p.nil_degree && *p.nil_degree > max_nil_degree) {
    // The closure cannot go this far; fall back to bounded checking.
    p.nil_degree.reset();
    p.explicit_witness = false;
  }
  return p;
}

namespace {

// Rewrite steps on plain words, for the nilpotency probe. Letters of the
// target side that do not occur in the source side are replaced by letter 0.
void successors(std::vector<Identity> const& ids, Word const& w,
                std::size_t max_length, std::vector<Word>& out, bool& zero) {
  for (auto const& id : ids) {
    if (id.is_zero_reduced()) {
      enumerate_matches(id.lhs, w, [&](Match const&) {
        zero = true;
        return false;
      });
      if (zero) {
        return;
      }
      continue;
    }
    for (int dir = 0; dir < 2; ++dir) {
      Word const& s = dir == 0 ? id.lhs : *id.rhs;
      Word const& t = dir == 0 ? *id.rhs : id.lhs;
      auto const firsts = s.first_occurrences();
      enumerate_matches(s, w, [&](Match const& m) {
        std::vector<Letter> r(w.letters().begin(),
                              w.letters().begin() + static_cast<std::ptrdiff_t>(m.begin));
        for (auto l : t.letters()) {
          auto it = std::find(firsts.begin(), firsts.end(), l);
          if (it == firsts.end()) {
            r.push_back(0);
            continue;
          }
          auto [off, len] = m.image[static_cast<std::size_t>(it - firsts.begin())];
          r.insert(r.end(), w.letters().begin() + static_cast<std::ptrdiff_t>(off),
                   w.letters().begin() + static_cast<std::ptrdiff_t>(off + len));
        }
        r.insert(r.end(), w.letters().begin() + static_cast<std::ptrdiff_t>(m.end),
                 w.letters().end());
        if (r.size() <= max_length) {
          out.emplace_back(std::move(r));
        }
        return true;
      });
    }
  }
}

bool probe_zero(std::vector<Identity> const& ids, std::size_t k,
                std::size_t max_length, std::size_t max_states) {
  std::vector<Letter> linear(k);
  for (std::size_t i = 0; i < k; ++i) {
    linear[i] = static_cast<Letter>(i);
  }
  std::set<Word> seen{Word(linear)};
  std::deque<Word> queue{Word(linear)};
  std::vector<Word> next;
  while (!queue.empty()) {
    Word w = std::move(queue.front());
    queue.pop_front();
    bool zero = false;
    next.clear();
    successors(ids, w, max_length, next, zero);
    if (zero) {
      return true;
    }
    for (auto& n : next) {
      if (seen.size() >= max_states) {
        return false;
      }
      if (seen.insert(n).second) {
        queue.push_back(std::move(n));
      }
    }
  }
  return false;
}

}  // namespace

std::optional<std::size_t> detect_nil_degree(VarietyPresentation const& p,
                                             std::size_t cap) {
  std::optional<std::size_t> witness;
  for (auto const& id : p.identities) {
    if (id.is_nil_witness() && (!witness || id.lhs.length() < *witness)) {
      witness = id.lhs.length();
    }
  }
  if (witness) {
    return witness;
  }
  bool any_zero = std::any_of(p.identities.begin(), p.identities.end(),
                              [](Identity const& id) { return id.is_zero_reduced(); });
  if (!any_zero) {
    return std::nullopt;
  }
  cap = std::min(cap, max_nil_degree);
  for (std::size_t k = 1; k <= cap; ++k) {
    if (probe_zero(p.identities, k, 2 * cap + 2, 100000)) {
      return k;
    }
  }
  return std::nullopt;
}

VarietyPresentation variety_meet(VarietyPresentation const& p1,
                                 VarietyPresentation const& p2) {
  VarietyPresentation out;
  out.join = p1.join;
  for (auto const* p : {&p1, &p2}) {
    std::vector<Letter> map(p->letters.size());
    for (std::size_t l = 0; l < map.size(); ++l) {
      map[l] = out.letters.intern(p->letters.name(static_cast<Letter>(l)));
    }
    for (auto const& id : p->identities) {
      Identity copy{rename(id.lhs, map),
                    id.rhs ? std::optional<Word>(rename(*id.rhs, map))
                           : std::nullopt,
                    0};
      out.identities.push_back(std::move(copy));
    }
  }
  if (p1.nil_degree && p2.nil_degree) {
    out.nil_degree = std::min(*p1.nil_degree, *p2.nil_degree);
  } else {
    out.nil_degree = p1.nil_degree ? p1.nil_degree : p2.nil_degree;
  }
  out.explicit_witness = (p1.explicit_witness && p1.nil_degree == out.nil_degree) ||
                         (p2.explicit_witness && p2.nil_degree == out.nil_degree);
  return out;
}

}  // namespace modvar
