#include <algorithm>

#include "modvar/lattice.hpp"

namespace modvar {

namespace {

using Element = FiniteLattice::Element;

bool matches_query(Embedding const& e, SublatticeQuery const& q) {
  if (q.bottom && e[0] != *q.bottom) {
    return false;
  }
  if (q.top && e[4] != *q.top) {
    return false;
  }
  for (auto x : q.middle) {
    if (x != e[1] && x != e[2] && x != e[3]) {
      return false;
    }
  }
  return true;
}

// Calls visit(e) for every embedding in index order; stops when visit
// returns false.
template <typename Visit>
void search(FiniteLattice const& l, SublatticePattern pattern,
            SublatticeQuery const& q, Visit visit) {
  std::size_t const m = l.size();
  auto allowed_middle = [&](Element x) {
    return (!q.bottom || l.less(*q.bottom, x)) && (!q.top || l.less(x, *q.top));
  };

  if (pattern == SublatticePattern::M3) {
    for (Element a = 0; a < m; ++a) {
      if (!allowed_middle(a)) {
        continue;
      }
      for (Element b = a + 1; b < m; ++b) {
        if (!allowed_middle(b) || l.comparable(a, b)) {
          continue;
        }
        Element const lo = l.meet(a, b);
        Element const hi = l.join(a, b);
        if ((q.bottom && lo != *q.bottom) || (q.top && hi != *q.top)) {
          continue;
        }
        for (Element c = b + 1; c < m; ++c) {
          if (l.meet(a, c) != lo || l.meet(b, c) != lo || l.join(a, c) != hi ||
              l.join(b, c) != hi || l.comparable(a, c) || l.comparable(b, c)) {
            continue;
          }
          Embedding e{lo, a, b, c, hi};
          if (matches_query(e, q) && !visit(e)) {
            return;
          }
        }
      }
    }
    return;
  }

  for (Element low = 0; low < m; ++low) {
    if (!allowed_middle(low)) {
      continue;
    }
    for (Element high = 0; high < m; ++high) {
      if (!l.less(low, high) || !allowed_middle(high)) {
        continue;
      }
      for (Element side = 0; side < m; ++side) {
        if (l.comparable(side, low) || l.comparable(side, high)) {
          continue;
        }
        Element const lo = l.meet(side, high);
        Element const hi = l.join(side, low);
        if (l.meet(side, low) != lo || l.join(side, high) != hi) {
          continue;
        }
        Embedding e{lo, low, high, side, hi};
        if (matches_query(e, q) && !visit(e)) {
          return;
        }
      }
    }
  }
}

}  // namespace

std::optional<Embedding> find_sublattice(FiniteLattice const& lattice,
                                         SublatticePattern pattern,
                                         SublatticeQuery const& query) {
  std::optional<Embedding> found;
  search(lattice, pattern, query, [&](Embedding const& e) {
    found = e;
    return false;
  });
  return found;
}

std::vector<Embedding> find_all_sublattices(FiniteLattice const& lattice,
                                            SublatticePattern pattern,
                                            SublatticeQuery const& query) {
  std::vector<Embedding> out;
  search(lattice, pattern, query, [&](Embedding const& e) {
    out.push_back(e);
    return true;
  });
  return out;
}

bool is_sublattice(FiniteLattice const& l, SublatticePattern pattern,
                   Embedding const& e) {
  for (auto x : e) {
    if (x >= l.size()) {
      return false;
    }
  }
  auto const [lo, p, q, r, hi] = e;
  if (pattern == SublatticePattern::M3) {
    std::array<Element, 3> atoms{p, q, r};
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        if (atoms[i] == atoms[j] || l.comparable(atoms[i], atoms[j]) ||
            l.meet(atoms[i], atoms[j]) != lo || l.join(atoms[i], atoms[j]) != hi) {
          return false;
        }
      }
    }
    return true;
  }
  // N5: low = p, high = q, side = r.
  return l.less(p, q) && !l.comparable(r, p) && !l.comparable(r, q) &&
         l.meet(r, p) == lo && l.meet(r, q) == lo && l.join(r, p) == hi &&
         l.join(r, q) == hi;
}

}  // namespace modvar
