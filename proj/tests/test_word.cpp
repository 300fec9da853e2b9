#include <doctest.h>

#include <map>

#include "modvar/error.hpp"
#include "modvar/word.hpp"

using namespace modvar;

namespace {

Word w(std::string_view text) {
  LetterTable t;
  return parse_word(text, t);
}

// Backtracking matcher: assign each letter of u a non-empty factor so that
// u's image is exactly v[begin, end).
bool match_from(Word const& u, std::size_t i, Word const& v, std::size_t pos,
                std::size_t end, std::map<Letter, std::pair<std::size_t, std::size_t>>& img) {
  if (i == u.length()) {
    return pos == end;
  }
  Letter const x = u[i];
  if (auto it = img.find(x); it != img.end()) {
    auto [s, len] = it->second;
    if (pos + len > end) {
      return false;
    }
    for (std::size_t k = 0; k < len; ++k) {
      if (v[s + k] != v[pos + k]) {
        return false;
      }
    }
    return match_from(u, i + 1, v, pos + len, end, img);
  }
  for (std::size_t len = 1; pos + len <= end; ++len) {
    img[x] = {pos, len};
    if (match_from(u, i + 1, v, pos + len, end, img)) {
      img.erase(x);
      return true;
    }
  }
  img.erase(x);
  return false;
}

bool oracle_leq(Word const& u, Word const& v) {
  for (std::size_t b = 0; b < v.length(); ++b) {
    for (std::size_t e = b + 1; e <= v.length(); ++e) {
      std::map<Letter, std::pair<std::size_t, std::size_t>> img;
      if (match_from(u, 0, v, b, e, img)) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace

TEST_CASE("word syntax") {
  LetterTable t;
  Word const u = parse_word("x^2 y z", t);
  CHECK(u.length() == 4);
  CHECK(to_string(u, t) == "x^2 y z");
  CHECK(to_string(u) == "aabc");
  CHECK(to_power_string(u) == "a^2 b c");
  CHECK(parse_word("x1 x10", t).alphabet().size() == 2);
  CHECK_THROWS_AS(parse_word("x Y", t), ParseError);
  CHECK_THROWS_AS(parse_word("x^", t), ParseError);
  CHECK_THROWS_AS(parse_word("", t), ParseError);
  try {
    parse_word("x Y", t, 4, 1);
  } catch (ParseError const& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 3);
  }
}

TEST_CASE("canonical forms") {
  CHECK(canonical_form(w("z y z x")) == w("x y x z"));
  CHECK(is_canonical(Word({0, 1, 0})));
  CHECK_FALSE(is_canonical(Word({1, 0})));
  std::size_t by_length[6] = {};
  for (auto const& u : canonical_words(5)) {
    ++by_length[u.length()];
  }
  std::size_t const bell[] = {0, 1, 2, 5, 15, 52};
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(by_length[n] == bell[n]);
  }
  CHECK(all_words(2, 3).size() == 8);
}

TEST_CASE("documented word relations") {
  CHECK(compare(w("x x y z"), w("x y z z")) == WordRelation::Incomparable);
  CHECK(compare(w("x y"), w("x y z")) == WordRelation::Less);
  CHECK(compare(w("x y z"), w("x")) == WordRelation::Greater);
  CHECK(compare(w("x y x"), w("y x y")) == WordRelation::Equivalent);
  CHECK(leq(w("x^2"), w("y x y x z")));
  CHECK_FALSE(leq(w("x^2"), w("x y x")));
  CHECK(is_substitutive(w("x y"), w("y x")));
  CHECK_FALSE(is_substitutive(w("x x y"), w("x y x")));
  CHECK(equivalent(w("x y"), w("z t")));
  CHECK_FALSE(equivalent(w("x y"), w("x x")));
}

TEST_CASE("leq agrees with the backtracking oracle up to length 5") {
  auto const words = canonical_words(5);
  for (auto const& u : words) {
    for (auto const& v : words) {
      CHECK(leq(u, v) == oracle_leq(u, v));
    }
  }
}

TEST_CASE("relation axioms on canonical words") {
  auto const words = canonical_words(5);
  for (auto const& u : words) {
    CHECK(leq(u, u));
    CHECK(compare(u, u) == WordRelation::Equivalent);
    for (auto const& v : words) {
      auto const r = compare(u, v);
      auto const back = compare(v, u);
      CHECK((r == WordRelation::Less) == (back == WordRelation::Greater));
      CHECK((r == WordRelation::Incomparable) == (back == WordRelation::Incomparable));
      // Distinct canonical words are never equivalent.
      CHECK((r == WordRelation::Equivalent) == (u == v));
    }
  }
  auto const short_words = canonical_words(4);
  for (auto const& a : short_words) {
    for (auto const& b : short_words) {
      if (!leq(a, b)) {
        continue;
      }
      for (auto const& c : short_words) {
        if (leq(b, c)) {
          CHECK(leq(a, c));
        }
      }
    }
  }
}

TEST_CASE("matches enumerate every occurrence") {
  std::size_t count = 0;
  enumerate_matches(w("x y"), w("a b c"), [&](Match const& m) {
    CHECK(m.end - m.begin >= 2);
    ++count;
    return true;
  });
  // ab, bc, abc split two ways.
  CHECK(count == 4);
  Substitution s;
  s.set(0, w("x y"));
  s.set(1, w("x"));
  CHECK(apply(s, Word({0, 1, 0})) == Word({0, 1, 0, 0, 1}));
  CHECK_THROWS_AS(apply(Substitution{}, Word({0})), InvalidArgument);
}
