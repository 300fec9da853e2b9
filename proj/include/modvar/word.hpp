#ifndef MODVAR_WORD_HPP
#define MODVAR_WORD_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace modvar {

using Letter = std::uint16_t;

// A nonempty word over letters identified by small integers. Letter names
// only matter for parsing and printing; see LetterTable.
class Word {
 public:
  // Throws InvalidArgument when letters is empty.
  explicit Word(std::vector<Letter> letters);
  Word(std::initializer_list<Letter> letters)
      : Word(std::vector<Letter>(letters)) {}

  std::size_t length() const noexcept { return letters_.size(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<Letter const> letters() const noexcept { return letters_; }

  // Distinct letters, sorted.
  std::vector<Letter> alphabet() const;
  // Distinct letters in order of first occurrence.
  std::vector<Letter> first_occurrences() const;

  // Factor [begin, end); throws InvalidArgument if empty or out of range.
  Word factor(std::size_t begin, std::size_t end) const;

  friend bool operator==(Word const&, Word const&) = default;
  friend std::strong_ordering operator<=>(Word const& a, Word const& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<Letter> letters_;
};

Word concat(Word const& a, Word const& b);
// Concatenation with optional empty flanks.
Word concat(std::optional<Word> const& left, Word const& middle,
            std::optional<Word> const& right);

// Maps letter names to ids in order of first registration.
class LetterTable {
 public:
  Letter intern(std::string_view name);
  std::optional<Letter> find(std::string_view name) const;
  std::string const& name(Letter letter) const;
  std::size_t size() const noexcept { return names_.size(); }

 private:
  std::vector<std::string> names_;
};

// Name of letter i in the fixed canonical alphabet a, b, ..., z, a26, ...
std::string canonical_letter_name(Letter letter);

// Parses "x^2 y z": whitespace-separated tokens [a-z][a-z0-9]* with an
// optional ^k power. Throws ParseError; columns are reported relative to
// column_offset (1-based column of text[0]) on the given line.
Word parse_word(std::string_view text, LetterTable& table, std::size_t line = 0,
                std::size_t column_offset = 1);

// "x^2 y z" with names from the table.
std::string to_string(Word const& w, LetterTable const& table);
// Canonical-alphabet spelling without separators, "aabc".
std::string to_string(Word const& w);
// Canonical-alphabet spelling with powers, "a^2 b c".
std::string to_power_string(Word const& w);

// Image of each letter; letters without an image are undefined.
class Substitution {
 public:
  Substitution() = default;
  void set(Letter letter, Word image);
  std::optional<Word> const& image(Letter letter) const;
  bool defined_on(Letter letter) const;

 private:
  std::vector<std::optional<Word>> images_;
};

// Throws InvalidArgument if some letter of w has no image.
Word apply(Substitution const& s, Word const& w);

// Renames letter i to map[i]; letters outside the map are kept.
Word rename(Word const& w, std::span<Letter const> map);

// Relabels letters by order of first occurrence, starting at 0.
Word canonical_form(Word const& w);

// True iff letters 0..k-1 first occur in that order.
bool is_canonical(Word const& w);

// An occurrence of a substitution instance of a pattern inside a text:
// text[begin, end) = xi(pattern). image[i] is the (offset, length) in text of
// the image of the i-th letter of pattern.first_occurrences().
struct Match {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::vector<std::pair<std::size_t, std::size_t>> image;
};

// Calls visit for every match of pattern inside text (every factor and every
// substitution), in order of begin, then of image lengths. Stops early when
// visit returns false.
void enumerate_matches(Word const& pattern, Word const& text,
                       std::function<bool(Match const&)> const& visit);

// Same, restricted to matches starting at position begin.
void enumerate_matches_at(Word const& pattern, Word const& text,
                          std::size_t begin,
                          std::function<bool(Match const&)> const& visit);

// u <= v: some factor of v is a substitution instance of u.
bool leq(Word const& u, Word const& v);

// v is obtained from u by a bijective letter renaming.
bool equivalent(Word const& u, Word const& v);

enum class WordRelation { Equivalent, Less, Greater, Incomparable };

WordRelation compare(Word const& u, Word const& v);
std::string_view to_string(WordRelation r);

// alphabet(u) = alphabet(v) and a bijection of that alphabet carries u to v
// letter by letter.
bool is_substitutive(Word const& u, Word const& v);

// All canonical words with length in [1, max_length] and at most max_letters
// distinct letters, ordered by length and then lexicographically.
std::vector<Word> canonical_words(std::size_t max_length,
                                  std::size_t max_letters = SIZE_MAX);

// All words of length exactly length over letters 0..letters-1, in
// lexicographic order.
std::vector<Word> all_words(std::size_t letters, std::size_t length);

}  // namespace modvar

#endif  // MODVAR_WORD_HPP
