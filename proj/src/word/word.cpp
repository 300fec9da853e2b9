#include <algorithm>
#include <cctype>

#include "modvar/error.hpp"
#include "modvar/word.hpp"

namespace modvar {

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) {
    throw InvalidArgument("words are nonempty");
  }
}

std::vector<Letter> Word::alphabet() const {
  std::vector<Letter> out(letters_);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Letter> Word::first_occurrences() const {
  std::vector<Letter> out;
  for (auto l : letters_) {
    if (std::find(out.begin(), out.end(), l) == out.end()) {
      out.push_back(l);
    }
  }
  return out;
}

Word Word::factor(std::size_t begin, std::size_t end) const {
  if (begin >= end || end > letters_.size()) {
    throw InvalidArgument("empty or out-of-range factor");
  }
  return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(begin),
                                  letters_.begin() + static_cast<std::ptrdiff_t>(end)));
}

Word concat(Word const& a, Word const& b) {
  std::vector<Letter> out(a.letters().begin(), a.letters().end());
  out.insert(out.end(), b.letters().begin(), b.letters().end());
  return Word(std::move(out));
}

Word concat(std::optional<Word> const& left, Word const& middle,
            std::optional<Word> const& right) {
  std::vector<Letter> out;
  if (left) {
    out.insert(out.end(), left->letters().begin(), left->letters().end());
  }
  out.insert(out.end(), middle.letters().begin(), middle.letters().end());
  if (right) {
    out.insert(out.end(), right->letters().begin(), right->letters().end());
  }
  return Word(std::move(out));
}

Letter LetterTable::intern(std::string_view name) {
  if (auto found = find(name)) {
    return *found;
  }
  names_.emplace_back(name);
  return static_cast<Letter>(names_.size() - 1);
}

std::optional<Letter> LetterTable::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) {
      return static_cast<Letter>(i);
    }
  }
  return std::nullopt;
}

std::string const& LetterTable::name(Letter letter) const {
  if (letter >= names_.size()) {
    throw InvalidArgument("letter " + std::to_string(letter) +
                          " has no registered name");
  }
  return names_[letter];
}

std::string canonical_letter_name(Letter letter) {
  if (letter < 26) {
    return std::string(1, static_cast<char>('a' + letter));
  }
  return "a" + std::to_string(letter);
}

Word parse_word(std::string_view text, LetterTable& table, std::size_t line,
                std::size_t column_offset) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  auto fail = [&](std::string const& msg, std::size_t at) {
    throw ParseError(msg, line, column_offset + at);
  };
  auto is_lower = [](char c) { return c >= 'a' && c <= 'z'; };
  auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (!is_lower(c)) {
      fail(std::string("unexpected character '") + c + "' in word", i);
    }
    std::size_t start = i;
    while (i < text.size() && (is_lower(text[i]) || is_digit(text[i]))) {
      ++i;
    }
    Letter letter = table.intern(text.substr(start, i - start));
    std::size_t power = 1;
    if (i < text.size() && text[i] == '^') {
      std::size_t exp_start = ++i;
      while (i < text.size() && is_digit(text[i])) {
        ++i;
      }
      if (i == exp_start) {
        fail("expected an exponent after '^'", exp_start);
      }
      std::string digits(text.substr(exp_start, i - exp_start));
      if (digits.size() > 3 || std::stoul(digits) == 0) {
        fail("exponent must be between 1 and 999", exp_start);
      }
      power = std::stoul(digits);
    }
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
      fail(std::string("unexpected character '") + text[i] + "' in word", i);
    }
    letters.insert(letters.end(), power, letter);
  }
  if (letters.empty()) {
    fail("empty word", 0);
  }
  return Word(std::move(letters));
}

namespace {

template <typename Name>
std::string power_string(Word const& w, Name name) {
  std::string out;
  std::size_t i = 0;
  while (i < w.length()) {
    std::size_t j = i;
    while (j < w.length() && w[j] == w[i]) {
      ++j;
    }
    if (!out.empty()) {
      out += ' ';
    }
    out += name(w[i]);
    if (j - i > 1) {
      out += '^' + std::to_string(j - i);
    }
    i = j;
  }
  return out;
}

}  // namespace

std::string to_string(Word const& w, LetterTable const& table) {
  return power_string(w, [&](Letter l) { return table.name(l); });
}

std::string to_string(Word const& w) {
  std::string out;
  for (auto l : w.letters()) {
    out += canonical_letter_name(l);
  }
  return out;
}

std::string to_power_string(Word const& w) {
  return power_string(w, canonical_letter_name);
}

void Substitution::set(Letter letter, Word image) {
  if (letter >= images_.size()) {
    images_.resize(letter + 1);
  }
  images_[letter] = std::move(image);
}

std::optional<Word> const& Substitution::image(Letter letter) const {
  static std::optional<Word> const none;
  return letter < images_.size() ? images_[letter] : none;
}

bool Substitution::defined_on(Letter letter) const {
  return image(letter).has_value();
}

Word apply(Substitution const& s, Word const& w) {
  std::vector<Letter> out;
  for (auto l : w.letters()) {
    auto const& img = s.image(l);
    if (!img) {
      throw InvalidArgument("substitution undefined on letter " +
                            std::to_string(l));
    }
    out.insert(out.end(), img->letters().begin(), img->letters().end());
  }
  return Word(std::move(out));
}

Word rename(Word const& w, std::span<Letter const> map) {
  std::vector<Letter> out(w.letters().begin(), w.letters().end());
  for (auto& l : out) {
    if (l < map.size()) {
      l = map[l];
    }
  }
  return Word(std::move(out));
}

Word canonical_form(Word const& w) {
  std::vector<Letter> seen;
  std::vector<Letter> out;
  out.reserve(w.length());
  for (auto l : w.letters()) {
    auto it = std::find(seen.begin(), seen.end(), l);
    if (it == seen.end()) {
      seen.push_back(l);
      out.push_back(static_cast<Letter>(seen.size() - 1));
    } else {
      out.push_back(static_cast<Letter>(it - seen.begin()));
    }
  }
  return Word(std::move(out));
}

bool is_canonical(Word const& w) {
  Letter next = 0;
  for (auto l : w.letters()) {
    if (l > next) {
      return false;
    }
    if (l == next) {
      ++next;
    }
  }
  return true;
}

}  // namespace modvar
