#include <algorithm>

#include "modvar/word.hpp"

namespace modvar {

namespace {

void extend(std::vector<Letter>& prefix, Letter next_new, std::size_t length,
            std::size_t max_letters, std::vector<Word>& out) {
  if (prefix.size() == length) {
    out.emplace_back(prefix);
    return;
  }
  std::size_t const limit =
      std::min<std::size_t>(next_new + 1, max_letters);
  for (Letter l = 0; l < limit; ++l) {
    prefix.push_back(l);
    extend(prefix, l == next_new ? static_cast<Letter>(next_new + 1) : next_new,
           length, max_letters, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Word> canonical_words(std::size_t max_length,
                                  std::size_t max_letters) {
  std::vector<Word> out;
  std::vector<Letter> prefix;
  for (std::size_t len = 1; len <= max_length; ++len) {
    extend(prefix, 0, len, max_letters, out);
  }
  return out;
}

std::vector<Word> all_words(std::size_t letters, std::size_t length) {
  std::vector<Word> out;
  if (letters == 0 || length == 0) {
    return out;
  }
  std::vector<Letter> w(length, 0);
  while (true) {
    out.emplace_back(w);
    std::size_t i = length;
    while (i > 0 && w[i - 1] + 1u == letters) {
      w[--i] = 0;
    }
    if (i == 0) {
      break;
    }
    ++w[i - 1];
  }
  return out;
}

}  // namespace modvar
