#include "gzoo/word.hpp"

#include <algorithm>
#include <cctype>

namespace gzoo {

std::vector<Letter> freely_reduce(std::vector<Letter> letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (Letter x : letters) {
    if (!out.empty() && out.back() == x.inverse()) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

Word::Word(std::vector<Letter> letters)
    : letters_(freely_reduce(std::move(letters))) {}

Word Word::inverse() const {
  std::vector<Letter> inv;
  inv.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    inv.push_back(it->inverse());
  }
  Word w;
  w.letters_ = std::move(inv);
  return w;
}

Word Word::power(long exponent) const {
  const Word base = exponent < 0 ? inverse() : *this;
  const long times = exponent < 0 ? -exponent : exponent;
  std::vector<Letter> raw;
  raw.reserve(base.size() * static_cast<std::size_t>(times));
  for (long i = 0; i < times; ++i) {
    raw.insert(raw.end(), base.letters_.begin(), base.letters_.end());
  }
  return Word(std::move(raw));
}

Word Word::commutator(const Word& x, const Word& y) {
  return x.inverse() * y.inverse() * x * y;
}

Word& Word::operator*=(const Word& rhs) {
  for (Letter x : rhs.letters_) {
    if (!letters_.empty() && letters_.back() == x.inverse()) {
      letters_.pop_back();
    } else {
      letters_.push_back(x);
    }
  }
  return *this;
}

std::string format_word(const Word& w, char first_name, char second_name) {
  if (w.empty()) return "1";
  std::string out;
  const auto& ls = w.letters();
  std::size_t i = 0;
  while (i < ls.size()) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    const char base = ls[i].generator() == 0 ? first_name : second_name;
    out += ls[i].is_inverse()
               ? static_cast<char>(std::toupper(static_cast<unsigned char>(base)))
               : base;
    if (j - i > 1) {
      out += '^';
      out += std::to_string(j - i);
    }
    i = j;
  }
  return out;
}

}  // namespace gzoo
