#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace gzoo {

/// One signed generator symbol. Codes are laid out so that the inverse of a
/// letter is `code ^ 1`: 0 = a, 1 = a^-1, 2 = b, 3 = b^-1. Coset tables use the
/// same code as their column index.
class Letter {
 public:
  static constexpr int kCount = 4;

  constexpr Letter() = default;
  constexpr explicit Letter(std::uint8_t code) : code_(code) {}
  static constexpr Letter of(int generator, bool inverse) {
    return Letter(static_cast<std::uint8_t>(2 * generator + (inverse ? 1 : 0)));
  }

  constexpr int code() const { return code_; }
  constexpr int generator() const { return code_ >> 1; }
  constexpr bool is_inverse() const { return (code_ & 1) != 0; }
  constexpr Letter inverse() const { return Letter(code_ ^ 1); }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  std::uint8_t code_ = 0;
};

/// Element of the free group on two generators, kept freely reduced.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);
  Word(std::initializer_list<Letter> letters)
      : Word(std::vector<Letter>(letters)) {}

  static Word generator(int g) { return Word{Letter::of(g, false)}; }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  Word inverse() const;
  Word power(long exponent) const;
  /// x^-1 y^-1 x y
  static Word commutator(const Word& x, const Word& y);

  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Free reduction on a raw letter sequence. Exposed for property tests.
std::vector<Letter> freely_reduce(std::vector<Letter> letters);

/// Concatenated letters with uppercase for inverses and `^k` for runs, e.g.
/// "a^2 b" -> "a^2b". The identity word prints as "1".
std::string format_word(const Word& w, char first_name = 'a',
                        char second_name = 'b');

}  // namespace gzoo
