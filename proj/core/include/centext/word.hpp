#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace centext {

using BigInt = mpz_class;

enum class GenKind : std::uint8_t { ordinary, central };

// a_i (ordinary) or d_i (central); indices are 1-based.
struct Generator {
  GenKind kind = GenKind::ordinary;
  int index = 1;

  friend auto operator<=>(const Generator&, const Generator&) = default;
};

constexpr Generator ordinary(int i) { return {GenKind::ordinary, i}; }
constexpr Generator central(int i) { return {GenKind::central, i}; }

// a..z for ordinary indices 1..26, g27, g28, ... beyond; d1, d2, ... for
// central generators.
std::string generator_name(Generator g);
Generator parse_generator(std::string_view token);

struct Syllable {
  Generator gen;
  BigInt exp;

  friend bool operator==(const Syllable& x, const Syllable& y) {
    return x.gen == y.gen && x.exp == y.exp;
  }
};

// A single letter g or g^-1; the unit of coset tracing and shortlex order.
struct Letter {
  Generator gen;
  bool inverse = false;

  Letter inverted() const { return {gen, !inverse}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

// Letters are ordered a < a^-1 < b < b^-1 < ... < d1 < d1^-1 < ...
bool letter_less(const Letter& x, const Letter& y);

// Freely reduced word in syllable (run-length) form. Adjacent syllables never
// share a generator and no exponent is zero; the empty word is the identity.
class Word {
 public:
  Word() = default;

  static Word from_syllables(std::vector<Syllable> raw);
  static Word from_letters(const std::vector<Letter>& letters);
  static Word gen(Generator g, long exp = 1);

  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool empty() const { return syllables_.empty(); }
  BigInt length() const;
  std::vector<Letter> letters() const;

  bool uses_only(GenKind kind) const;
  bool uses(GenKind kind) const;
  // Largest ordinary/central index referenced, 0 if none.
  int max_index(GenKind kind) const;
  // Total exponent of g.
  BigInt exponent_sum(Generator g) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend Word reduce(std::vector<Syllable> raw);

 private:
  explicit Word(std::vector<Syllable> reduced) : syllables_(std::move(reduced)) {}

  std::vector<Syllable> syllables_;
};

Word reduce(std::vector<Syllable> raw);
Word multiply(const Word& u, const Word& v);
Word invert(const Word& w);
Word power(const Word& w, long k);
// [u, v] = u^-1 v^-1 u v
Word commutator(const Word& u, const Word& v);

inline Word operator*(const Word& u, const Word& v) { return multiply(u, v); }

struct CyclicReduction {
  Word core;
  Word conjugator;
};

// w = conjugator * core * conjugator^-1 with core cyclically reduced.
CyclicReduction cyclic_reduce(const Word& w);

// Shortlex order on letter sequences under letter_less.
bool shortlex_less(const Word& u, const Word& v);

// Cyclically reduced, non-proper-power words over a_1..a_m of length 1..L,
// one shortlex-minimal representative per class under cyclic shift and
// inversion, listed in shortlex order.
std::vector<Word> enumerate_periods(int m, int max_length);

// Text syntax: whitespace-separated tokens `g` or `g^k`, k a nonzero integer.
// The token `1` (or an empty string) denotes the identity.
Word parse_word(std::string_view text);
std::string to_string(const Word& w);

}  // namespace centext
