#include <algorithm>
#include <set>

#include "doctest.h"
#include "support.hpp"

using namespace centext;

namespace {

Word w(const char* text) { return parse_word(text); }

std::vector<Letter> all_letters(int m) {
  std::vector<Letter> out;
  for (int i = 1; i <= m; ++i) {
    out.push_back({ordinary(i), false});
    out.push_back({ordinary(i), true});
  }
  return out;
}

Word rotate(const Word& x, std::size_t k) {
  auto l = x.letters();
  std::rotate(l.begin(), l.begin() + static_cast<long>(k), l.end());
  return Word::from_letters(l);
}

bool is_proper_power(const Word& x) {
  const auto letters = x.letters();
  const auto n = letters.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d) continue;
    const auto root = Word::from_letters({letters.begin(), letters.begin() + static_cast<long>(d)});
    if (power(root, static_cast<long>(n / d)) == x) return true;
  }
  return false;
}

// Shortlex-least member of the class of x under rotation and inversion.
Word class_rep(const Word& x) {
  Word best = x;
  for (const auto& v : {x, invert(x)})
    for (std::size_t k = 0; k < v.letters().size(); ++k)
      if (shortlex_less(rotate(v, k), best)) best = rotate(v, k);
  return best;
}

// Independent enumeration: all letter strings, filtered and deduplicated.
std::vector<Word> brute_periods(int m, int L) {
  std::set<std::vector<std::pair<int, bool>>> seen;
  std::vector<Word> reps;
  const auto letters = all_letters(m);
  std::vector<std::vector<Letter>> level{{}};
  for (int len = 1; len <= L; ++len) {
    std::vector<std::vector<Letter>> next;
    for (const auto& prefix : level)
      for (const auto& l : letters) {
        auto s = prefix;
        s.push_back(l);
        next.push_back(s);
      }
    level = next;
    for (const auto& s : level) {
      const auto word = Word::from_letters(s);
      if (word.letters().size() != s.size()) continue;  // not reduced
      if (cyclic_reduce(word).core != word) continue;
      if (is_proper_power(word)) continue;
      const auto rep = class_rep(word);
      std::vector<std::pair<int, bool>> key;
      for (const auto& l : rep.letters()) key.emplace_back(l.gen.index, l.inverse);
      if (seen.insert(key).second) reps.push_back(rep);
    }
  }
  std::sort(reps.begin(), reps.end(), shortlex_less);
  return reps;
}

}  // namespace

TEST_CASE("reduce cancels and merges") {
  CHECK(reduce({{ordinary(1), 1}, {ordinary(1), -1}}).empty());
  CHECK(reduce({{ordinary(1), 1}, {ordinary(2), 1}, {ordinary(2), -1}, {ordinary(1), 1}}) == w("a^2"));
  CHECK(reduce({}).empty());
  CHECK(reduce({{ordinary(1), 0}, {ordinary(2), 2}}) == w("b^2"));
}

TEST_CASE("multiply, invert, power") {
  CHECK((w("a") * w("a^-1")).empty());
  CHECK(w("a b") * w("b^-1 c") == w("a c"));
  CHECK(Word() * w("a b") == w("a b"));
  CHECK(invert(w("a b")) == w("b^-1 a^-1"));
  CHECK(invert(Word()).empty());
  CHECK(invert(w("a^2")) == w("a^-2"));
  CHECK(power(w("a b"), 2) == w("a b a b"));
  CHECK(power(w("a"), 3) == w("a^3"));
  CHECK(power(w("a b^-1"), 0).empty());
  CHECK(power(w("a b"), -2) == invert(power(w("a b"), 2)));
}

TEST_CASE("cyclic_reduce") {
  auto r = cyclic_reduce(w("a b a^-1"));
  CHECK(r.core == w("b"));
  CHECK(r.conjugator == w("a"));
  r = cyclic_reduce(w("a b"));
  CHECK(r.core == w("a b"));
  CHECK(r.conjugator.empty());
  r = cyclic_reduce(w("a^2 b a^-2"));
  CHECK(r.core == w("b"));
  CHECK(r.conjugator == w("a^2"));
}

TEST_CASE("letter order and shortlex") {
  CHECK(shortlex_less(w("a"), w("a^-1")));
  CHECK(shortlex_less(w("a^-1"), w("b")));
  CHECK(shortlex_less(w("b^-1"), w("a b")));
  CHECK(shortlex_less(w("b"), w("d1")));
  CHECK_FALSE(shortlex_less(w("a b"), w("a b")));
}

TEST_CASE("period schema examples") {
  CHECK(enumerate_periods(2, 1) == std::vector<Word>{w("a"), w("b")});
  CHECK(enumerate_periods(1, 2) == std::vector<Word>{w("a")});
  CHECK(enumerate_periods(2, 2) == std::vector<Word>{w("a"), w("b"), w("a b"), w("a b^-1")});
  CHECK(enumerate_periods(3, 0).empty());
}

TEST_CASE("period schema matches brute-force enumeration") {
  for (int m = 1; m <= 3; ++m)
    for (int L = 0; L <= (m == 3 ? 3 : 5); ++L) {
      CAPTURE(m);
      CAPTURE(L);
      CHECK(enumerate_periods(m, L) == brute_periods(m, L));
    }
}

TEST_CASE("period schema has one primitive word per class") {
  const auto periods = enumerate_periods(2, 4);
  for (std::size_t i = 0; i < periods.size(); ++i) {
    CHECK_FALSE(is_proper_power(periods[i]));
    CHECK(class_rep(periods[i]) == periods[i]);
    for (std::size_t j = i + 1; j < periods.size(); ++j) CHECK_FALSE(class_rep(periods[i]) == class_rep(periods[j]));
  }
}

TEST_CASE("text syntax") {
  CHECK(to_string(w("a b^-1 a^2")) == "a b^-1 a^2");
  CHECK(to_string(Word()) == "1");
  CHECK(parse_word("1").empty());
  CHECK(parse_word("").empty());
  CHECK(to_string(w("d1^3 g27")) == "d1^3 g27");
  CHECK_THROWS_AS(parse_word("a^0"), ParseError);
  CHECK_THROWS_AS(parse_word("a^"), ParseError);
  CHECK_THROWS_AS(parse_word("g5"), ParseError);
  CHECK(generator_name(ordinary(26)) == "z");
  CHECK(parse_generator("g30") == ordinary(30));
}

TEST_CASE("big exponents stay exact") {
  const BigInt big("123456789012345678901234567890");
  const auto x = Word::from_syllables({{central(3), big}});
  CHECK((x * x).syllables()[0].exp == 2 * big);
  CHECK((x * invert(x)).empty());
}

TEST_CASE("word properties on random words") {
  std::mt19937_64 rng(testing::seed());
  for (int trial = 0; trial < 300; ++trial) {
    const auto u = testing::random_word(rng, 3, 12);
    const auto v = testing::random_word(rng, 3, 12);
    CHECK(reduce(u.syllables()) == u);
    CHECK((u * v).length() <= u.length() + v.length());
    CHECK((u * invert(u)).empty());
    CHECK(invert(invert(u)) == u);
    const auto x = testing::random_word(rng, 3, 6);
    std::uniform_int_distribution<int> k(-10, 10);
    const int j = k(rng), l = k(rng);
    CHECK(power(x, j + l) == power(x, j) * power(x, l));
    const auto c = cyclic_reduce(u);
    CHECK(c.conjugator * c.core * invert(c.conjugator) == u);
    CHECK(cyclic_reduce(c.core).conjugator.empty());
  }
}
