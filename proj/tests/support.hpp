#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "centext/coset.hpp"
#include "centext/group_table.hpp"
#include "centext/presentation.hpp"
#include "centext/word.hpp"

namespace centext::testing {

// Seed for randomized properties; override with CENTEXT_SEED.
inline std::uint64_t seed() {
  if (const char* s = std::getenv("CENTEXT_SEED")) return std::strtoull(s, nullptr, 10);
  return 20240611;
}

inline Presentation presentation_of(const std::string& text) { return parse_presentation(text); }

inline GroupTable group_of(const std::string& text) {
  return realize(todd_coxeter(parse_presentation(text), {}));
}

inline GroupTable cyclic(int n) {
  std::vector<GroupTable::Element> mul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[a * n + b] = static_cast<GroupTable::Element>((a + b) % n);
  return GroupTable(n, std::move(mul), {ordinary(1)}, {n > 1 ? 1u : 0u});
}

inline GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
  const std::size_t n = g.order() * h.order();
  std::vector<GroupTable::Element> mul(n * n);
  auto id = [&](std::size_t x, std::size_t y) { return static_cast<GroupTable::Element>(x * h.order() + y); };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      mul[a * n + b] = id(g.mul(a / h.order(), b / h.order()), h.mul(a % h.order(), b % h.order()));
  return GroupTable(n, std::move(mul));
}

inline GroupTable s3() { return group_of("gens 2\nrel a^2\nrel b^3\nrel a b a b\n"); }

// Random freely reduced word over a_1..a_m with up to max_len letters.
inline Word random_word(std::mt19937_64& rng, int m, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), gen(1, m), sign(0, 1);
  std::vector<Letter> letters;
  const int l = len(rng);
  for (int i = 0; i < l; ++i) letters.push_back({ordinary(gen(rng)), sign(rng) == 1});
  return Word::from_letters(letters);
}

}  // namespace centext::testing
