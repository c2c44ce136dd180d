#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "centext/abelian.hpp"
#include "centext/word.hpp"

namespace centext {

// Group presentation on ordinary generators a_1..a_rank and a declared list
// of central generators d_i. Relators are reduced and deduplicated.
struct Presentation {
  int rank = 0;
  std::vector<int> central_gens;
  std::vector<Word> relators;
  // Builder name and parameters; serialized as `#@ key = value` lines.
  std::vector<std::pair<std::string, std::string>> metadata;

  // Appends w unless it is empty or already present.
  void add_relator(const Word& w);
  bool declares(Generator g) const;
  // Throws AlphabetError on a relator using an undeclared generator.
  void validate() const;
  // Ordinary generators first, then central ones in declaration order.
  std::vector<Generator> generators() const;
  std::string meta(std::string_view key) const;
};

// Presentation of an abelian group D on central generators. Relators are read
// additively (exponent sums); commutators among the generators are implied.
struct AbelianPresentation {
  std::vector<int> gens;
  std::vector<Word> relators;

  FgAbelianGroup group() const;
  std::vector<BigInt> exponent_vector(const Word& w) const;
  // Word d_{g1}^{e1} d_{g2}^{e2} ... representing x.
  Word word_for(const AbelianElement& x) const;
  std::string describe() const;
};

// One generator per factor of `Z^r x C_a x ...`: d1..dr free, then one
// generator of each listed order.
AbelianPresentation abelian_presentation(std::string_view structure);
// One generator per canonical coordinate of g.
AbelianPresentation abelian_presentation(const FgAbelianGroup& g);
// Central generators and relators of p (ordinary generators must be absent).
AbelianPresentation abelian_presentation(const Presentation& p);
// <d1..dimax | d_i^i = d_{i-1}>, written with relators d_i^-i d_{i-1}.
AbelianPresentation q_presentation(int imax);

// Image of the j-th period's n-th power (1-based in text, 0-based here).
struct Assignment {
  std::vector<Word> images;

  std::size_t size() const { return images.size(); }
};

// Period j -> d_j.
Assignment bijective_assignment(std::size_t periods);
Assignment constant_assignment(std::size_t periods, const Word& w);
// Lines `period <j> -> <word>`; must cover periods 1..count exactly.
Assignment parse_assignment(std::string_view text, std::size_t count);
std::string serialize_assignment(const Assignment& sigma);

Presentation build_burnside(int m, int n, int max_length);
Presentation build_a_d(int m, int n, int max_length, const AbelianPresentation& d,
                       const Assignment& sigma);
// Truncation to the first period_prefix periods of the schema; sigma covers
// exactly those.
Presentation build_a_d(int m, int n, int max_length, const AbelianPresentation& d, const Assignment& sigma,
                       std::size_t period_prefix);
Presentation build_a_q(int m, int n, int max_length, int imax);
Presentation build_a_classic(int m, int n, int max_length);
Presentation build_a_prime(int m, int n, int max_length);
Presentation build_a_c(int m, int n, int max_length);

// Tietze-eliminates every central generator through its defining relators
// P^n d^-1 (P ordinary-only). Commutators [a_k, d] become [P^n, a_k] for
// every defining word; other relators get d replaced by its first defining
// word.
Presentation eliminate_central_generators(const Presentation& p);

Presentation parse_presentation(std::string_view text);
std::string serialize(const Presentation& p);

}  // namespace centext
