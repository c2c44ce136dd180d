#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "centext/abelian.hpp"
#include "centext/coset.hpp"
#include "centext/group_table.hpp"
#include "centext/word.hpp"

namespace centext {

// Reidemeister-Schreier data for the kernel N of F_m -> G, where G is given
// by a regular coset table on the ordinary generators a_1..a_m.
class SchreierSystem {
 public:
  explicit SchreierSystem(CosetTable table);

  const CosetTable& table() const { return table_; }
  int rank() const { return static_cast<int>(table_.generators().size()); }
  std::size_t index() const { return table_.size(); }
  // Shortlex-minimal coset representatives.
  const std::vector<Word>& transversal() const { return table_.representatives(); }
  // s = u_c a u_{c.a}^-1 for every non-tree edge (c, a), ordered by (c, a).
  const std::vector<Word>& generators() const { return gens_; }

  bool contains(const Word& w) const;
  // w in N as a word over the Schreier generators: (index, +1/-1) letters.
  // Throws PreconditionError if w is not in N.
  std::vector<std::pair<std::size_t, int>> rewrite(const Word& w) const;
  // Exponent sums of rewrite(w).
  std::vector<BigInt> rewrite_abelian(const Word& w) const;

 private:
  CosetTable table_;
  std::vector<Word> gens_;
  // edge_gen_[c * rank + a] = Schreier generator index, or npos for tree edges.
  std::vector<std::size_t> edge_gen_;
};

// Schreier system of N = F_m^n from the truncated presentation
// build_burnside(m, n, L).
SchreierSystem schreier_system(int m, int n, int max_length,
                               std::size_t max_cosets = default_max_cosets);

// V = N / [F, N] with the class map N -> V.
class RelationModule {
 public:
  RelationModule(SchreierSystem system, int n);

  const SchreierSystem& system() const { return system_; }
  const FgAbelianGroup& V() const { return v_; }
  int m() const { return system_.rank(); }
  int n() const { return n_; }

 private:
  SchreierSystem system_;
  FgAbelianGroup v_;
  int n_;
};

RelationModule relation_module(const SchreierSystem& system, int n);
// Uses the stabilized Burnside truncation (L up to max_length).
RelationModule relation_module(int m, int n, int max_length = 8,
                               std::size_t max_cosets = default_max_cosets);

// Class of w in V. Throws PreconditionError if w is not in N.
AbelianElement class_in_V(const Word& w, const RelationModule& rm);

// M = (N cap [F,F]) / [F,N], the torsion part of V. Throws ConsistencyError
// unless V has free rank m and N[F,F]/[F,F] = nZ^m.
FgAbelianGroup schur_multiplier(const RelationModule& rm);

// dim_{F_p} H^2(G, F_p) for the trivial action. Throws SizeLimitError when
// |G| > 200.
std::size_t cocycle_h2_dim(const GroupTable& g, std::uint32_t p);

// Same, imposing the cocycle identity for every triple (g, h, k) rather than
// only for k among the generator images. Used to cross-check the reduction.
std::size_t cocycle_h2_dim_full(const GroupTable& g, std::uint32_t p);

// dim_{F_p} Ext(A, F_p) = number of invariant factors of A divisible by p.
std::size_t ext_dim(const FgAbelianGroup& a, std::uint32_t p);
// Number of invariant factors of the torsion part divisible by p.
std::size_t p_rank(const FgAbelianGroup& a, std::uint32_t p);

// Abelianization of a finite group: invariants of G / [G, G].
FgAbelianGroup abelianization(const GroupTable& g);

}  // namespace centext
