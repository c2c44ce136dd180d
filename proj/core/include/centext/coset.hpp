#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "centext/errors.hpp"
#include "centext/presentation.hpp"
#include "centext/word.hpp"

namespace centext {

inline constexpr std::size_t default_max_cosets = 1'000'000;

// Closed coset table of a subgroup H. Cosets are numbered in breadth-first
// order from coset 0 = H, scanning columns a, a^-1, b, b^-1, ..., so the
// spanning-tree words are shortlex-minimal coset representatives.
class CosetTable {
 public:
  static constexpr std::uint32_t undefined = ~std::uint32_t{0};

  CosetTable(std::vector<Generator> gens, std::vector<std::uint32_t> rows, std::vector<Word> subgroup);

  std::size_t size() const { return size_; }
  const std::vector<Generator>& generators() const { return gens_; }
  std::size_t columns() const { return 2 * gens_.size(); }
  // Column of g (or g^-1).
  std::size_t column(Generator g, bool inverse = false) const;
  std::size_t column(const Letter& l) const { return column(l.gen, l.inverse); }

  std::uint32_t act(std::uint32_t coset, std::size_t column) const { return rows_[coset * columns() + column]; }
  std::uint32_t trace(std::uint32_t coset, const Word& w) const;

  const std::vector<Word>& subgroup() const { return subgroup_; }
  // Spanning-tree representative of each coset.
  const std::vector<Word>& representatives() const { return reps_; }
  // Tree parent and connecting column (undefined for coset 0).
  std::uint32_t tree_parent(std::uint32_t coset) const { return parent_[coset]; }
  std::size_t tree_column(std::uint32_t coset) const { return parent_col_[coset]; }

 private:
  std::vector<Generator> gens_;
  std::vector<std::uint32_t> rows_;
  std::vector<Word> subgroup_;
  std::size_t size_ = 0;
  std::vector<std::uint32_t> parent_;
  std::vector<std::size_t> parent_col_;
  std::vector<Word> reps_;
};

// HLT coset enumeration with union-find coincidence handling. Relators are
// scanned shortest first (ties in shortlex order), so the result does not
// depend on the order relators are listed in. Throws CosetOverflow when more
// than max_cosets live cosets are needed.
CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_gens,
                        std::size_t max_cosets = default_max_cosets);

// Every relator traced from every coset returns to that coset.
bool relators_close(const CosetTable& table, const Presentation& p);

class UnstableOrder : public Error {
 public:
  using Error::Error;
};

struct StabilizedOrder {
  std::uint64_t order = 0;
  // First L of the two consecutive levels that agree.
  int stable_length = 0;
  // Order per level starting at min_length; nullopt where enumeration overflowed.
  std::vector<std::optional<std::uint64_t>> history;
  int min_length = 1;
};

using PresentationBuilder = std::function<Presentation(int max_length)>;

// Enumerates builder(L) for L = min_length..max_length and returns the first
// order attained at two consecutive levels. Levels that overflow are treated
// as not yet finite. Throws CosetOverflow if the last level overflowed and
// UnstableOrder otherwise when no two consecutive levels agree.
StabilizedOrder stabilized_order(const PresentationBuilder& builder, int max_length,
                                 std::size_t max_cosets = default_max_cosets, int min_length = 1);

}  // namespace centext
