#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "centext/word.hpp"

namespace centext {

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<BigInt> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const BigInt> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<BigInt> column(std::size_t c) const;

  IntMatrix transpose() const;
  std::vector<BigInt> apply(std::span<const BigInt> x) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

// U * A * V = S with U, V unimodular and S diagonal, S[i][i] >= 0 and each
// diagonal entry dividing the next (zeros last). V_inverse is V^-1.
struct SnfDecomposition {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;
  IntMatrix V_inverse;

  std::vector<BigInt> diagonal() const;
  std::size_t rank() const;
};

SnfDecomposition snf(const IntMatrix& a);

// Some integer x with A x = b, or nullopt when none exists.
std::optional<std::vector<BigInt>> solve_integer(const IntMatrix& a, std::span<const BigInt> b);

// Columns form a Z-basis of {x in Z^cols : A x = 0}.
IntMatrix integer_kernel(const IntMatrix& a);

using ModPVector = std::vector<std::uint32_t>;

// Basis of {x in F_p^cols : A x = 0 (mod p)}.
std::vector<ModPVector> nullspace_mod_p(const IntMatrix& a, std::uint32_t p);
// Same, for a matrix given as rows of residues.
std::vector<ModPVector> nullspace_mod_p(std::vector<ModPVector> rows, std::size_t cols, std::uint32_t p);

bool is_prime(std::uint64_t p);

}  // namespace centext
