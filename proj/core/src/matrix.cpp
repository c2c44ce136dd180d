#include "centext/matrix.hpp"

#include <algorithm>
#include <utility>

#include "centext/errors.hpp"

namespace centext {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<BigInt>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("row length does not match column count");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

std::vector<BigInt> IntMatrix::column(std::size_t c) const {
  std::vector<BigInt> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

std::vector<BigInt> IntMatrix::apply(std::span<const BigInt> x) const {
  if (x.size() != cols_) throw DimensionError("vector length does not match column count");
  std::vector<BigInt> y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    BigInt acc = 0;
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn((*this)(r, c)) != 0) acc += (*this)(r, c) * x[c];
    y[r] = acc;
  }
  return y;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product dimension mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

std::vector<BigInt> SnfDecomposition::diagonal() const {
  std::size_t n = std::min(S.rows(), S.cols());
  std::vector<BigInt> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = S(i, i);
  return d;
}

std::size_t SnfDecomposition::rank() const {
  std::size_t r = 0;
  for (const auto& d : diagonal())
    if (sgn(d) != 0) ++r;
  return r;
}

namespace {

// Elementary operations applied to S and mirrored into the transforms.
class SnfWorker {
 public:
  explicit SnfWorker(const IntMatrix& a)
      : S(a), U(IntMatrix::identity(a.rows())), V(IntMatrix::identity(a.cols())),
        Vi(IntMatrix::identity(a.cols())) {}

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < S.cols(); ++c) std::swap(S(i, c), S(j, c));
    for (std::size_t c = 0; c < U.cols(); ++c) std::swap(U(i, c), U(j, c));
  }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < S.rows(); ++r) std::swap(S(r, i), S(r, j));
    for (std::size_t r = 0; r < V.rows(); ++r) std::swap(V(r, i), V(r, j));
    for (std::size_t c = 0; c < Vi.cols(); ++c) std::swap(Vi(i, c), Vi(j, c));
  }

  // row_i += q * row_j
  void add_row(std::size_t i, std::size_t j, const BigInt& q) {
    for (std::size_t c = 0; c < S.cols(); ++c)
      if (sgn(S(j, c)) != 0) S(i, c) += q * S(j, c);
    for (std::size_t c = 0; c < U.cols(); ++c)
      if (sgn(U(j, c)) != 0) U(i, c) += q * U(j, c);
  }

  // col_i += q * col_j; the inverse transform gets row_j -= q * row_i
  void add_col(std::size_t i, std::size_t j, const BigInt& q) {
    for (std::size_t r = 0; r < S.rows(); ++r)
      if (sgn(S(r, j)) != 0) S(r, i) += q * S(r, j);
    for (std::size_t r = 0; r < V.rows(); ++r)
      if (sgn(V(r, j)) != 0) V(r, i) += q * V(r, j);
    for (std::size_t c = 0; c < Vi.cols(); ++c)
      if (sgn(Vi(i, c)) != 0) Vi(j, c) -= q * Vi(i, c);
  }

  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < S.cols(); ++c) S(i, c) = -S(i, c);
    for (std::size_t c = 0; c < U.cols(); ++c) U(i, c) = -U(i, c);
  }

  // Smallest nonzero |entry| in the trailing submatrix from (t, t).
  bool move_smallest_pivot(std::size_t t) {
    std::size_t br = 0, bc = 0;
    bool found = false;
    for (std::size_t r = t; r < S.rows(); ++r)
      for (std::size_t c = t; c < S.cols(); ++c) {
        if (sgn(S(r, c)) == 0) continue;
        if (!found || mpz_cmpabs(S(r, c).get_mpz_t(), S(br, bc).get_mpz_t()) < 0) {
          br = r;
          bc = c;
          found = true;
        }
      }
    if (!found) return false;
    swap_rows(t, br);
    swap_cols(t, bc);
    return true;
  }

  // Reduces row t and column t against the pivot; true when both are clear.
  bool clear_cross(std::size_t t) {
    bool clear = true;
    BigInt q;
    for (std::size_t r = t + 1; r < S.rows(); ++r) {
      if (sgn(S(r, t)) == 0) continue;
      mpz_tdiv_q(q.get_mpz_t(), S(r, t).get_mpz_t(), S(t, t).get_mpz_t());
      if (sgn(q) != 0) add_row(r, t, -q);
      if (sgn(S(r, t)) != 0) clear = false;
    }
    for (std::size_t c = t + 1; c < S.cols(); ++c) {
      if (sgn(S(t, c)) == 0) continue;
      mpz_tdiv_q(q.get_mpz_t(), S(t, c).get_mpz_t(), S(t, t).get_mpz_t());
      if (sgn(q) != 0) add_col(c, t, -q);
      if (sgn(S(t, c)) != 0) clear = false;
    }
    return clear;
  }

  // Moves the smallest nonzero entry of row t / column t onto the diagonal.
  void repivot_cross(std::size_t t) {
    std::size_t best_r = t, best_c = t;
    for (std::size_t r = t + 1; r < S.rows(); ++r)
      if (sgn(S(r, t)) != 0 && mpz_cmpabs(S(r, t).get_mpz_t(), S(best_r, best_c).get_mpz_t()) < 0) {
        best_r = r;
        best_c = t;
      }
    for (std::size_t c = t + 1; c < S.cols(); ++c)
      if (sgn(S(t, c)) != 0 && mpz_cmpabs(S(t, c).get_mpz_t(), S(best_r, best_c).get_mpz_t()) < 0) {
        best_r = t;
        best_c = c;
      }
    swap_rows(t, best_r);
    swap_cols(t, best_c);
  }

  // Row index of an entry the pivot does not divide, if any.
  std::optional<std::size_t> non_divisible_row(std::size_t t) const {
    for (std::size_t r = t + 1; r < S.rows(); ++r)
      for (std::size_t c = t + 1; c < S.cols(); ++c)
        if (sgn(S(r, c)) != 0 && !mpz_divisible_p(S(r, c).get_mpz_t(), S(t, t).get_mpz_t()))
          return r;
    return std::nullopt;
  }

  void run() {
    const std::size_t n = std::min(S.rows(), S.cols());
    for (std::size_t t = 0; t < n; ++t) {
      if (!move_smallest_pivot(t)) break;
      while (true) {
        while (!clear_cross(t)) repivot_cross(t);
        auto bad = non_divisible_row(t);
        if (!bad) break;
        add_row(t, *bad, BigInt(1));
      }
      if (sgn(S(t, t)) < 0) negate_row(t);
    }
  }

  IntMatrix S, U, V, Vi;
};

std::uint32_t mod_p(const BigInt& x, std::uint32_t p) {
  return static_cast<std::uint32_t>(mpz_fdiv_ui(x.get_mpz_t(), p));
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // Fermat; p prime and a != 0.
  std::uint64_t result = 1, base = a, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

SnfDecomposition snf(const IntMatrix& a) {
  SnfWorker w(a);
  w.run();
  return {std::move(w.U), std::move(w.S), std::move(w.V), std::move(w.Vi)};
}

std::optional<std::vector<BigInt>> solve_integer(const IntMatrix& a, std::span<const BigInt> b) {
  if (b.size() != a.rows()) throw DimensionError("solve_integer: right-hand side length mismatch");
  auto d = snf(a);
  auto c = d.U.apply(b);
  std::vector<BigInt> y(a.cols());
  const auto diag = d.diagonal();
  for (std::size_t i = 0; i < c.size(); ++i) {
    const bool has_pivot = i < diag.size() && sgn(diag[i]) != 0;
    if (!has_pivot) {
      if (sgn(c[i]) != 0) return std::nullopt;
      continue;
    }
    if (!mpz_divisible_p(c[i].get_mpz_t(), diag[i].get_mpz_t())) return std::nullopt;
    mpz_divexact(y[i].get_mpz_t(), c[i].get_mpz_t(), diag[i].get_mpz_t());
  }
  return d.V.apply(y);
}

IntMatrix integer_kernel(const IntMatrix& a) {
  auto d = snf(a);
  const std::size_t r = d.rank();
  IntMatrix k(a.cols(), a.cols() - r);
  for (std::size_t c = r; c < a.cols(); ++c)
    for (std::size_t i = 0; i < a.cols(); ++i) k(i, c - r) = d.V(i, c);
  return k;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

std::vector<ModPVector> nullspace_mod_p(const IntMatrix& a, std::uint32_t p) {
  if (!is_prime(p)) throw PreconditionError("nullspace_mod_p: modulus " + std::to_string(p) + " is not prime");
  const std::size_t cols = a.cols();
  std::vector<ModPVector> rows;
  rows.reserve(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    ModPVector v(cols);
    bool nonzero = false;
    for (std::size_t c = 0; c < cols; ++c) {
      v[c] = mod_p(a(r, c), p);
      nonzero = nonzero || v[c] != 0;
    }
    if (nonzero) rows.push_back(std::move(v));
  }
  return nullspace_mod_p(std::move(rows), cols, p);
}

std::vector<ModPVector> nullspace_mod_p(std::vector<ModPVector> rows, std::size_t cols, std::uint32_t p) {
  if (!is_prime(p)) throw PreconditionError("nullspace_mod_p: modulus " + std::to_string(p) + " is not prime");
  for (auto& row : rows) {
    if (row.size() != cols) throw DimensionError("nullspace_mod_p: row length mismatch");
    for (auto& x : row) x %= p;
  }

  // Reduced row echelon form.
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    auto& prow = rows[rank];
    const std::uint64_t inv = inverse_mod(prow[c], p);
    for (std::size_t j = c; j < cols; ++j) prow[j] = static_cast<std::uint32_t>(prow[j] * inv % p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const std::uint64_t f = p - rows[r][c];
      auto& row = rows[r];
      for (std::size_t j = c; j < cols; ++j)
        if (prow[j] != 0) row[j] = static_cast<std::uint32_t>((row[j] + f * prow[j]) % p);
    }
    pivot_col.push_back(c);
    ++rank;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<ModPVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    ModPVector x(cols, 0);
    x[free] = 1;
    for (std::size_t i = 0; i < rank; ++i) {
      std::uint32_t v = rows[i][free];
      if (v != 0) x[pivot_col[i]] = p - v;
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace centext
