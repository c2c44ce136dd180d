#pragma once

// Independent oracles shared by unit and acceptance tests.

#include <array>
#include <random>
#include <set>
#include <vector>

#include "centext/matrix.hpp"

namespace centext::testing {

inline BigInt det(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  BigInt total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != c) minor(r - 1, kk++) = a(r, k);
    const BigInt term = a(0, c) * det(minor);
    total += (c % 2 == 0) ? term : BigInt(-term);
  }
  return total;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// gcd of all k x k minors.
inline BigInt minor_gcd(const IntMatrix& a, std::size_t k) {
  std::vector<std::vector<std::size_t>> rs, cs;
  std::vector<std::size_t> cur;
  subsets(a.rows(), k, 0, cur, rs);
  subsets(a.cols(), k, 0, cur, cs);
  BigInt g = 0;
  for (const auto& r : rs)
    for (const auto& c : cs) {
      IntMatrix m(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m(i, j) = a(r[i], c[j]);
      g = gcd(g, det(m));
    }
  return g;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<long> entry(-9, 9);
  IntMatrix a(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a(r, c) = entry(rng);
  return a;
}



using M3 = std::array<int, 9>;

inline M3 mul3(const M3& x, const M3& y) {
  M3 z{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int s = 0;
      for (int k = 0; k < 3; ++k) s += x[3 * i + k] * y[3 * k + j];
      z[3 * i + j] = s % 3;
    }
  return z;
}

// Closure of two elementary unitriangular matrices over F_3.
inline std::size_t heisenberg_order() {
  const M3 x{1, 1, 0, 0, 1, 0, 0, 0, 1}, y{1, 0, 0, 0, 1, 1, 0, 0, 1};
  std::set<M3> seen{{1, 0, 0, 0, 1, 0, 0, 0, 1}};
  std::vector<M3> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<M3> next;
    for (const auto& g : frontier)
      for (const auto& s : {x, y})
        if (seen.insert(mul3(g, s)).second) next.push_back(mul3(g, s));
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace centext::testing
