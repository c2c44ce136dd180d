#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"
#include "centext/errors.hpp"
#include "centext/matrix.hpp"

using namespace centext;

using testing::det;
using testing::minor_gcd;
using testing::random_matrix;

TEST_CASE("snf examples") {
  CHECK(snf(IntMatrix{{2, 0}, {0, 3}}).S == IntMatrix{{1, 0}, {0, 6}});
  CHECK(snf(IntMatrix(2, 2)).S == IntMatrix(2, 2));
  CHECK(snf(IntMatrix{{2, 4}, {6, 8}}).S == IntMatrix{{2, 0}, {0, 4}});
  CHECK(snf(IntMatrix(0, 3)).rank() == 0);
}

TEST_CASE("snf invariants on random matrices") {
  std::mt19937_64 rng(testing::seed());
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_matrix(rng, dim(rng), dim(rng));
    const auto d = snf(a);
    CHECK(d.U * a * d.V == d.S);
    CHECK(abs(det(d.U)) == 1);
    CHECK(abs(det(d.V)) == 1);
    CHECK(d.V * d.V_inverse == IntMatrix::identity(a.cols()));
    const auto diag = d.diagonal();
    for (std::size_t i = 0; i < d.S.rows(); ++i)
      for (std::size_t j = 0; j < d.S.cols(); ++j)
        if (i != j) CHECK(d.S(i, j) == 0);
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
      CHECK(diag[i] >= 0);
      if (diag[i] == 0) CHECK(diag[i + 1] == 0);
      else CHECK(diag[i + 1] % diag[i] == 0);
    }
    if (a.rows() <= 4 && a.cols() <= 4) {
      BigInt prod = 1;
      for (std::size_t k = 1; k <= diag.size(); ++k) {
        prod *= diag[k - 1];
        CHECK(prod == minor_gcd(a, k));
      }
    }
  }
}

TEST_CASE("snf handles entries beyond machine range") {
  IntMatrix a{{1, 0}, {0, 1}};
  a(0, 0) = BigInt("340282366920938463463374607431768211456");  // 2^128
  a(1, 1) = BigInt("18446744073709551616");                     // 2^64
  const auto diag = snf(a).diagonal();
  CHECK(diag[0] == BigInt("18446744073709551616"));
  CHECK(diag[1] == BigInt("340282366920938463463374607431768211456"));
}

TEST_CASE("solve_integer") {
  const std::vector<BigInt> four{4}, three{3};
  CHECK(*solve_integer(IntMatrix{{2}}, four) == std::vector<BigInt>{2});
  CHECK_FALSE(solve_integer(IntMatrix{{2}}, three));
  const std::vector<BigInt> b{2, 6};
  const IntMatrix a{{2, 4}, {6, 8}};
  auto x = solve_integer(a, b);
  REQUIRE(x);
  CHECK(a.apply(*x) == b);
  CHECK_THROWS_AS(solve_integer(a, four), DimensionError);
}

TEST_CASE("solve_integer agrees with the snf criterion") {
  std::mt19937_64 rng(testing::seed() + 1);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  std::uniform_int_distribution<long> entry(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_matrix(rng, dim(rng), dim(rng));
    std::vector<BigInt> b(a.rows());
    for (auto& v : b) v = entry(rng);
    const auto x = solve_integer(a, b);
    // Solvable iff U b has (U b)_i divisible by s_i and zero beyond the rank.
    const auto d = snf(a);
    const auto ub = d.U.apply(b);
    const auto diag = d.diagonal();
    bool solvable = true;
    for (std::size_t i = 0; i < ub.size(); ++i) {
      const BigInt s = i < diag.size() ? diag[i] : BigInt(0);
      if (s == 0 ? ub[i] != 0 : ub[i] % s != 0) solvable = false;
    }
    CHECK(x.has_value() == solvable);
    if (x) CHECK(a.apply(*x) == b);
  }
}

TEST_CASE("integer kernel") {
  const IntMatrix a{{1, 2, 3}, {2, 4, 6}};
  const auto k = integer_kernel(a);
  CHECK(k.cols() == 2);
  const auto zero = a * k;
  CHECK(zero == IntMatrix(2, 2));
}

TEST_CASE("nullspace mod p") {
  CHECK(nullspace_mod_p(IntMatrix(2, 2), 2).size() == 2);
  CHECK(nullspace_mod_p(IntMatrix::identity(2), 3).empty());
  const auto basis = nullspace_mod_p(IntMatrix{{1, 1}}, 2);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == ModPVector{1, 1});
  CHECK_THROWS_AS(nullspace_mod_p(IntMatrix{{1}}, 4), PreconditionError);
}

TEST_CASE("nullspace mod p matches exhaustive count") {
  std::mt19937_64 rng(testing::seed() + 2);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 30; ++trial) {
      const auto a = random_matrix(rng, dim(rng), dim(rng));
      const std::size_t n = a.cols();
      std::size_t count = 0, total = 1;
      for (std::size_t i = 0; i < n; ++i) total *= p;
      for (std::size_t code = 0; code < total; ++code) {
        std::vector<BigInt> x(n);
        std::size_t c = code;
        for (std::size_t i = 0; i < n; ++i, c /= p) x[i] = static_cast<long>(c % p);
        const auto y = a.apply(x);
        bool zero = true;
        for (const auto& v : y) zero = zero && v % p == 0;
        count += zero;
      }
      const auto basis = nullspace_mod_p(a, p);
      std::size_t expected = 1;
      for (std::size_t i = 0; i < basis.size(); ++i) expected *= p;
      CHECK(count == expected);
    }
  }
}
