#include "doctest.h"
#include "support.hpp"
#include "centext/errors.hpp"
#include "centext/homology.hpp"

using namespace centext;

namespace {

bool in_torsion(const AbelianElement& x) { return x.order().has_value(); }

Word comm(const Word& u, const Word& w) { return u * w * invert(u) * invert(w); }

}  // namespace

TEST_CASE("Schreier generator counts") {
  CHECK(schreier_system(2, 2, 2).generators().size() == 5);
  CHECK(schreier_system(2, 3, 3).generators().size() == 28);
  const auto cyclic = schreier_system(1, 5, 1);
  REQUIRE(cyclic.generators().size() == 1);
  CHECK(cyclic.generators()[0] == parse_word("a^5"));
  for (auto [m, n, L] : {std::tuple{2, 2, 2}, std::tuple{2, 3, 3}, std::tuple{3, 2, 2}, std::tuple{1, 4, 1}}) {
    const auto s = schreier_system(m, n, L);
    CHECK(s.generators().size() == s.index() * static_cast<std::size_t>(m - 1) + 1);
  }
}

TEST_CASE("Schreier rewriting") {
  const auto s = schreier_system(2, 3, 3);
  CHECK(s.contains(parse_word("a^3")));
  CHECK_FALSE(s.contains(parse_word("a")));
  CHECK_THROWS_AS(s.rewrite(parse_word("a b")), PreconditionError);
  for (std::size_t i = 0; i < s.generators().size(); ++i) {
    const auto r = s.rewrite(s.generators()[i]);
    REQUIRE(r.size() == 1);
    CHECK(r[0] == std::pair<std::size_t, int>{i, 1});
  }
  // Rewriting is a homomorphism on N: the rewritten word multiplies back out.
  std::mt19937_64 rng(testing::seed());
  for (int trial = 0; trial < 100; ++trial) {
    const auto u = testing::random_word(rng, 2, 6);
    const auto x = u * parse_word("a^3 b^-3") * invert(u);
    Word back;
    for (auto [idx, sign] : s.rewrite(x)) back = back * (sign > 0 ? s.generators()[idx] : invert(s.generators()[idx]));
    CHECK(back == x);
  }
}

TEST_CASE("relation module examples") {
  CHECK(relation_module(2, 2).V().to_string() == "Z^2 x C_2");
  CHECK(relation_module(2, 3).V().to_string() == "Z^2 x C_3 x C_3");
  CHECK(relation_module(1, 5).V().to_string() == "Z");
}

TEST_CASE("Schur multiplier examples") {
  CHECK(schur_multiplier(relation_module(2, 2)).to_string() == "C_2");
  CHECK(schur_multiplier(relation_module(2, 3)).to_string() == "C_3 x C_3");
  CHECK(schur_multiplier(relation_module(1, 4)).to_string() == "0");
}

TEST_CASE("classes in V") {
  for (int n : {2, 3}) {
    const auto rm = relation_module(2, n);
    const auto an = power(parse_word("a"), n), bn = power(parse_word("b"), n), abn = power(parse_word("a b"), n);
    const auto ca = class_in_V(an, rm);
    CHECK_FALSE(ca.is_zero());
    CHECK_FALSE(ca.order());
    CHECK(in_torsion(class_in_V(abn, rm) - ca - class_in_V(bn, rm)));
    CHECK_THROWS_AS(class_in_V(parse_word("a"), rm), PreconditionError);
  }
}

TEST_CASE("the class map kills [F, N]") {
  std::mt19937_64 rng(testing::seed() + 1);
  for (int n : {2, 3}) {
    const auto rm = relation_module(2, n);
    const auto& gens = rm.system().generators();
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    for (int trial = 0; trial < 100; ++trial) {
      const auto u = testing::random_word(rng, 2, 8);
      const auto w = gens[pick(rng)] * invert(gens[pick(rng)]) * gens[pick(rng)];
      CHECK(class_in_V(comm(u, w), rm).is_zero());
      CHECK(class_in_V(u * w * invert(u), rm) == class_in_V(w, rm));
    }
  }
}

TEST_CASE("cocycle oracle examples") {
  const auto v4 = testing::direct_product(testing::cyclic(2), testing::cyclic(2));
  CHECK(cocycle_h2_dim(v4, 2) == 3);
  CHECK(cocycle_h2_dim(testing::cyclic(1), 2) == 0);
  CHECK(cocycle_h2_dim(testing::cyclic(1), 7) == 0);
  CHECK(cocycle_h2_dim(testing::cyclic(3), 3) == 1);
  CHECK(cocycle_h2_dim(testing::cyclic(3), 2) == 0);
  CHECK(cocycle_h2_dim(testing::s3(), 2) == 1);
  CHECK(cocycle_h2_dim(testing::s3(), 3) == 0);
  CHECK_THROWS_AS(cocycle_h2_dim(testing::cyclic(201), 3), SizeLimitError);
  CHECK_THROWS_AS(cocycle_h2_dim(testing::cyclic(4), 4), PreconditionError);
}

TEST_CASE("generator-restricted cocycle condition matches the full one") {
  const auto v4 = testing::direct_product(testing::cyclic(2), testing::cyclic(2));
  const std::vector<GroupTable> groups{
      testing::cyclic(2), testing::cyclic(4), testing::cyclic(6), v4, testing::s3(),
      testing::direct_product(testing::cyclic(3), testing::cyclic(3)), testing::direct_product(v4, testing::cyclic(2)),
      testing::group_of("gens 2\nrel a^4\nrel b^2\nrel b a b a\n"),
      testing::group_of("gens 2\nrel a^4\nrel a^2 b^-2\nrel b^-1 a b a\n")};
  for (const auto& g : groups)
    for (std::uint32_t p : {2u, 3u}) {
      CAPTURE(g.order());
      CAPTURE(p);
      CHECK(cocycle_h2_dim(g, p) == cocycle_h2_dim_full(g, p));
    }
}

TEST_CASE("cocycle oracle agrees with the universal coefficient count") {
  for (auto [n, p] : {std::pair{2, 2u}, std::pair{3, 3u}}) {
    const auto rm = relation_module(2, n);
    const auto m = schur_multiplier(rm);
    const auto g = realize(rm.system().table());
    const auto ab = abelianization(g);
    CHECK(cocycle_h2_dim(g, p) == p_rank(m, p) + ext_dim(ab, p));
  }
  CHECK(cocycle_h2_dim(realize(todd_coxeter(build_burnside(2, 3, 3), {})), 3) == 4);
  // Quaternion group: trivial multiplier, abelianization C_2 x C_2.
  const auto q8 = testing::group_of("gens 2\nrel a^4\nrel a^2 b^-2\nrel b^-1 a b a\n");
  CHECK(q8.order() == 8);
  CHECK(cocycle_h2_dim(q8, 2) == ext_dim(abelianization(q8), 2));
}

TEST_CASE("abelianization and ranks") {
  CHECK(abelianization(testing::s3()).to_string() == "C_2");
  CHECK(abelianization(testing::cyclic(6)).to_string() == "C_6");
  CHECK(abelianization(testing::cyclic(1)).to_string() == "0");
  const auto g = FgAbelianGroup::from_invariants(2, {BigInt(2), BigInt(6)});
  CHECK(ext_dim(g, 2) == 2);
  CHECK(ext_dim(g, 3) == 1);
  CHECK(p_rank(g, 2) == 2);
  CHECK(p_rank(g, 5) == 0);
}
