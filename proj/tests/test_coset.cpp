#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"
#include "centext/errors.hpp"

using namespace centext;
using testing::group_of;

using testing::heisenberg_order;

TEST_CASE("todd_coxeter examples") {
  CHECK(todd_coxeter(build_burnside(2, 2, 2), {}, 10000).size() == 4);
  CHECK(todd_coxeter(testing::presentation_of("gens 1\nrel a\n"), {}, 10).size() == 1);
  CHECK(heisenberg_order() == 27);
  CHECK(todd_coxeter(build_burnside(2, 3, 3), {}, 100000).size() == heisenberg_order());
  CHECK(todd_coxeter(testing::presentation_of("gens 2\nrel a^2\nrel b^3\nrel a b a b\n"), {}).size() == 6);
  CHECK(todd_coxeter(testing::presentation_of("gens 0\n"), {}).size() == 1);
}

TEST_CASE("subgroup enumeration") {
  const auto s3 = testing::presentation_of("gens 2\nrel a^2\nrel b^3\nrel a b a b\n");
  CHECK(todd_coxeter(s3, {parse_word("b")}).size() == 2);
  CHECK(todd_coxeter(s3, {parse_word("a")}).size() == 3);
  CHECK(todd_coxeter(build_burnside(2, 3, 3), {parse_word("a"), parse_word("b")}).size() == 1);
  CHECK_THROWS_AS(todd_coxeter(s3, {parse_word("c")}), AlphabetError);
}

TEST_CASE("overflow") {
  CHECK_THROWS_AS(todd_coxeter(testing::presentation_of("gens 2\n"), {}, 1000), CosetOverflow);
  CHECK_THROWS_AS(todd_coxeter(build_burnside(2, 3, 3), {}, 10), CosetOverflow);
  try {
    todd_coxeter(testing::presentation_of("gens 1\n"), {}, 50);
    FAIL("expected overflow");
  } catch (const CosetOverflow& e) {
    CHECK(e.limit() == 50);
  }
}

TEST_CASE("central generators take part in enumeration") {
  auto c3 = abelian_presentation("C_3");
  const auto p = build_a_d(2, 3, 3, c3, constant_assignment(enumerate_periods(2, 3).size(), Word()));
  CHECK(todd_coxeter(p, {}).size() == 81);
  CHECK(todd_coxeter(build_a_prime(2, 2, 2), {}).size() == 8);
}

TEST_CASE("enumeration does not depend on relator order") {
  std::mt19937_64 rng(testing::seed());
  for (const auto& base : {build_burnside(2, 3, 3), build_a_prime(2, 2, 2), build_a_prime(2, 3, 2),
                           testing::presentation_of("gens 2\nrel a^2\nrel b^3\nrel a b a b\n")}) {
    const auto ref = todd_coxeter(base, {}, 200000);
    for (int trial = 0; trial < 5; ++trial) {
      auto shuffled = base;
      std::shuffle(shuffled.relators.begin(), shuffled.relators.end(), rng);
      const auto t = todd_coxeter(shuffled, {}, 200000);
      CHECK(t.size() == ref.size());
      CHECK(t.representatives() == ref.representatives());
    }
  }
}

TEST_CASE("every completed table closes all relators") {
  std::vector<Presentation> ps{build_burnside(2, 2, 2), build_burnside(2, 3, 2), build_burnside(2, 3, 3),
                               build_burnside(3, 2, 2), build_burnside(1, 7, 1), build_a_prime(2, 3, 2),
                               build_a_prime(2, 2, 2)};
  for (const auto& p : ps) {
    const auto t = todd_coxeter(p, {}, 200000);
    CHECK(relators_close(t, p));
    for (std::uint32_t c = 0; c < t.size(); ++c)
      for (std::size_t col = 0; col < t.columns(); ++col) CHECK(t.act(c, col) < t.size());
    for (std::uint32_t c = 0; c < t.size(); ++c) CHECK(t.trace(0, t.representatives()[c]) == c);
  }
  auto p = build_burnside(2, 2, 2);
  const auto t = todd_coxeter(p, {});
  p.add_relator(parse_word("a b^3"));
  CHECK_FALSE(relators_close(t, p));
}

TEST_CASE("representatives are shortlex minimal") {
  const auto t = todd_coxeter(build_burnside(2, 3, 3), {});
  const auto& reps = t.representatives();
  CHECK(reps[0].empty());
  CHECK(std::is_sorted(reps.begin(), reps.end(), shortlex_less));
}

TEST_CASE("stabilized_order") {
  const auto b2 = [](int L) { return build_burnside(2, 2, L); };
  auto s = stabilized_order(b2, 4, 10000);
  CHECK(s.order == 4);
  CHECK(s.stable_length == 2);
  s = stabilized_order([](int L) { return build_burnside(2, 3, L); }, 5, 100000);
  CHECK(s.order == 27);
  CHECK(s.stable_length <= 4);
  s = stabilized_order([](int L) { return build_burnside(1, 5, L); }, 2, 100);
  CHECK(s.order == 5);
  CHECK(s.stable_length == 1);
  // <a | a^(L+1)> never repeats an order; <a, b | a^2, b^2> is infinite at L = 1.
  const auto growing = [](int L) { return testing::presentation_of("gens 1\nrel a^" + std::to_string(L + 1) + "\n"); };
  CHECK_THROWS_AS(stabilized_order(growing, 3, 100), UnstableOrder);
  CHECK_THROWS_AS(stabilized_order(b2, 1, 10000), CosetOverflow);
  CHECK_THROWS_AS(stabilized_order([](int L) { return build_burnside(2, 4, L); }, 2, 100), CosetOverflow);
}

TEST_CASE("realize examples") {
  const auto v4 = realize(todd_coxeter(build_burnside(2, 2, 2), {}));
  CHECK(v4.order() == 4);
  for (GroupTable::Element x = 0; x < 4; ++x) CHECK(element_order(v4, x) == (x == v4.identity() ? 1 : 2));
  CHECK(exponent(v4) == 2);

  const auto trivial = group_of("gens 1\nrel a\n");
  CHECK(trivial.order() == 1);
  CHECK(exponent(trivial) == 1);

  const auto s3 = testing::s3();
  CHECK(s3.order() == 6);
  std::set<std::uint64_t> orders;
  for (GroupTable::Element x = 0; x < 6; ++x) orders.insert(element_order(s3, x));
  CHECK(orders == std::set<std::uint64_t>{1, 2, 3});
  CHECK(exponent(s3) == 6);

  const auto b23 = realize(todd_coxeter(build_burnside(2, 3, 3), {}));
  CHECK(exponent(b23) == 3);
  for (GroupTable::Element x = 0; x < 27; ++x) CHECK(b23.pow(x, 3) == b23.identity());
}

TEST_CASE("realized tables are groups") {
  for (const auto& text : {std::string("gens 2\nrel a^2\nrel b^3\nrel a b a b\n"), serialize(build_burnside(2, 3, 3)),
                           serialize(build_a_prime(2, 2, 2)), std::string("gens 1\nrel a^12\n")}) {
    const auto g = group_of(text);
    CHECK(is_latin_square(g));
    CHECK(is_associative(g));
    for (GroupTable::Element x = 0; x < g.order(); ++x) {
      CHECK(g.mul(x, g.inverse(x)) == g.identity());
      CHECK(g.evaluate(g.words()[x]) == x);
    }
    CHECK(subgroup_closure(g, g.generator_images()).size() == g.order());
  }
}

TEST_CASE("realize needs the trivial subgroup") {
  const auto s3 = testing::presentation_of("gens 2\nrel a^2\nrel b^3\nrel a b a b\n");
  CHECK_THROWS_AS(realize(todd_coxeter(s3, {parse_word("a")})), PreconditionError);
}

TEST_CASE("group table helpers") {
  const auto c12 = testing::cyclic(12);
  CHECK(exponent(c12) == 12);
  CHECK(c12.pow(1, BigInt("1200000000000000000001")) == 1);
  CHECK(c12.pow(1, -1) == 11);
  CHECK(subgroup_closure(c12, {4}) == std::vector<GroupTable::Element>{0, 4, 8});
  CHECK(generating_set(c12) == std::vector<GroupTable::Element>{1});
  const auto v = testing::direct_product(testing::cyclic(2), testing::cyclic(2));
  CHECK(subgroup_closure(v, generating_set(v)).size() == 4);
  CHECK_THROWS_AS(GroupTable(2, {0, 1, 1, 1}), PreconditionError);
  CHECK_THROWS_AS(c12.image(ordinary(2)), AlphabetError);
}
