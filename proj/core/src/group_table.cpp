#include "centext/group_table.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "centext/errors.hpp"

namespace centext {

GroupTable::GroupTable(std::size_t order, std::vector<Element> mul, std::vector<Generator> gens,
                       std::vector<Element> generator_images, std::vector<Word> words)
    : order_(order),
      mul_(std::move(mul)),
      gens_(std::move(gens)),
      images_(std::move(generator_images)),
      words_(std::move(words)) {
  if (order_ == 0 || mul_.size() != order_ * order_)
    throw DimensionError("multiplication table must be order x order");
  if (gens_.size() != images_.size()) throw DimensionError("one image per generator required");
  if (!words_.empty() && words_.size() != order_) throw DimensionError("one word per element required");
  for (auto x : mul_)
    if (x >= order_) throw PreconditionError("table entry out of range");
  for (auto x : images_)
    if (x >= order_) throw PreconditionError("generator image out of range");

  bool found = false;
  for (Element e = 0; e < order_ && !found; ++e) {
    bool ok = true;
    for (Element a = 0; a < order_ && ok; ++a) ok = this->mul(e, a) == a && this->mul(a, e) == a;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw PreconditionError("table has no identity element");

  inverse_.assign(order_, 0);
  for (Element a = 0; a < order_; ++a) {
    bool ok = false;
    for (Element b = 0; b < order_ && !ok; ++b) {
      if (this->mul(a, b) == identity_ && this->mul(b, a) == identity_) {
        inverse_[a] = b;
        ok = true;
      }
    }
    if (!ok) throw PreconditionError("element " + std::to_string(a) + " has no inverse");
  }
}

GroupTable::Element GroupTable::pow(Element a, const BigInt& k) const {
  BigInt e = k;
  if (sgn(e) < 0) {
    a = inverse(a);
    e = -e;
  }
  // Reduce the exponent by the element order so huge exponents stay cheap.
  e %= element_order(*this, a);
  Element result = identity_;
  Element base = a;
  while (sgn(e) > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

GroupTable::Element GroupTable::image(Generator g) const {
  auto it = std::find(gens_.begin(), gens_.end(), g);
  if (it == gens_.end()) throw AlphabetError("generator " + generator_name(g) + " has no image in this group");
  return images_[static_cast<std::size_t>(it - gens_.begin())];
}

GroupTable::Element GroupTable::evaluate(const Word& w) const {
  Element x = identity_;
  for (const auto& s : w.syllables()) x = mul(x, pow(image(s.gen), s.exp));
  return x;
}

GroupTable realize(const CosetTable& table) {
  const std::size_t n = table.size();
  const std::size_t cols = table.columns();
  // perm[j][i] = coset i acted on by the representative of coset j.
  std::vector<std::uint32_t> perm(n * n);
  for (std::uint32_t i = 0; i < n; ++i) perm[i] = i;
  for (std::uint32_t j = 1; j < n; ++j) {
    const auto parent = table.tree_parent(j);
    const auto x = table.tree_column(j);
    for (std::uint32_t i = 0; i < n; ++i) perm[j * n + i] = table.act(perm[parent * n + i], x);
  }
  // Regular iff these n permutations are closed under every generator.
  for (std::uint32_t j = 0; j < n; ++j)
    for (std::size_t x = 0; x < cols; ++x) {
      const auto k = table.act(j, x);
      for (std::uint32_t i = 0; i < n; ++i)
        if (perm[k * n + i] != table.act(perm[j * n + i], x))
          throw PreconditionError("coset table action is not regular (nontrivial subgroup)");
    }

  std::vector<GroupTable::Element> mul(n * n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) mul[i * n + j] = perm[j * n + i];
  std::vector<GroupTable::Element> images;
  for (std::size_t g = 0; g < table.generators().size(); ++g) images.push_back(table.act(0, 2 * g));
  return GroupTable(n, std::move(mul), table.generators(), std::move(images), table.representatives());
}

bool is_latin_square(const GroupTable& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n);
  for (GroupTable::Element a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), false);
    for (GroupTable::Element b = 0; b < n; ++b) {
      auto x = g.mul(a, b);
      if (seen[x]) return false;
      seen[x] = true;
    }
    std::fill(seen.begin(), seen.end(), false);
    for (GroupTable::Element b = 0; b < n; ++b) {
      auto x = g.mul(b, a);
      if (seen[x]) return false;
      seen[x] = true;
    }
  }
  return true;
}

bool is_associative(const GroupTable& g, std::uint64_t seed, std::size_t samples) {
  const auto n = static_cast<GroupTable::Element>(g.order());
  auto check = [&](GroupTable::Element a, GroupTable::Element b, GroupTable::Element c) {
    return g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c));
  };
  if (n <= 200) {
    for (GroupTable::Element a = 0; a < n; ++a)
      for (GroupTable::Element b = 0; b < n; ++b)
        for (GroupTable::Element c = 0; c < n; ++c)
          if (!check(a, b, c)) return false;
    return true;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<GroupTable::Element> pick(0, n - 1);
  for (std::size_t s = 0; s < samples; ++s)
    if (!check(pick(rng), pick(rng), pick(rng))) return false;
  return true;
}

std::uint64_t element_order(const GroupTable& g, GroupTable::Element x) {
  std::uint64_t k = 1;
  for (auto y = x; y != g.identity(); y = g.mul(y, x)) ++k;
  return k;
}

std::uint64_t exponent(const GroupTable& g) {
  std::uint64_t e = 1;
  for (GroupTable::Element x = 0; x < g.order(); ++x) e = std::lcm(e, element_order(g, x));
  return e;
}

std::vector<GroupTable::Element> subgroup_closure(const GroupTable& g,
                                                  const std::vector<GroupTable::Element>& gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<GroupTable::Element> elems{g.identity()};
  in[g.identity()] = true;
  // Finite group: closing under right multiplication by generators suffices.
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (auto s : gens) {
      auto y = g.mul(elems[i], s);
      if (!in[y]) {
        in[y] = true;
        elems.push_back(y);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<GroupTable::Element> generating_set(const GroupTable& g) {
  if (subgroup_closure(g, g.generator_images()).size() == g.order()) return g.generator_images();
  std::vector<GroupTable::Element> gens;
  std::vector<GroupTable::Element> closure{g.identity()};
  for (GroupTable::Element x = 0; x < g.order() && closure.size() < g.order(); ++x) {
    if (std::binary_search(closure.begin(), closure.end(), x)) continue;
    gens.push_back(x);
    closure = subgroup_closure(g, gens);
  }
  return gens;
}

}  // namespace centext
