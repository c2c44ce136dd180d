#include <cstddef>
#include <vector>

#include "centext/errors.hpp"
#include "centext/homology.hpp"

namespace centext {

namespace {

constexpr std::size_t max_cocycle_order = 200;

// Normalized cochains: f(1, x) = f(x, 1) = 0, so unknowns are the pairs of
// non-identity elements.
class Cochains {
 public:
  Cochains(const GroupTable& g, std::uint32_t p) : g_(g), p_(p) {
    index_.assign(g.order(), 0);
    std::size_t k = 0;
    for (GroupTable::Element x = 0; x < g.order(); ++x)
      if (x != g.identity()) index_[x] = k++;
    n1_ = k;
  }

  std::size_t unknowns() const { return n1_ * n1_; }

  void add(ModPVector& row, GroupTable::Element x, GroupTable::Element y, int sign) const {
    if (x == g_.identity() || y == g_.identity()) return;
    auto& v = row[index_[x] * n1_ + index_[y]];
    v = static_cast<std::uint32_t>((v + (sign > 0 ? 1 : p_ - 1)) % p_);
  }

  // f(h,k) - f(gh,k) + f(g,hk) - f(g,h) = 0
  void cocycle_row(std::vector<ModPVector>& rows, GroupTable::Element g, GroupTable::Element h,
                   GroupTable::Element k) const {
    ModPVector row(unknowns(), 0);
    add(row, h, k, 1);
    add(row, g_.mul(g, h), k, -1);
    add(row, g, g_.mul(h, k), 1);
    add(row, g, h, -1);
    for (auto v : row)
      if (v != 0) {
        rows.push_back(std::move(row));
        return;
      }
  }

  // dim B^2 = (|G| - 1) - dim Z^1, where Z^1 = ker(t -> (t(g) + t(h) - t(gh))).
  std::size_t coboundary_dim() const {
    std::vector<ModPVector> rows;
    for (GroupTable::Element g = 0; g < g_.order(); ++g)
      for (GroupTable::Element h = 0; h < g_.order(); ++h) {
        if (g == g_.identity() || h == g_.identity()) continue;
        ModPVector row(n1_, 0);
        auto bump = [&](GroupTable::Element x, std::uint32_t by) {
          if (x != g_.identity()) row[index_[x]] = (row[index_[x]] + by) % p_;
        };
        bump(g, 1);
        bump(h, 1);
        bump(g_.mul(g, h), p_ - 1);
        rows.push_back(std::move(row));
      }
    return n1_ - nullspace_mod_p(std::move(rows), n1_, p_).size();
  }

 private:
  const GroupTable& g_;
  std::uint32_t p_;
  std::vector<std::size_t> index_;
  std::size_t n1_ = 0;
};

std::size_t h2_dim(const GroupTable& g, std::uint32_t p, const std::vector<GroupTable::Element>& third) {
  if (g.order() > max_cocycle_order)
    throw SizeLimitError("cocycle oracle limited to groups of order <= " + std::to_string(max_cocycle_order));
  if (!is_prime(p)) throw PreconditionError("cocycle_h2_dim: " + std::to_string(p) + " is not prime");
  if (g.order() == 1) return 0;
  Cochains c(g, p);
  std::vector<ModPVector> rows;
  for (GroupTable::Element x = 0; x < g.order(); ++x)
    for (GroupTable::Element y = 0; y < g.order(); ++y)
      for (auto k : third) c.cocycle_row(rows, x, y, k);
  const std::size_t cocycles = nullspace_mod_p(std::move(rows), c.unknowns(), p).size();
  return cocycles - c.coboundary_dim();
}

}  // namespace

// The identity for k among a generating set implies it for all k: with
// multiplication (x,a)(y,b) = (xy, a+b+f(x,y)) on G x F_p, the elements w
// satisfying (uv)w = u(vw) for all u, v form a set containing the identity
// and closed under right multiplication by generators.
std::size_t cocycle_h2_dim(const GroupTable& g, std::uint32_t p) {
  return h2_dim(g, p, generating_set(g));
}

std::size_t cocycle_h2_dim_full(const GroupTable& g, std::uint32_t p) {
  std::vector<GroupTable::Element> all(g.order());
  for (GroupTable::Element x = 0; x < g.order(); ++x) all[x] = x;
  return h2_dim(g, p, all);
}

}  // namespace centext
