#include "centext/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "centext/errors.hpp"

namespace centext {

ElementSet center(const GroupTable& g) {
  ElementSet z;
  for (GroupTable::Element x = 0; x < g.order(); ++x) {
    bool central = true;
    for (GroupTable::Element y = 0; y < g.order() && central; ++y) central = g.mul(x, y) == g.mul(y, x);
    if (central) z.push_back(x);
  }
  return z;
}

ElementSet verbal_nth_power_subgroup(const GroupTable& g, int n) {
  std::set<GroupTable::Element> powers;
  for (GroupTable::Element x = 0; x < g.order(); ++x) powers.insert(g.pow(x, n));
  return subgroup_closure(g, {powers.begin(), powers.end()});
}

std::optional<std::pair<GroupTable::Element, GroupTable::Element>> check_identity_xn_y(const GroupTable& g,
                                                                                      int n) {
  for (GroupTable::Element x = 0; x < g.order(); ++x) {
    const auto xn = g.pow(x, n);
    for (GroupTable::Element y = 0; y < g.order(); ++y)
      if (g.mul(xn, y) != g.mul(y, xn)) return std::make_pair(x, y);
  }
  return std::nullopt;
}

std::vector<ElementSet> conjugacy_classes(const GroupTable& g) {
  std::vector<bool> done(g.order(), false);
  std::vector<ElementSet> classes;
  for (GroupTable::Element x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    std::set<GroupTable::Element> cls;
    for (GroupTable::Element y = 0; y < g.order(); ++y) cls.insert(g.conjugate(x, y));
    for (auto c : cls) done[c] = true;
    classes.emplace_back(cls.begin(), cls.end());
  }
  return classes;
}

std::string IsoFingerprint::to_string() const {
  std::ostringstream out;
  auto list = [&](const auto& v) {
    out << '{';
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    out << '}';
  };
  out << '(' << order << ',' << exponent << ',' << (abelianization == "0" ? "trivial" : abelianization) << ','
      << center_order << ',';
  list(element_orders);
  out << ',';
  list(class_sizes);
  out << ')';
  return out.str();
}

IsoFingerprint iso_fingerprint(const GroupTable& g) {
  IsoFingerprint f;
  f.order = g.order();
  f.exponent = exponent(g);
  f.abelianization = abelianization(g).to_string();
  f.center_order = center(g).size();
  for (GroupTable::Element x = 0; x < g.order(); ++x) f.element_orders.push_back(element_order(g, x));
  std::sort(f.element_orders.begin(), f.element_orders.end());
  for (const auto& c : conjugacy_classes(g)) f.class_sizes.push_back(c.size());
  std::sort(f.class_sizes.begin(), f.class_sizes.end());
  return f;
}

namespace {

constexpr GroupTable::Element unset = ~GroupTable::Element{0};

// Extends phi along right multiplication by the first k generators; false on
// a conflict or a collision (non-injective map).
bool extend(const GroupTable& g, const GroupTable& h, const ElementSet& gens, const ElementSet& images,
            std::size_t k, std::vector<GroupTable::Element>& phi) {
  std::fill(phi.begin(), phi.end(), unset);
  std::vector<bool> used(h.order(), false);
  phi[g.identity()] = h.identity();
  used[h.identity()] = true;
  std::vector<GroupTable::Element> queue{g.identity()};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const auto x = queue[i];
    for (std::size_t s = 0; s < k; ++s) {
      const auto y = g.mul(x, gens[s]);
      const auto fy = h.mul(phi[x], images[s]);
      if (phi[y] == unset) {
        if (used[fy]) return false;
        phi[y] = fy;
        used[fy] = true;
        queue.push_back(y);
      } else if (phi[y] != fy) {
        return false;
      }
    }
  }
  return true;
}

bool search(const GroupTable& g, const GroupTable& h, const ElementSet& gens, ElementSet& images,
            const std::vector<std::uint64_t>& h_orders, std::vector<GroupTable::Element>& phi) {
  const std::size_t k = images.size();
  if (k == gens.size()) return extend(g, h, gens, images, k, phi);
  const auto want = element_order(g, gens[k]);
  for (GroupTable::Element y = 0; y < h.order(); ++y) {
    if (h_orders[y] != want) continue;
    images.push_back(y);
    if (extend(g, h, gens, images, k + 1, phi) && search(g, h, gens, images, h_orders, phi)) return true;
    images.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<GroupTable::Element>> find_isomorphism(const GroupTable& g, const GroupTable& h) {
  if (g.order() > max_brute_order || h.order() > max_brute_order)
    throw SizeLimitError("brute-force isomorphism limited to order <= " + std::to_string(max_brute_order));
  if (g.order() != h.order() || !(iso_fingerprint(g) == iso_fingerprint(h))) return std::nullopt;
  const auto gens = generating_set(g);
  std::vector<std::uint64_t> h_orders(h.order());
  for (GroupTable::Element y = 0; y < h.order(); ++y) h_orders[y] = element_order(h, y);
  ElementSet images;
  std::vector<GroupTable::Element> phi(g.order(), unset);
  // A bijection compatible with right multiplication by generators is a homomorphism.
  if (search(g, h, gens, images, h_orders, phi)) return phi;
  return std::nullopt;
}

bool brute_isomorphic(const GroupTable& g, const GroupTable& h) { return find_isomorphism(g, h).has_value(); }

std::vector<std::uint32_t> coset_labels(const GroupTable& g, const ElementSet& k) {
  std::vector<std::uint32_t> label(g.order(), ~std::uint32_t{0});
  std::uint32_t next = 0;
  // Identity first so that coset 0 is k.
  std::vector<GroupTable::Element> order{g.identity()};
  for (GroupTable::Element x = 0; x < g.order(); ++x)
    if (x != g.identity()) order.push_back(x);
  for (auto x : order) {
    if (label[x] != ~std::uint32_t{0}) continue;
    for (auto z : k) label[g.mul(x, z)] = next;
    ++next;
  }
  return label;
}

GroupTable quotient_by_normal(const GroupTable& g, const ElementSet& k) {
  if (k.empty() || subgroup_closure(g, k) != ElementSet(k.begin(), k.end()))
    throw PreconditionError("quotient: the given set is not a subgroup");
  std::vector<bool> in(g.order(), false);
  for (auto z : k) in[z] = true;
  for (auto z : k)
    for (GroupTable::Element x = 0; x < g.order(); ++x)
      if (!in[g.conjugate(z, x)]) throw PreconditionError("quotient: subgroup is not normal");

  const auto label = coset_labels(g, k);
  const std::size_t q = g.order() / k.size();
  std::vector<GroupTable::Element> rep(q, ~GroupTable::Element{0});
  for (GroupTable::Element x = 0; x < g.order(); ++x)
    if (rep[label[x]] == ~GroupTable::Element{0}) rep[label[x]] = x;
  std::vector<GroupTable::Element> mul(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) mul[a * q + b] = label[g.mul(rep[a], rep[b])];
  std::vector<GroupTable::Element> images;
  for (auto x : g.generator_images()) images.push_back(label[x]);
  std::vector<Word> words;
  if (!g.words().empty())
    for (auto r : rep) words.push_back(g.words()[r]);
  return GroupTable(q, std::move(mul), g.generators(), std::move(images), std::move(words));
}

GroupTable quotient_by_central(const GroupTable& g, const ElementSet& k) {
  for (auto z : k)
    for (GroupTable::Element x = 0; x < g.order(); ++x)
      if (g.mul(z, x) != g.mul(x, z)) throw PreconditionError("quotient_by_central: subgroup is not central");
  return quotient_by_normal(g, k);
}

TransversalReport subgroup_transversal_check(const GroupTable& g, const ElementSet& d_image) {
  if (g.order() > 200) throw SizeLimitError("subgroup enumeration limited to order <= 200");
  std::set<ElementSet> subgroups;
  for (GroupTable::Element x = 0; x < g.order(); ++x)
    for (GroupTable::Element y = x; y < g.order(); ++y) subgroups.insert(subgroup_closure(g, {x, y}));
  std::set<GroupTable::Element> commutators;
  for (GroupTable::Element x = 0; x < g.order(); ++x)
    for (GroupTable::Element y = 0; y < g.order(); ++y)
      commutators.insert(g.mul(g.mul(g.inverse(x), g.inverse(y)), g.mul(x, y)));
  subgroups.insert(subgroup_closure(g, {commutators.begin(), commutators.end()}));
  subgroups.insert(center(g));

  std::vector<bool> in_d(g.order(), false);
  for (auto z : d_image) in_d[z] = true;
  const auto label = coset_labels(g, d_image);
  TransversalReport report;
  for (const auto& h : subgroups) {
    ++report.subgroups;
    const bool meets = std::any_of(h.begin(), h.end(), [&](auto x) { return x != g.identity() && in_d[x]; });
    if (meets) continue;
    ++report.disjoint;
    std::set<std::uint32_t> images;
    for (auto x : h) images.insert(label[x]);
    if (images.size() != h.size()) report.all_inject = false;
  }
  return report;
}

}  // namespace centext
