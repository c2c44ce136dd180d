#include <algorithm>
#include <sstream>

#include "centext/errors.hpp"
#include "centext/verify.hpp"

namespace centext {

namespace {

const char* status_name(ItemStatus s) {
  switch (s) {
    case ItemStatus::pass: return "PASS";
    case ItemStatus::fail: return "FAIL";
    case ItemStatus::reported: return "REPORTED";
  }
  return "?";
}

Word ordinary_part(const Word& w) {
  std::vector<Syllable> raw;
  for (const auto& s : w.syllables())
    if (s.gen.kind == GenKind::ordinary) raw.push_back(s);
  return reduce(std::move(raw));
}

bool includes(const ElementSet& big, const ElementSet& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::string order_text(const std::optional<BigInt>& x) { return x ? x->get_str() : std::string("infinite"); }

}  // namespace

bool Theorem1Report::embeds() const { return d_order && *d_order == d_image.size(); }

bool Theorem1Report::all_pass() const {
  return std::none_of(std::begin(items), std::end(items),
                      [](const ItemResult& r) { return r.status == ItemStatus::fail; });
}

std::string Theorem1Report::to_string() const {
  std::ostringstream out;
  out << "A_D(" << m << "," << n << ") at L=" << max_length << ": order " << group_order << '\n';
  for (int k = 0; k < 4; ++k)
    out << "ITEM " << k + 1 << ": " << status_name(items[k].status) << " — " << items[k].detail << '\n';
  out << "EMBEDDING: " << (embeds() ? "yes" : "no") << " (|D_image|=" << d_image.size()
      << ", |D|=" << order_text(d_order) << ")\n";
  return out.str();
}

Theorem1Report verify_theorem1_suite(int m, int n, int max_length, const AbelianPresentation& d,
                                     const Assignment& sigma, std::size_t max_cosets) {
  Theorem1Report rep;
  rep.m = m;
  rep.n = n;
  rep.max_length = max_length;

  const auto presentation = build_a_d(m, n, max_length, d, sigma);
  const auto a = realize(todd_coxeter(presentation, {}, max_cosets));
  const auto b_table = todd_coxeter(build_burnside(m, n, max_length), {}, max_cosets);
  const auto b = realize(b_table);
  rep.group_order = a.order();
  rep.burnside_order = b.order();

  ElementSet d_gens;
  for (int g : d.gens) d_gens.push_back(a.image(central(g)));
  rep.d_image = subgroup_closure(a, d_gens);
  const auto D = d.group();
  rep.d_order = D.order();
  rep.center = center(a);

  // Item 1.
  rep.identity_witness = check_identity_xn_y(a, n);
  {
    auto& item = rep.items[0];
    std::ostringstream detail;
    if (!rep.identity_witness) {
      item.status = ItemStatus::pass;
      detail << "[x^" << n << ",y]=1 on all " << a.order() * a.order() << " pairs";
    } else {
      item.status = ItemStatus::fail;
      detail << "[x^" << n << ",y] != 1 for x=" << to_string(a.words()[rep.identity_witness->first])
             << ", y=" << to_string(a.words()[rep.identity_witness->second]);
    }
    item.detail = detail.str();
  }

  // Item 2.
  rep.verbal = verbal_nth_power_subgroup(a, n);
  ElementSet expected_gens;
  for (const auto& w : sigma.images) expected_gens.push_back(a.evaluate(w));
  for (auto x : d_gens) expected_gens.push_back(a.pow(x, n));
  rep.verbal_expected = subgroup_closure(a, expected_gens);
  const auto rm = relation_module(SchreierSystem(b_table), n);
  const auto consistency = assignment_consistency(sigma, rm, d, max_length);
  rep.consistent = consistency.consistent;
  {
    auto& item = rep.items[1];
    std::ostringstream detail;
    const bool exponent_divides = D.exponent() && mpz_divisible_ui_p(D.exponent()->get_mpz_t(), n);
    const bool surjective = consistency.psi && consistency.psi->is_surjective();
    if (surjective && exponent_divides) {
      item.status = rep.verbal == rep.d_image ? ItemStatus::pass : ItemStatus::fail;
      detail << "verbal x^" << n << "-subgroup (order " << rep.verbal.size() << ") "
             << (rep.verbal == rep.d_image ? "=" : "!=") << " D-image (order " << rep.d_image.size() << ")";
    } else {
      item.status = rep.verbal == rep.verbal_expected ? ItemStatus::reported : ItemStatus::fail;
      detail << "verbal x^" << n << "-subgroup has order " << rep.verbal.size()
             << (rep.verbal == rep.verbal_expected ? " = " : " != ") << "<psi(V), D^" << n << "> (order "
             << rep.verbal_expected.size() << "); D-image order " << rep.d_image.size() << " ("
             << (consistency.consistent ? (surjective ? "exp(D) does not divide n" : "psi not surjective")
                                        : "sigma inconsistent")
             << ")";
    }
    item.detail = detail.str();
  }

  // Item 3, restated: D-image in Z(A) and pi(Z(A)) in Z(B).
  const auto zb = center(b);
  rep.burnside_center_order = zb.size();
  {
    auto& item = rep.items[2];
    const bool d_central = includes(rep.center, rep.d_image);
    bool projects = true;
    for (auto z : rep.center) {
      const auto image = b.evaluate(ordinary_part(a.words()[z]));
      if (!std::binary_search(zb.begin(), zb.end(), image)) projects = false;
    }
    item.status = d_central && projects ? ItemStatus::pass : ItemStatus::fail;
    std::ostringstream detail;
    detail << "D-image " << (d_central ? "in" : "not in") << " Z(A); pi(Z(A)) " << (projects ? "in" : "not in")
           << " Z(B) (|Z(A)|=" << rep.center.size() << ", |D_image|=" << rep.d_image.size()
           << ", |Z(B)|=" << zb.size() << "); Z(A) = D-image: " << (rep.center == rep.d_image ? "yes" : "no");
    if (zb.size() > 1) detail << " (Z(B) nontrivial at this exponent)";
    item.detail = detail.str();
  }

  // Item 4.
  {
    auto& item = rep.items[3];
    std::ostringstream detail;
    try {
      const auto q = quotient_by_central(a, rep.d_image);
      rep.fingerprints_match = iso_fingerprint(q) == iso_fingerprint(b);
      if (q.order() <= max_brute_order && b.order() <= max_brute_order) {
        rep.isomorphism = find_isomorphism(q, b);
        item.status = rep.isomorphism ? ItemStatus::pass : ItemStatus::fail;
        detail << "A/D-image (order " << q.order() << ") " << (rep.isomorphism ? "isomorphic" : "not isomorphic")
               << " to B(" << m << "," << n << ") truncation (order " << b.order() << ")";
      } else {
        item.status = rep.fingerprints_match ? ItemStatus::reported : ItemStatus::fail;
        detail << "A/D-image (order " << q.order() << ") fingerprint " << (rep.fingerprints_match ? "=" : "!=")
               << " B(" << m << "," << n << ") truncation (order " << b.order()
               << "); too large for brute-force isomorphism";
      }
    } catch (const PreconditionError& e) {
      item.status = ItemStatus::fail;
      detail << e.what();
    }
    item.detail = detail.str();
  }
  return rep;
}

}  // namespace centext
