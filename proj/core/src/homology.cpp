#include "centext/homology.hpp"

#include <limits>

#include "centext/errors.hpp"
#include "centext/presentation.hpp"

namespace centext {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

}  // namespace

SchreierSystem::SchreierSystem(CosetTable table) : table_(std::move(table)) {
  for (const auto& g : table_.generators())
    if (g.kind != GenKind::ordinary || g.index > static_cast<int>(table_.generators().size()))
      throw PreconditionError("Schreier system needs a table on a_1..a_m only");
  const std::size_t m = table_.generators().size();
  edge_gen_.assign(table_.size() * m, npos);
  const auto& reps = table_.representatives();
  for (std::uint32_t c = 0; c < table_.size(); ++c) {
    for (std::size_t a = 0; a < m; ++a) {
      const auto d = table_.act(c, 2 * a);
      const bool tree = (d != 0 && table_.tree_parent(d) == c && table_.tree_column(d) == 2 * a) ||
                        (c != 0 && table_.tree_parent(c) == d && table_.tree_column(c) == 2 * a + 1);
      if (tree) continue;
      edge_gen_[c * m + a] = gens_.size();
      gens_.push_back(reps[c] * Word::gen(table_.generators()[a]) * invert(reps[d]));
    }
  }
  if (gens_.size() != table_.size() * (m == 0 ? 0 : m - 1) + (m == 0 ? 0 : 1))
    throw ConsistencyError("Schreier generator count violates the Nielsen-Schreier formula");
}

bool SchreierSystem::contains(const Word& w) const { return table_.trace(0, w) == 0; }

std::vector<std::pair<std::size_t, int>> SchreierSystem::rewrite(const Word& w) const {
  const std::size_t m = table_.generators().size();
  std::vector<std::pair<std::size_t, int>> out;
  std::uint32_t c = 0;
  for (const auto& l : w.letters()) {
    const auto a = static_cast<std::size_t>(l.gen.index - 1);
    if (l.gen.kind != GenKind::ordinary || a >= m)
      throw AlphabetError("word uses generator " + generator_name(l.gen) + " outside F_m");
    if (!l.inverse) {
      if (auto s = edge_gen_[c * m + a]; s != npos) out.emplace_back(s, 1);
      c = table_.act(c, 2 * a);
    } else {
      const auto d = table_.act(c, 2 * a + 1);
      if (auto s = edge_gen_[d * m + a]; s != npos) out.emplace_back(s, -1);
      c = d;
    }
  }
  if (c != 0) throw PreconditionError("word " + to_string(w) + " does not lie in N");
  return out;
}

std::vector<BigInt> SchreierSystem::rewrite_abelian(const Word& w) const {
  std::vector<BigInt> v(gens_.size());
  for (const auto& [s, e] : rewrite(w)) v[s] += e;
  return v;
}

SchreierSystem schreier_system(int m, int n, int max_length, std::size_t max_cosets) {
  return SchreierSystem(todd_coxeter(build_burnside(m, n, max_length), {}, max_cosets));
}

RelationModule::RelationModule(SchreierSystem system, int n) : system_(std::move(system)), n_(n) {
  const auto& gens = system_.generators();
  std::vector<std::vector<BigInt>> relations;
  for (std::size_t s = 0; s < gens.size(); ++s) {
    for (const auto& a : system_.table().generators()) {
      const auto x = Word::gen(a);
      auto r = system_.rewrite_abelian(x * gens[s] * invert(x));
      r[s] -= 1;
      relations.push_back(std::move(r));
    }
  }
  v_ = FgAbelianGroup::from_relators(gens.size(), relations);
}

RelationModule relation_module(const SchreierSystem& system, int n) { return RelationModule(system, n); }

RelationModule relation_module(int m, int n, int max_length, std::size_t max_cosets) {
  auto stable = stabilized_order([&](int L) { return build_burnside(m, n, L); }, max_length, max_cosets);
  return RelationModule(schreier_system(m, n, stable.stable_length, max_cosets), n);
}

AbelianElement class_in_V(const Word& w, const RelationModule& rm) {
  return rm.V().from_presenting(rm.system().rewrite_abelian(w));
}

FgAbelianGroup schur_multiplier(const RelationModule& rm) {
  const auto& V = rm.V();
  const auto m = static_cast<std::size_t>(rm.m());
  if (V.free_rank() != m)
    throw ConsistencyError("V has free rank " + std::to_string(V.free_rank()) + ", expected " + std::to_string(m));
  // Image of N in F/[F,F] = Z^m, spanned by exponent sums of the Schreier generators.
  const auto& gens = rm.system().generators();
  IntMatrix image(m, gens.size());
  for (std::size_t s = 0; s < gens.size(); ++s)
    for (std::size_t a = 0; a < m; ++a) image(a, s) = gens[s].exponent_sum(ordinary(static_cast<int>(a) + 1));
  const auto diag = snf(image).diagonal();
  for (std::size_t a = 0; a < m; ++a)
    if (a >= diag.size() || diag[a] != rm.n())
      throw ConsistencyError("image of N in Z^m is not nZ^m");
  return FgAbelianGroup::from_invariants(0, V.torsion());
}

std::size_t ext_dim(const FgAbelianGroup& a, std::uint32_t p) {
  std::size_t k = 0;
  for (const auto& t : a.torsion())
    if (mpz_divisible_ui_p(t.get_mpz_t(), p)) ++k;
  return k;
}

std::size_t p_rank(const FgAbelianGroup& a, std::uint32_t p) { return ext_dim(a, p); }

FgAbelianGroup abelianization(const GroupTable& g) {
  // Z^|G| modulo e_1 and e_x + e_s - e_xs for s in a generating set.
  const std::size_t n = g.order();
  std::vector<std::vector<BigInt>> rels;
  std::vector<BigInt> unit(n);
  unit[g.identity()] = 1;
  rels.push_back(std::move(unit));
  for (auto s : generating_set(g))
    for (GroupTable::Element x = 0; x < n; ++x) {
      std::vector<BigInt> r(n);
      r[x] += 1;
      r[s] += 1;
      r[g.mul(x, s)] -= 1;
      rels.push_back(std::move(r));
    }
  return FgAbelianGroup::from_relators(n, rels);
}

}  // namespace centext
