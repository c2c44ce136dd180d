#include "centext/errors.hpp"
#include "centext/verify.hpp"

namespace centext {

namespace {

std::vector<AbelianElement> period_classes(const RelationModule& rm, int max_length) {
  std::vector<AbelianElement> out;
  for (const auto& p : enumerate_periods(rm.m(), max_length)) out.push_back(class_in_V(power(p, rm.n()), rm));
  return out;
}

}  // namespace

Assignment suggest_assignment(const RelationModule& rm, const AbelianPresentation& d, const AbelianHom& psi,
                              int max_length) {
  if (!psi.source().same_structure(rm.V())) throw PreconditionError("psi must be defined on V");
  if (!psi.target().same_structure(d.group())) throw PreconditionError("psi must map into D");
  const auto group = d.group();
  Assignment sigma;
  for (const auto& c : period_classes(rm, max_length)) {
    // Re-home psi(c) in d.group() so word_for sees its own coordinates.
    sigma.images.push_back(d.word_for(group.element(psi(c).coords())));
  }
  return sigma;
}

Consistency assignment_consistency(const Assignment& sigma, const RelationModule& rm, const AbelianPresentation& d,
                                   int max_length) {
  const auto classes = period_classes(rm, max_length);
  if (classes.size() != sigma.size())
    throw PreconditionError("assignment covers " + std::to_string(sigma.size()) + " periods but the schema has " +
                            std::to_string(classes.size()));
  const auto& V = rm.V();
  const auto D = d.group();
  std::vector<AbelianElement> targets;
  for (const auto& w : sigma.images) targets.push_back(D.from_presenting(d.exponent_vector(w)));

  const std::size_t s = classes.size();
  const std::size_t vd = V.dimension();
  const std::size_t vt = vd - V.free_rank();
  // [C | T]: columns are the period classes, then the torsion moduli of V.
  IntMatrix ct(vd, s + vt);
  for (std::size_t j = 0; j < s; ++j)
    for (std::size_t i = 0; i < vd; ++i) ct(i, j) = classes[j].coords()[i];
  for (std::size_t t = 0; t < vt; ++t) ct(V.free_rank() + t, s + t) = V.modulus(V.free_rank() + t);

  Consistency result;
  const auto kernel = integer_kernel(ct);
  for (std::size_t k = 0; k < kernel.cols(); ++k) {
    auto residue = D.zero();
    std::vector<BigInt> lambda(s);
    for (std::size_t j = 0; j < s; ++j) {
      lambda[j] = kernel(j, k);
      residue = residue + targets[j].scaled(lambda[j]);
    }
    if (!residue.is_zero()) {
      result.lambda = std::move(lambda);
      result.residue = residue;
      return result;
    }
  }

  result.consistent = true;
  // psi(e_i) = sum_j mu_j sigma(j) for any e_i = sum_j mu_j class(P_j^n).
  IntMatrix psi(D.dimension(), vd);
  for (std::size_t i = 0; i < vd && s > 0; ++i) {
    std::vector<BigInt> e(vd);
    e[i] = 1;
    auto mu = solve_integer(ct, e);
    if (!mu) return result;
    auto image = D.zero();
    for (std::size_t j = 0; j < s; ++j) image = image + targets[j].scaled((*mu)[j]);
    for (std::size_t r = 0; r < D.dimension(); ++r) psi(r, i) = image.coords()[r];
  }
  result.psi = hom_check(psi, V, D);
  return result;
}

}  // namespace centext
