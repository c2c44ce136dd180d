#include <vector>

#include "centext/abelian.hpp"
#include "centext/errors.hpp"

namespace centext {

namespace {

BigInt factorial(unsigned long k) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return f;
}

// v_p(k!) by Legendre's formula.
unsigned long legendre(unsigned long k, unsigned long p) {
  unsigned long total = 0;
  for (unsigned long q = k / p; q > 0; q /= p) total += q;
  return total;
}

unsigned long least_k_for_prime_power(unsigned long p, unsigned long e) {
  unsigned long k = p;
  while (legendre(k, p) < e) k += p;
  return k;
}

// Least k with den | k!.
unsigned long kempner(const BigInt& den) {
  if (den == 1) return 1;
  unsigned long k = 1;
  BigInt rest = den;
  for (unsigned long p = 2; p <= 1'000'000 && p * p <= rest; ++p) {
    if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) continue;
    unsigned long e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    k = std::max(k, least_k_for_prime_power(p, e));
  }
  if (rest == 1) return k;
  if (mpz_probab_prime_p(rest.get_mpz_t(), 30) > 0) {
    if (!rest.fits_ulong_p()) throw PreconditionError("denominator has a prime factor too large for k!");
    return std::max(k, rest.get_ui());
  }
  // Composite cofactor with only large prime factors: scan k! mod rest.
  BigInt acc = 1;
  for (unsigned long j = 1;; ++j) {
    acc = (acc * j) % rest;
    if (acc == 0) return std::max(k, j);
  }
}

}  // namespace

QElement q_word_to_rational(const Word& w) {
  if (!w.uses_only(GenKind::central))
    throw PreconditionError("q_word_to_rational: word contains an ordinary generator");
  mpq_class total = 0;
  for (const auto& s : w.syllables()) {
    mpq_class term(s.exp, factorial(static_cast<unsigned long>(s.gen.index)));
    term.canonicalize();
    total += term;
  }
  return QElement(total);
}

Word q_rational_to_word(const QElement& q) {
  const mpq_class& v = q.value();
  if (v == 0) return Word();
  const unsigned long k = kempner(v.get_den());
  BigInt t = factorial(k);
  mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), v.get_den_mpz_t());
  t *= v.get_num();
  return Word::from_syllables({{central(static_cast<int>(k)), t}});
}

bool q_verify_relator(const Word& w) { return q_word_to_rational(w).value() == 0; }

}  // namespace centext
