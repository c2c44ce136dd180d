#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "centext/matrix.hpp"
#include "centext/word.hpp"

namespace centext {

class AbelianElement;

// Finitely generated abelian group Z^r x C_{t1} x ... x C_{tk} (t1 | t2 | ...)
// presented on some set of generators. Canonical coordinates list the free
// part first, then the torsion part in divisibility order.
class FgAbelianGroup {
 public:
  // Trivial group on zero generators.
  FgAbelianGroup();

  // Z^gen_count modulo the row span of the relator vectors.
  static FgAbelianGroup from_relators(std::size_t gen_count,
                                      const std::vector<std::vector<BigInt>>& relators);
  // Canonical group whose presenting generators are its canonical generators.
  static FgAbelianGroup from_invariants(std::size_t free_rank, const std::vector<BigInt>& torsion);

  std::size_t free_rank() const { return data_->free_rank; }
  const std::vector<BigInt>& torsion() const { return data_->torsion; }
  std::size_t dimension() const { return data_->free_rank + data_->torsion.size(); }
  std::size_t presenting_gen_count() const { return data_->gen_count; }

  // Modulus of canonical coordinate i: 0 for free coordinates.
  BigInt modulus(std::size_t i) const;
  bool is_finite() const { return data_->free_rank == 0; }
  // Group order, nullopt when infinite.
  std::optional<BigInt> order() const;
  // Least e > 0 with e * x = 0 for all x; nullopt when infinite.
  std::optional<BigInt> exponent() const;

  AbelianElement zero() const;
  // Element given by canonical coordinates (normalized).
  AbelianElement element(std::vector<BigInt> coords) const;
  // Image of an exponent vector over the presenting generators.
  AbelianElement from_presenting(std::span<const BigInt> exponents) const;
  // i-th presenting generator.
  AbelianElement presenting_generator(std::size_t i) const;
  // An exponent vector over the presenting generators representing x.
  std::vector<BigInt> to_presenting(const AbelianElement& x) const;

  bool same_structure(const FgAbelianGroup& other) const {
    return free_rank() == other.free_rank() && torsion() == other.torsion();
  }

  // `Z^r x C_d1 x ... x C_dk`; `0` for the trivial group.
  std::string to_string() const;

 private:
  friend class AbelianElement;

  struct Data {
    std::size_t gen_count = 0;
    std::size_t free_rank = 0;
    std::vector<BigInt> torsion;
    // gen_count x dimension: exponent row vector x maps to x * to_canonical.
    IntMatrix to_canonical;
    // dimension x gen_count: canonical generator i is row i over presenting gens.
    IntMatrix from_canonical;
  };

  explicit FgAbelianGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

class AbelianElement {
 public:
  const std::vector<BigInt>& coords() const { return coords_; }
  FgAbelianGroup group() const { return FgAbelianGroup(group_); }

  bool is_zero() const;
  AbelianElement operator+(const AbelianElement& other) const;
  AbelianElement operator-(const AbelianElement& other) const;
  AbelianElement operator-() const;
  AbelianElement scaled(const BigInt& k) const;
  // Additive order; nullopt when infinite.
  std::optional<BigInt> order() const;

  friend bool operator==(const AbelianElement& x, const AbelianElement& y);

 private:
  friend class FgAbelianGroup;
  AbelianElement(std::shared_ptr<const FgAbelianGroup::Data> g, std::vector<BigInt> coords);
  void check_same_group(const AbelianElement& other) const;

  std::shared_ptr<const FgAbelianGroup::Data> group_;
  std::vector<BigInt> coords_;
};

AbelianElement add(const AbelianElement& x, const AbelianElement& y);
AbelianElement negate(const AbelianElement& x);
bool is_zero(const AbelianElement& x);

// Homomorphism on canonical coordinates: target = matrix * source.
class AbelianHom {
 public:
  const FgAbelianGroup& source() const { return source_; }
  const FgAbelianGroup& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }

  AbelianElement operator()(const AbelianElement& x) const;
  bool is_surjective() const;

 private:
  friend AbelianHom hom_check(const IntMatrix&, const FgAbelianGroup&, const FgAbelianGroup&);
  AbelianHom(IntMatrix m, FgAbelianGroup s, FgAbelianGroup t)
      : matrix_(std::move(m)), source_(std::move(s)), target_(std::move(t)) {}

  IntMatrix matrix_;
  FgAbelianGroup source_;
  FgAbelianGroup target_;
};

// Validates matrix (target.dimension() x source.dimension()); throws
// IllDefinedHom naming the first source torsion generator whose order does
// not annihilate its image.
AbelianHom hom_check(const IntMatrix& matrix, const FgAbelianGroup& source,
                     const FgAbelianGroup& target);

// Factors as written in `Z^r x C_a x C_b ...`; C_1 factors are dropped.
struct AbelianFactors {
  std::size_t free_rank = 0;
  std::vector<BigInt> cyclic;
};

// Accepts `Z`, `Z^r`, `C_a` (or `Ca`) joined by `x`; `0`, `1` and `trivial`
// denote the trivial group.
AbelianFactors parse_abelian_factors(std::string_view text);
FgAbelianGroup parse_abelian_structure(std::string_view text);

// Element of Q under the normalization d_i -> 1/i!.
class QElement {
 public:
  QElement() = default;
  explicit QElement(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }
  QElement(long num, long den) : value_(num, den) { value_.canonicalize(); }

  const mpq_class& value() const { return value_; }
  std::string to_string() const { return value_.get_str(); }

  friend bool operator==(const QElement& x, const QElement& y) { return x.value_ == y.value_; }
  friend QElement operator+(const QElement& x, const QElement& y) {
    return QElement(mpq_class(x.value_ + y.value_));
  }

 private:
  mpq_class value_{0};
};

QElement q_word_to_rational(const Word& w);
// d_k^t with k minimal such that the denominator divides k!.
Word q_rational_to_word(const QElement& q);
// True iff w evaluates to 0, i.e. w is a relator of the presentation of Q.
bool q_verify_relator(const Word& w);

}  // namespace centext
