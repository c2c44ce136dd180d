#include "centext/abelian.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "centext/errors.hpp"

namespace centext {

namespace {

BigInt normalize_coord(const BigInt& x, const BigInt& mod) {
  if (sgn(mod) == 0) return x;
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t());
  return r;
}

}  // namespace

FgAbelianGroup::FgAbelianGroup() : data_(std::make_shared<Data>()) {}

FgAbelianGroup FgAbelianGroup::from_relators(std::size_t gen_count,
                                             const std::vector<std::vector<BigInt>>& relators) {
  IntMatrix rel = IntMatrix::from_rows(relators, gen_count);
  auto d = snf(rel);
  const auto diag = d.diagonal();

  std::vector<std::size_t> free_idx, torsion_idx;
  auto data = std::make_shared<Data>();
  data->gen_count = gen_count;
  for (std::size_t j = 0; j < gen_count; ++j) {
    BigInt s = j < diag.size() ? diag[j] : BigInt(0);
    if (s == 1) continue;
    if (sgn(s) == 0) {
      free_idx.push_back(j);
    } else {
      torsion_idx.push_back(j);
      data->torsion.push_back(s);
    }
  }
  data->free_rank = free_idx.size();

  std::vector<std::size_t> order = free_idx;
  order.insert(order.end(), torsion_idx.begin(), torsion_idx.end());
  data->to_canonical = IntMatrix(gen_count, order.size());
  data->from_canonical = IntMatrix(order.size(), gen_count);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t g = 0; g < gen_count; ++g) {
      data->to_canonical(g, i) = d.V(g, order[i]);
      data->from_canonical(i, g) = d.V_inverse(order[i], g);
    }
  }
  return FgAbelianGroup(std::move(data));
}

FgAbelianGroup FgAbelianGroup::from_invariants(std::size_t free_rank,
                                               const std::vector<BigInt>& torsion) {
  const std::size_t n = free_rank + torsion.size();
  std::vector<std::vector<BigInt>> rels;
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (sgn(torsion[i]) <= 0) throw PreconditionError("torsion factors must be positive");
    std::vector<BigInt> r(n);
    r[free_rank + i] = torsion[i];
    rels.push_back(std::move(r));
  }
  return from_relators(n, rels);
}

BigInt FgAbelianGroup::modulus(std::size_t i) const {
  if (i >= dimension()) throw DimensionError("canonical coordinate out of range");
  return i < data_->free_rank ? BigInt(0) : data_->torsion[i - data_->free_rank];
}

std::optional<BigInt> FgAbelianGroup::order() const {
  if (data_->free_rank > 0) return std::nullopt;
  BigInt o = 1;
  for (const auto& t : data_->torsion) o *= t;
  return o;
}

std::optional<BigInt> FgAbelianGroup::exponent() const {
  if (data_->free_rank > 0) return std::nullopt;
  return data_->torsion.empty() ? BigInt(1) : data_->torsion.back();
}

AbelianElement FgAbelianGroup::zero() const {
  return AbelianElement(data_, std::vector<BigInt>(dimension()));
}

AbelianElement FgAbelianGroup::element(std::vector<BigInt> coords) const {
  if (coords.size() != dimension()) throw DimensionError("coordinate vector length mismatch");
  return AbelianElement(data_, std::move(coords));
}

AbelianElement FgAbelianGroup::from_presenting(std::span<const BigInt> exponents) const {
  if (exponents.size() != data_->gen_count)
    throw DimensionError("exponent vector length does not match generator count");
  std::vector<BigInt> coords(dimension());
  for (std::size_t g = 0; g < exponents.size(); ++g) {
    if (sgn(exponents[g]) == 0) continue;
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += exponents[g] * data_->to_canonical(g, i);
  }
  return AbelianElement(data_, std::move(coords));
}

AbelianElement FgAbelianGroup::presenting_generator(std::size_t i) const {
  std::vector<BigInt> e(data_->gen_count);
  e.at(i) = 1;
  return from_presenting(e);
}

std::vector<BigInt> FgAbelianGroup::to_presenting(const AbelianElement& x) const {
  if (x.group_ != data_ && !same_structure(x.group()))
    throw PreconditionError("element belongs to a different group");
  std::vector<BigInt> out(data_->gen_count);
  for (std::size_t i = 0; i < x.coords().size(); ++i) {
    if (sgn(x.coords()[i]) == 0) continue;
    for (std::size_t g = 0; g < out.size(); ++g) out[g] += x.coords()[i] * data_->from_canonical(i, g);
  }
  return out;
}

std::string FgAbelianGroup::to_string() const {
  std::vector<std::string> parts;
  if (data_->free_rank == 1) parts.push_back("Z");
  if (data_->free_rank > 1) parts.push_back("Z^" + std::to_string(data_->free_rank));
  for (const auto& t : data_->torsion) parts.push_back("C_" + t.get_str());
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " x " + parts[i];
  return out;
}

AbelianElement::AbelianElement(std::shared_ptr<const FgAbelianGroup::Data> g,
                               std::vector<BigInt> coords)
    : group_(std::move(g)), coords_(std::move(coords)) {
  for (std::size_t i = group_->free_rank; i < coords_.size(); ++i)
    coords_[i] = normalize_coord(coords_[i], group_->torsion[i - group_->free_rank]);
}

void AbelianElement::check_same_group(const AbelianElement& other) const {
  if (group_ == other.group_) return;
  if (group_->free_rank == other.group_->free_rank && group_->torsion == other.group_->torsion) return;
  throw PreconditionError("abelian group mismatch");
}

bool AbelianElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const BigInt& c) { return sgn(c) == 0; });
}

AbelianElement AbelianElement::operator+(const AbelianElement& other) const {
  check_same_group(other);
  std::vector<BigInt> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coords_[i] + other.coords_[i];
  return AbelianElement(group_, std::move(c));
}

AbelianElement AbelianElement::operator-() const {
  std::vector<BigInt> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coords_[i];
  return AbelianElement(group_, std::move(c));
}

AbelianElement AbelianElement::operator-(const AbelianElement& other) const { return *this + (-other); }

AbelianElement AbelianElement::scaled(const BigInt& k) const {
  std::vector<BigInt> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coords_[i] * k;
  return AbelianElement(group_, std::move(c));
}

std::optional<BigInt> AbelianElement::order() const {
  BigInt o = 1;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (sgn(coords_[i]) == 0) continue;
    if (i < group_->free_rank) return std::nullopt;
    const BigInt& t = group_->torsion[i - group_->free_rank];
    BigInt g = gcd(coords_[i], t);
    BigInt ord = t / g;
    o = lcm(o, ord);
  }
  return o;
}

bool operator==(const AbelianElement& x, const AbelianElement& y) {
  x.check_same_group(y);
  return x.coords_ == y.coords_;
}

AbelianElement add(const AbelianElement& x, const AbelianElement& y) { return x + y; }
AbelianElement negate(const AbelianElement& x) { return -x; }
bool is_zero(const AbelianElement& x) { return x.is_zero(); }

AbelianElement AbelianHom::operator()(const AbelianElement& x) const {
  if (!x.group().same_structure(source_)) throw PreconditionError("element is not in the source group");
  return target_.element(matrix_.apply(x.coords()));
}

bool AbelianHom::is_surjective() const {
  const std::size_t td = target_.dimension();
  std::vector<std::size_t> torsion_rows;
  for (std::size_t r = target_.free_rank(); r < td; ++r) torsion_rows.push_back(r);
  IntMatrix m(td, matrix_.cols() + torsion_rows.size());
  for (std::size_t r = 0; r < td; ++r)
    for (std::size_t c = 0; c < matrix_.cols(); ++c) m(r, c) = matrix_(r, c);
  for (std::size_t k = 0; k < torsion_rows.size(); ++k)
    m(torsion_rows[k], matrix_.cols() + k) = target_.modulus(torsion_rows[k]);
  const auto diag = snf(m).diagonal();
  if (diag.size() < td) return false;
  for (std::size_t i = 0; i < td; ++i)
    if (diag[i] != 1) return false;
  return true;
}

AbelianHom hom_check(const IntMatrix& matrix, const FgAbelianGroup& source,
                     const FgAbelianGroup& target) {
  if (matrix.rows() != target.dimension() || matrix.cols() != source.dimension())
    throw DimensionError("hom_check: matrix must be " + std::to_string(target.dimension()) + " x " +
                         std::to_string(source.dimension()));
  for (std::size_t i = source.free_rank(); i < source.dimension(); ++i) {
    const BigInt d = source.modulus(i);
    for (std::size_t r = 0; r < target.dimension(); ++r) {
      BigInt image = d * matrix(r, i);
      const BigInt t = target.modulus(r);
      const bool vanishes = sgn(t) == 0 ? sgn(image) == 0
                                        : mpz_divisible_p(image.get_mpz_t(), t.get_mpz_t()) != 0;
      if (!vanishes) throw IllDefinedHom(i);
    }
  }
  return AbelianHom(matrix, source, target);
}

AbelianFactors parse_abelian_factors(std::string_view text) {
  std::string s(text);
  for (auto& ch : s)
    if (ch == 'x' || ch == '*') ch = ' ';
  std::istringstream in(s);
  std::string tok;
  AbelianFactors out;
  bool any = false;
  auto number_from = [&](std::size_t pos) {
    std::string num = tok.substr(pos);
    if (num.empty() ||
        !std::all_of(num.begin(), num.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw ParseError("bad abelian factor '" + tok + "'");
    return BigInt(num);
  };
  while (in >> tok) {
    any = true;
    if (tok == "0" || tok == "1" || tok == "trivial") continue;
    if (tok == "Z") {
      out.free_rank += 1;
    } else if (tok.rfind("Z^", 0) == 0) {
      out.free_rank += number_from(2).get_ui();
    } else if (tok[0] == 'C') {
      BigInt t = number_from(tok.rfind("C_", 0) == 0 ? 2 : 1);
      if (t < 1) throw ParseError("cyclic factor order must be positive: '" + tok + "'");
      if (t > 1) out.cyclic.push_back(t);
    } else {
      throw ParseError("bad abelian factor '" + tok + "'");
    }
  }
  if (!any) throw ParseError("empty abelian group description");
  return out;
}

FgAbelianGroup parse_abelian_structure(std::string_view text) {
  auto f = parse_abelian_factors(text);
  return FgAbelianGroup::from_invariants(f.free_rank, f.cyclic);
}

}  // namespace centext
