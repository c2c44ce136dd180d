#include "centext/presentation.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>

#include "centext/errors.hpp"

namespace centext {

void Presentation::add_relator(const Word& w) {
  if (w.empty()) return;
  if (std::find(relators.begin(), relators.end(), w) != relators.end()) return;
  relators.push_back(w);
}

bool Presentation::declares(Generator g) const {
  if (g.kind == GenKind::ordinary) return g.index >= 1 && g.index <= rank;
  return std::find(central_gens.begin(), central_gens.end(), g.index) != central_gens.end();
}

void Presentation::validate() const {
  for (const auto& r : relators)
    for (const auto& s : r.syllables())
      if (!declares(s.gen))
        throw AlphabetError("relator '" + to_string(r) + "' uses undeclared generator " +
                            generator_name(s.gen));
}

std::vector<Generator> Presentation::generators() const {
  std::vector<Generator> gens;
  for (int i = 1; i <= rank; ++i) gens.push_back(ordinary(i));
  for (int c : central_gens) gens.push_back(central(c));
  return gens;
}

std::string Presentation::meta(std::string_view key) const {
  for (const auto& [k, v] : metadata)
    if (k == key) return v;
  return {};
}

FgAbelianGroup AbelianPresentation::group() const {
  std::vector<std::vector<BigInt>> rows;
  rows.reserve(relators.size());
  for (const auto& r : relators) rows.push_back(exponent_vector(r));
  return FgAbelianGroup::from_relators(gens.size(), rows);
}

std::vector<BigInt> AbelianPresentation::exponent_vector(const Word& w) const {
  std::vector<BigInt> v(gens.size());
  for (const auto& s : w.syllables()) {
    auto it = s.gen.kind == GenKind::central ? std::find(gens.begin(), gens.end(), s.gen.index)
                                             : gens.end();
    if (it == gens.end())
      throw AlphabetError("word '" + to_string(w) + "' uses a generator outside D: " +
                          generator_name(s.gen));
    v[static_cast<std::size_t>(it - gens.begin())] += s.exp;
  }
  return v;
}

Word AbelianPresentation::word_for(const AbelianElement& x) const {
  const auto vec = group().to_presenting(x);
  std::vector<Syllable> raw;
  for (std::size_t i = 0; i < vec.size(); ++i) raw.push_back({central(gens[i]), vec[i]});
  return reduce(std::move(raw));
}

std::string AbelianPresentation::describe() const {
  std::string out = "<";
  for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? " " : "") + generator_name(central(gens[i]));
  out += " |";
  for (std::size_t i = 0; i < relators.size(); ++i) out += (i ? ", " : " ") + to_string(relators[i]);
  return out + ">";
}

AbelianPresentation abelian_presentation(std::string_view structure) {
  const auto f = parse_abelian_factors(structure);
  AbelianPresentation d;
  int next = 1;
  for (std::size_t i = 0; i < f.free_rank; ++i) d.gens.push_back(next++);
  for (const auto& t : f.cyclic) {
    d.gens.push_back(next);
    d.relators.push_back(Word::from_syllables({{central(next), t}}));
    ++next;
  }
  return d;
}

AbelianPresentation abelian_presentation(const FgAbelianGroup& g) {
  AbelianPresentation d;
  for (std::size_t i = 0; i < g.dimension(); ++i) {
    const int idx = static_cast<int>(i) + 1;
    d.gens.push_back(idx);
    if (sgn(g.modulus(i)) != 0) d.relators.push_back(Word::from_syllables({{central(idx), g.modulus(i)}}));
  }
  return d;
}

AbelianPresentation abelian_presentation(const Presentation& p) {
  if (p.rank != 0) throw PreconditionError("abelian presentation must not declare ordinary generators");
  p.validate();
  return {p.central_gens, p.relators};
}

AbelianPresentation q_presentation(int imax) {
  if (imax < 1) throw PreconditionError("q_presentation: imax must be at least 1");
  AbelianPresentation d;
  for (int i = 1; i <= imax; ++i) d.gens.push_back(i);
  for (int i = 2; i <= imax; ++i)
    d.relators.push_back(Word::from_syllables({{central(i), BigInt(-i)}, {central(i - 1), BigInt(1)}}));
  return d;
}

Assignment bijective_assignment(std::size_t periods) {
  Assignment a;
  for (std::size_t j = 1; j <= periods; ++j) a.images.push_back(Word::gen(central(static_cast<int>(j))));
  return a;
}

Assignment constant_assignment(std::size_t periods, const Word& w) {
  return Assignment{std::vector<Word>(periods, w)};
}

namespace {

void check_parameters(int m, int n, int max_length) {
  if (m < 1) throw PreconditionError("rank m must be at least 1");
  if (n < 2) throw PreconditionError("exponent n must be at least 2");
  if (max_length < 0) throw PreconditionError("period length bound L must be nonnegative");
}

Presentation base(const char* builder, int m, int n, int max_length) {
  Presentation p;
  p.rank = m;
  p.metadata = {{"builder", builder},
                {"m", std::to_string(m)},
                {"n", std::to_string(n)},
                {"L", std::to_string(max_length)}};
  return p;
}

// Pairs of central generators whose commutator is not a consequence of the
// other relators. A generator equal (through a relator) to an a-word is
// central in the whole group; generators linked by two-syllable relators
// d_k^{+-1} d_l^e lie in one cyclic subgroup.
std::vector<std::pair<int, int>> underivable_central_pairs(const AbelianPresentation& d,
                                                           const Assignment& sigma) {
  std::set<int> anchored;
  for (const auto& w : sigma.images)
    if (w.syllables().size() == 1 && abs(w.syllables()[0].exp) == 1)
      anchored.insert(w.syllables()[0].gen.index);
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& r : d.relators) {
      for (const auto& s : r.syllables()) {
        if (anchored.count(s.gen.index) || abs(s.exp) != 1) continue;
        const bool rest_anchored =
            std::all_of(r.syllables().begin(), r.syllables().end(), [&](const Syllable& o) {
              return o.gen == s.gen || anchored.count(o.gen.index) > 0;
            });
        if (rest_anchored && r.exponent_sum(s.gen) == s.exp) {
          anchored.insert(s.gen.index);
          grew = true;
        }
      }
    }
  }

  std::map<int, int> parent;
  for (int g : d.gens) parent[g] = g;
  for (const auto& r : d.relators) {
    if (r.syllables().size() != 2) continue;
    const auto& x = r.syllables()[0];
    const auto& y = r.syllables()[1];
    if (x.gen == y.gen) continue;
    if (abs(x.exp) == 1 && parent[x.gen.index] == x.gen.index) parent[x.gen.index] = y.gen.index;
    else if (abs(y.exp) == 1 && parent[y.gen.index] == y.gen.index) parent[y.gen.index] = x.gen.index;
  }
  auto root = [&](int g) {
    std::set<int> seen;
    while (parent[g] != g && seen.insert(g).second) g = parent[g];
    return g;
  };

  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < d.gens.size(); ++i)
    for (std::size_t j = i + 1; j < d.gens.size(); ++j) {
      int k = d.gens[i], l = d.gens[j];
      if (anchored.count(k) || anchored.count(l) || root(k) == root(l)) continue;
      out.emplace_back(k, l);
    }
  return out;
}

std::string describe_assignment(const Assignment& sigma) {
  std::string out;
  for (std::size_t j = 0; j < sigma.size(); ++j) out += (j ? ", " : "") + to_string(sigma.images[j]);
  return out.empty() ? "(empty)" : out;
}

Presentation central_extension(Presentation p, int n, int max_length, const AbelianPresentation& d,
                               const Assignment& sigma, std::size_t prefix = SIZE_MAX) {
  auto periods = enumerate_periods(p.rank, max_length);
  if (prefix < periods.size()) periods.resize(prefix);
  if (sigma.size() != periods.size())
    throw PreconditionError("assignment covers " + std::to_string(sigma.size()) + " periods but the schema has " +
                            std::to_string(periods.size()));
  for (const auto& w : sigma.images) d.exponent_vector(w);

  p.central_gens = d.gens;
  for (const auto& r : d.relators) p.add_relator(r);
  for (auto [k, l] : underivable_central_pairs(d, sigma))
    p.add_relator(commutator(Word::gen(central(k)), Word::gen(central(l))));
  for (int i = 1; i <= p.rank; ++i)
    for (int g : d.gens) p.add_relator(commutator(Word::gen(ordinary(i)), Word::gen(central(g))));
  for (std::size_t j = 0; j < periods.size(); ++j)
    p.add_relator(power(periods[j], n) * invert(sigma.images[j]));
  p.validate();
  return p;
}

}  // namespace

Presentation build_burnside(int m, int n, int max_length) {
  check_parameters(m, n, max_length);
  Presentation p = base("burnside", m, n, max_length);
  for (const auto& period : enumerate_periods(m, max_length)) p.add_relator(power(period, n));
  return p;
}

Presentation build_a_d(int m, int n, int max_length, const AbelianPresentation& d,
                       const Assignment& sigma) {
  check_parameters(m, n, max_length);
  Presentation p = base("a-d", m, n, max_length);
  p.metadata.emplace_back("D", d.describe());
  p.metadata.emplace_back("sigma", describe_assignment(sigma));
  return central_extension(std::move(p), n, max_length, d, sigma);
}

Presentation build_a_d(int m, int n, int max_length, const AbelianPresentation& d, const Assignment& sigma,
                       std::size_t period_prefix) {
  check_parameters(m, n, max_length);
  Presentation p = base("a-d", m, n, max_length);
  p.metadata.emplace_back("alpha", std::to_string(period_prefix));
  p.metadata.emplace_back("D", d.describe());
  p.metadata.emplace_back("sigma", describe_assignment(sigma));
  return central_extension(std::move(p), n, max_length, d, sigma, period_prefix);
}

Presentation build_a_q(int m, int n, int max_length, int imax) {
  check_parameters(m, n, max_length);
  const auto s = enumerate_periods(m, max_length).size();
  if (s > static_cast<std::size_t>(imax))
    throw PreconditionError("schema has " + std::to_string(s) + " periods but imax is " + std::to_string(imax));
  Presentation p = base("a-q", m, n, max_length);
  p.metadata.emplace_back("imax", std::to_string(imax));
  return central_extension(std::move(p), n, max_length, q_presentation(imax), bijective_assignment(s));
}

Presentation build_a_classic(int m, int n, int max_length) {
  check_parameters(m, n, max_length);
  const auto s = enumerate_periods(m, max_length).size();
  AbelianPresentation d{{1}, {}};
  return central_extension(base("a-classic", m, n, max_length), n, max_length, d,
                           constant_assignment(s, Word::gen(central(1))));
}

Presentation build_a_prime(int m, int n, int max_length) {
  Presentation p = build_a_classic(m, n, max_length);
  p.metadata[0].second = "a-prime";
  p.add_relator(Word::gen(central(1), n));
  return p;
}

Presentation build_a_c(int m, int n, int max_length) {
  check_parameters(m, n, max_length);
  const auto s = enumerate_periods(m, max_length).size();
  AbelianPresentation d;
  for (std::size_t j = 1; j <= s; ++j) d.gens.push_back(static_cast<int>(j));
  return central_extension(base("a-c", m, n, max_length), n, max_length, d, bijective_assignment(s));
}

namespace {

// Relator of the form P * d^-1 with P a nonempty ordinary-only word.
std::optional<Word> defining_word(const Word& r, int central_index) {
  const auto& syl = r.syllables();
  if (syl.size() < 2) return std::nullopt;
  const auto& last = syl.back();
  if (last.gen != central(central_index) || last.exp != -1) return std::nullopt;
  std::vector<Syllable> prefix(syl.begin(), syl.end() - 1);
  Word w = reduce(std::move(prefix));
  if (!w.uses_only(GenKind::ordinary)) return std::nullopt;
  return w;
}

// a_k when r = [a_k, d_c], nullopt otherwise.
std::optional<int> commutator_with(const Word& r, int central_index) {
  const auto& syl = r.syllables();
  if (syl.size() != 4) return std::nullopt;
  const Generator d = central(central_index);
  if (syl[0].gen.kind != GenKind::ordinary || syl[0].exp != -1) return std::nullopt;
  if (syl[1].gen != d || syl[1].exp != -1) return std::nullopt;
  if (syl[2].gen != syl[0].gen || syl[2].exp != 1) return std::nullopt;
  if (syl[3].gen != d || syl[3].exp != 1) return std::nullopt;
  return syl[0].gen.index;
}

}  // namespace

Presentation eliminate_central_generators(const Presentation& p) {
  if (p.central_gens.empty()) return p;

  struct Elimination {
    int index;
    std::vector<Word> definitions;
    std::size_t first_definition;
    std::vector<int> commuting_ordinary;
  };
  std::vector<Elimination> elims;
  std::vector<bool> consumed(p.relators.size(), false);

  for (int c : p.central_gens) {
    Elimination e{c, {}, 0, {}};
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      if (auto w = defining_word(p.relators[i], c)) {
        if (e.definitions.empty()) e.first_definition = i;
        e.definitions.push_back(*w);
      }
    }
    if (e.definitions.empty())
      throw PreconditionError("central generator " + generator_name(central(c)) + " has no defining relator");
    consumed[e.first_definition] = true;
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      if (auto k = commutator_with(p.relators[i], c)) {
        e.commuting_ordinary.push_back(*k);
        consumed[i] = true;
      }
    }
    elims.push_back(std::move(e));
  }

  std::map<int, Word> substitution;
  for (const auto& e : elims) substitution[e.index] = e.definitions.front();

  Presentation out;
  out.rank = p.rank;
  out.metadata = p.metadata;
  out.metadata.emplace_back("eliminated", "central");
  for (const auto& e : elims)
    for (const auto& def : e.definitions)
      for (int k : e.commuting_ordinary) out.add_relator(commutator(def, Word::gen(ordinary(k))));

  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (consumed[i]) continue;
    std::vector<Syllable> raw;
    for (const auto& s : p.relators[i].syllables()) {
      if (s.gen.kind == GenKind::ordinary) {
        raw.push_back(s);
        continue;
      }
      if (!s.exp.fits_slong_p()) throw PreconditionError("central exponent too large to substitute");
      Word image = power(substitution.at(s.gen.index), s.exp.get_si());
      raw.insert(raw.end(), image.syllables().begin(), image.syllables().end());
    }
    out.add_relator(reduce(std::move(raw)));
  }
  return out;
}

}  // namespace centext
