#include "centext/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "centext/errors.hpp"

namespace centext {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

int parse_index(std::string_view digits, std::string_view token) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || value < 1)
    throw ParseError("bad generator index in token '" + std::string(token) + "'");
  return value;
}

// Letter codes for ordinary generators: 2*(i-1) for a_i, 2*(i-1)+1 for a_i^-1.
using Code = int;

Code inverse_code(Code c) { return c ^ 1; }

bool is_primitive(const std::vector<Code>& w) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) periodic = w[i] == w[i - p];
    if (periodic) return false;
  }
  return true;
}

// Lexicographically least rotation of w or of its inverse.
std::vector<Code> class_minimum(const std::vector<Code>& w) {
  const std::size_t n = w.size();
  std::vector<Code> inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[i] = inverse_code(w[n - 1 - i]);
  std::vector<Code> best = w;
  std::vector<Code> rot(n);
  for (int pass = 0; pass < 2; ++pass) {
    const auto* src = pass == 0 ? &w : &inv;
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t i = 0; i < n; ++i) rot[i] = (*src)[(s + i) % n];
      if (rot < best) best = rot;
    }
  }
  return best;
}

void extend_periods(int m, std::size_t target, std::vector<Code>& prefix,
                    std::vector<Word>& out) {
  if (prefix.size() == target) {
    if (inverse_code(prefix.front()) == prefix.back() && target > 1) return;
    if (!is_primitive(prefix)) return;
    if (class_minimum(prefix) != prefix) return;
    std::vector<Letter> letters;
    letters.reserve(prefix.size());
    for (Code c : prefix) letters.push_back({ordinary(c / 2 + 1), (c & 1) != 0});
    out.push_back(Word::from_letters(letters));
    return;
  }
  for (Code c = 0; c < 2 * m; ++c) {
    if (!prefix.empty() && inverse_code(prefix.back()) == c) continue;
    prefix.push_back(c);
    extend_periods(m, target, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::string generator_name(Generator g) {
  if (g.kind == GenKind::central) return "d" + std::to_string(g.index);
  if (g.index >= 1 && g.index <= 26) return std::string(1, static_cast<char>('a' + g.index - 1));
  return "g" + std::to_string(g.index);
}

Generator parse_generator(std::string_view token) {
  if (token.size() == 1 && token[0] >= 'a' && token[0] <= 'z') return ordinary(token[0] - 'a' + 1);
  if (token.size() > 1 && token[0] == 'd' && all_digits(token.substr(1)))
    return central(parse_index(token.substr(1), token));
  if (token.size() > 1 && token[0] == 'g' && all_digits(token.substr(1))) {
    int idx = parse_index(token.substr(1), token);
    if (idx <= 26) throw ParseError("generator '" + std::string(token) + "' must be written as a letter");
    return ordinary(idx);
  }
  throw ParseError("unknown generator token '" + std::string(token) + "'");
}

bool letter_less(const Letter& x, const Letter& y) {
  if (x.gen != y.gen) return x.gen < y.gen;
  return !x.inverse && y.inverse;
}

Word Word::from_syllables(std::vector<Syllable> raw) { return reduce(std::move(raw)); }

Word Word::from_letters(const std::vector<Letter>& letters) {
  std::vector<Syllable> raw;
  raw.reserve(letters.size());
  for (const auto& l : letters) raw.push_back({l.gen, BigInt(l.inverse ? -1 : 1)});
  return reduce(std::move(raw));
}

Word Word::gen(Generator g, long exp) { return reduce({{g, BigInt(exp)}}); }

BigInt Word::length() const {
  BigInt total = 0;
  for (const auto& s : syllables_) total += abs(s.exp);
  return total;
}

std::vector<Letter> Word::letters() const {
  std::vector<Letter> out;
  for (const auto& s : syllables_) {
    if (!s.exp.fits_slong_p()) throw PreconditionError("word too long to expand into letters");
    long e = s.exp.get_si();
    Letter l{s.gen, e < 0};
    for (long i = 0; i < (e < 0 ? -e : e); ++i) out.push_back(l);
  }
  return out;
}

bool Word::uses_only(GenKind kind) const {
  return std::all_of(syllables_.begin(), syllables_.end(),
                     [kind](const Syllable& s) { return s.gen.kind == kind; });
}

bool Word::uses(GenKind kind) const {
  return std::any_of(syllables_.begin(), syllables_.end(),
                     [kind](const Syllable& s) { return s.gen.kind == kind; });
}

int Word::max_index(GenKind kind) const {
  int best = 0;
  for (const auto& s : syllables_)
    if (s.gen.kind == kind) best = std::max(best, s.gen.index);
  return best;
}

BigInt Word::exponent_sum(Generator g) const {
  BigInt total = 0;
  for (const auto& s : syllables_)
    if (s.gen == g) total += s.exp;
  return total;
}

Word reduce(std::vector<Syllable> raw) {
  std::vector<Syllable> out;
  out.reserve(raw.size());
  for (auto& s : raw) {
    if (s.exp == 0) continue;
    if (!out.empty() && out.back().gen == s.gen) {
      out.back().exp += s.exp;
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back(std::move(s));
    }
  }
  return Word(std::move(out));
}

Word multiply(const Word& u, const Word& v) {
  std::vector<Syllable> raw;
  raw.reserve(u.syllables().size() + v.syllables().size());
  raw.insert(raw.end(), u.syllables().begin(), u.syllables().end());
  raw.insert(raw.end(), v.syllables().begin(), v.syllables().end());
  return reduce(std::move(raw));
}

Word invert(const Word& w) {
  std::vector<Syllable> raw(w.syllables().rbegin(), w.syllables().rend());
  for (auto& s : raw) s.exp = -s.exp;
  return reduce(std::move(raw));
}

Word power(const Word& w, long k) {
  if (k < 0) return power(invert(w), -k);
  Word result;
  Word base = w;
  while (k > 0) {
    if (k & 1) result = multiply(result, base);
    k >>= 1;
    if (k > 0) base = multiply(base, base);
  }
  return result;
}

Word commutator(const Word& u, const Word& v) {
  return multiply(multiply(invert(u), invert(v)), multiply(u, v));
}

CyclicReduction cyclic_reduce(const Word& w) {
  std::vector<Syllable> core = w.syllables();
  std::vector<Syllable> conj;
  std::size_t lo = 0;
  std::size_t hi = core.size();
  while (hi - lo >= 2 && core[lo].gen == core[hi - 1].gen) {
    BigInt& first = core[lo].exp;
    BigInt& last = core[hi - 1].exp;
    if (sgn(first) == sgn(last)) break;
    if (first + last == 0) {
      conj.push_back(core[lo]);
      ++lo;
      --hi;
    } else if (abs(first) > abs(last)) {
      // x^f ... x^l with |f| > |l|: peel x^-l off the front
      conj.push_back({core[lo].gen, -last});
      first += last;
      --hi;
    } else {
      conj.push_back({core[lo].gen, first});
      last += first;
      ++lo;
    }
  }
  CyclicReduction r;
  r.core = reduce(std::vector<Syllable>(core.begin() + static_cast<std::ptrdiff_t>(lo),
                                        core.begin() + static_cast<std::ptrdiff_t>(hi)));
  r.conjugator = reduce(std::move(conj));
  return r;
}

bool shortlex_less(const Word& u, const Word& v) {
  BigInt lu = u.length();
  BigInt lv = v.length();
  if (lu != lv) return lu < lv;
  auto a = u.letters();
  auto b = v.letters();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), letter_less);
}

std::vector<Word> enumerate_periods(int m, int max_length) {
  if (m < 1) throw PreconditionError("enumerate_periods: rank must be at least 1");
  if (max_length < 0) throw PreconditionError("enumerate_periods: negative length bound");
  std::vector<Word> out;
  std::vector<Code> prefix;
  for (int len = 1; len <= max_length; ++len)
    extend_periods(m, static_cast<std::size_t>(len), prefix, out);
  return out;
}

Word parse_word(std::string_view text) {
  std::vector<Syllable> raw;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token == "1") continue;
    auto caret = token.find('^');
    std::string_view name = std::string_view(token).substr(0, caret);
    BigInt exp = 1;
    if (caret != std::string::npos) {
      std::string digits = token.substr(caret + 1);
      std::string_view body = digits;
      if (!body.empty() && (body[0] == '-' || body[0] == '+')) body.remove_prefix(1);
      if (!all_digits(body)) throw ParseError("bad exponent in token '" + token + "'");
      if (digits[0] == '+') digits.erase(0, 1);
      exp.set_str(digits, 10);
      if (exp == 0) throw ParseError("zero exponent in token '" + token + "'");
    }
    raw.push_back({parse_generator(name), exp});
  }
  return reduce(std::move(raw));
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += generator_name(s.gen);
    if (s.exp != 1) out += "^" + s.exp.get_str();
  }
  return out;
}

}  // namespace centext
