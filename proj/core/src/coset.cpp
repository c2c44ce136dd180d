#include "centext/coset.hpp"

#include <algorithm>
#include <deque>

namespace centext {

CosetTable::CosetTable(std::vector<Generator> gens, std::vector<std::uint32_t> rows,
                       std::vector<Word> subgroup)
    : gens_(std::move(gens)), rows_(std::move(rows)), subgroup_(std::move(subgroup)) {
  const std::size_t cols = columns();
  size_ = cols == 0 ? 1 : rows_.size() / cols;
  parent_.assign(size_, undefined);
  parent_col_.assign(size_, 0);
  reps_.assign(size_, Word());
  std::vector<bool> seen(size_, false);
  std::deque<std::uint32_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    auto c = queue.front();
    queue.pop_front();
    for (std::size_t x = 0; x < cols; ++x) {
      auto d = act(c, x);
      if (d == undefined) throw ConsistencyError("coset table is not closed");
      if (seen[d]) continue;
      seen[d] = true;
      parent_[d] = c;
      parent_col_[d] = x;
      reps_[d] = reps_[c] * Word::gen(gens_[x / 2], (x & 1) ? -1 : 1);
      queue.push_back(d);
    }
  }
}

std::size_t CosetTable::column(Generator g, bool inverse) const {
  auto it = std::find(gens_.begin(), gens_.end(), g);
  if (it == gens_.end()) throw AlphabetError("generator " + generator_name(g) + " is not in the coset table");
  return 2 * static_cast<std::size_t>(it - gens_.begin()) + (inverse ? 1 : 0);
}

std::uint32_t CosetTable::trace(std::uint32_t coset, const Word& w) const {
  for (const auto& l : w.letters()) coset = act(coset, column(l));
  return coset;
}

namespace {

struct TableFull {};

class Enumerator {
 public:
  Enumerator(std::size_t cols, std::size_t max_cosets) : cols_(cols), max_(max_cosets) {
    new_coset();
  }

  // HLT main loop.
  void run(const std::vector<std::vector<std::uint32_t>>& relators,
           const std::vector<std::vector<std::uint32_t>>& subgroup) {
    alpha_ = 0;
    retrying([&] {
      for (const auto& w : subgroup) scan_and_fill(0, w);
    });
    for (alpha_ = 0; alpha_ < next_; ++alpha_) {
      if (!is_live(alpha_)) continue;
      retrying([&] {
        for (const auto& w : relators) {
          scan_and_fill(alpha_, w);
          if (!is_live(alpha_)) return;
        }
        for (std::size_t x = 0; x < cols_ && is_live(alpha_); ++x)
          if (T(alpha_, x) == CosetTable::undefined) define(alpha_, x);
      });
    }
  }

  // Live cosets renumbered breadth-first from coset 0.
  std::vector<std::uint32_t> standardized() {
    std::vector<std::uint32_t> order{0};
    std::vector<std::uint32_t> renumber(next_, CosetTable::undefined);
    renumber[0] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t x = 0; x < cols_; ++x) {
        auto d = T(order[i], x);
        if (renumber[d] == CosetTable::undefined) {
          renumber[d] = static_cast<std::uint32_t>(order.size());
          order.push_back(d);
        }
      }
    }
    std::vector<std::uint32_t> rows(order.size() * cols_);
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t x = 0; x < cols_; ++x) rows[i * cols_ + x] = renumber[T(order[i], x)];
    return rows;
  }

 private:
  std::uint32_t& T(std::uint32_t c, std::size_t x) { return table_[c * cols_ + x]; }
  static std::size_t inv(std::size_t x) { return x ^ 1; }
  bool is_live(std::uint32_t c) const { return parent_[c] == c; }

  std::uint32_t new_coset() {
    if (next_ == max_) throw TableFull{};
    table_.resize((static_cast<std::size_t>(next_) + 1) * cols_, CosetTable::undefined);
    parent_.push_back(next_);
    ++live_;
    return next_++;
  }

  void define(std::uint32_t c, std::size_t x) {
    auto d = new_coset();
    T(c, x) = d;
    T(d, inv(x)) = c;
  }

  // Runs body, compacting away dead cosets and retrying when the table is
  // full. Scans are idempotent, so repeating a partially finished body is safe.
  template <typename F>
  void retrying(F&& body) {
    while (true) {
      try {
        body();
        return;
      } catch (const TableFull&) {
        if (live_ == next_) throw CosetOverflow(max_);
        compact();
      }
    }
  }

  // Drops dead cosets, preserving the relative order of live ones.
  void compact() {
    std::vector<std::uint32_t> renumber(next_, CosetTable::undefined);
    std::uint32_t n = 0;
    for (std::uint32_t c = 0; c < next_; ++c)
      if (is_live(c)) renumber[c] = n++;
    std::vector<std::uint32_t> table(static_cast<std::size_t>(n) * cols_, CosetTable::undefined);
    for (std::uint32_t c = 0; c < next_; ++c) {
      if (!is_live(c)) continue;
      for (std::size_t x = 0; x < cols_; ++x) {
        auto d = T(c, x);
        if (d != CosetTable::undefined) table[renumber[c] * cols_ + x] = renumber[d];
      }
    }
    table_ = std::move(table);
    parent_.resize(n);
    for (std::uint32_t c = 0; c < n; ++c) parent_[c] = c;
    alpha_ = renumber[alpha_];
    next_ = n;
    live_ = n;
  }

  std::uint32_t rep(std::uint32_t c) {
    std::uint32_t r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      auto up = parent_[c];
      parent_[c] = r;
      c = up;
    }
    return r;
  }

  void merge(std::uint32_t k, std::uint32_t l) {
    auto a = rep(k), b = rep(l);
    if (a == b) return;
    auto lo = std::min(a, b), hi = std::max(a, b);
    parent_[hi] = lo;
    --live_;
    queue_.push_back(hi);
  }

  void coincidence(std::uint32_t a, std::uint32_t b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      auto g = queue_[i];
      for (std::size_t x = 0; x < cols_; ++x) {
        auto d = T(g, x);
        if (d == CosetTable::undefined) continue;
        T(d, inv(x)) = CosetTable::undefined;
        auto mu = rep(g), nu = rep(d);
        if (T(mu, x) != CosetTable::undefined) {
          merge(nu, T(mu, x));
        } else if (T(nu, inv(x)) != CosetTable::undefined) {
          merge(mu, T(nu, inv(x)));
        } else {
          T(mu, x) = nu;
          T(nu, inv(x)) = mu;
        }
      }
    }
  }

  void scan_and_fill(std::uint32_t alpha, const std::vector<std::uint32_t>& w) {
    if (w.empty()) return;
    std::uint32_t f = alpha, b = alpha;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    while (true) {
      while (i <= j && T(f, w[i]) != CosetTable::undefined) f = T(f, w[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && T(b, inv(w[j])) != CosetTable::undefined) b = T(b, inv(w[j--]));
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        T(f, w[i]) = b;
        T(b, inv(w[i])) = f;
        return;
      }
      define(f, w[i]);
    }
  }

  std::size_t cols_;
  std::size_t max_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> queue_;
  std::uint32_t next_ = 0;
  std::uint32_t alpha_ = 0;
  std::size_t live_ = 0;
};

std::vector<std::uint32_t> to_columns(const Word& w, const std::vector<Generator>& gens) {
  std::vector<std::uint32_t> out;
  for (const auto& l : w.letters()) {
    auto it = std::find(gens.begin(), gens.end(), l.gen);
    if (it == gens.end()) throw AlphabetError("word uses generator " + generator_name(l.gen) + " outside the presentation");
    out.push_back(static_cast<std::uint32_t>(2 * (it - gens.begin()) + (l.inverse ? 1 : 0)));
  }
  return out;
}

}  // namespace

CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_gens,
                        std::size_t max_cosets) {
  if (max_cosets < 1) throw PreconditionError("max_cosets must be at least 1");
  p.validate();
  const auto gens = p.generators();

  std::vector<Word> relators = p.relators;
  std::stable_sort(relators.begin(), relators.end(), shortlex_less);
  std::vector<std::vector<std::uint32_t>> rels, subs;
  for (const auto& r : relators) rels.push_back(to_columns(r, gens));
  for (const auto& w : subgroup_gens) subs.push_back(to_columns(w, gens));

  if (gens.empty()) return CosetTable({}, {}, subgroup_gens);
  Enumerator e(2 * gens.size(), max_cosets);
  e.run(rels, subs);
  return CosetTable(gens, e.standardized(), subgroup_gens);
}

bool relators_close(const CosetTable& table, const Presentation& p) {
  std::vector<std::vector<std::size_t>> cols;
  for (const auto& r : p.relators) {
    std::vector<std::size_t> c;
    for (const auto& l : r.letters()) c.push_back(table.column(l));
    cols.push_back(std::move(c));
  }
  for (std::uint32_t c = 0; c < table.size(); ++c)
    for (const auto& r : cols) {
      std::uint32_t d = c;
      for (auto x : r) d = table.act(d, x);
      if (d != c) return false;
    }
  return true;
}

StabilizedOrder stabilized_order(const PresentationBuilder& builder, int max_length,
                                 std::size_t max_cosets, int min_length) {
  StabilizedOrder result;
  result.min_length = min_length;
  bool last_overflowed = false;
  for (int L = min_length; L <= max_length; ++L) {
    std::optional<std::uint64_t> order;
    try {
      order = todd_coxeter(builder(L), {}, max_cosets).size();
      last_overflowed = false;
    } catch (const CosetOverflow&) {
      last_overflowed = true;
    }
    result.history.push_back(order);
    const auto n = result.history.size();
    if (order && n >= 2 && result.history[n - 2] == order) {
      result.order = *order;
      result.stable_length = L - 1;
      return result;
    }
  }
  if (last_overflowed) throw CosetOverflow(max_cosets);
  throw UnstableOrder("order did not stabilize by L = " + std::to_string(max_length));
}

}  // namespace centext
