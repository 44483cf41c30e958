#include "cgt/coset_enum.hpp"

#include <cassert>
#include <stdexcept>

#include "cgt/errors.hpp"

namespace cgt {

std::optional<std::size_t> CosetTable::image(std::size_t coset, Letter l) const {
  if (coset >= num_cosets_ || l.generator() >= alphabet_.size()) return std::nullopt;
  std::int32_t v = entries_[coset * 2 * alphabet_.size() + l.code()];
  if (v == kUndefined) return std::nullopt;
  return static_cast<std::size_t>(v);
}

std::optional<std::size_t> CosetTable::trace(std::size_t coset, const Word& w) const {
  std::optional<std::size_t> c = coset;
  for (Letter l : w) {
    c = image(*c, l);
    if (!c) return std::nullopt;
  }
  return c;
}

// Holt-style HLT enumeration. Cosets are rows of a flat table; a union-find
// forest (parent_) records coincidences, with the smaller index surviving.
class CosetEnumerator {
 public:
  CosetEnumerator(const Presentation& p, std::span<const Word> subgroup, std::size_t max_cosets)
      : relators_(p.relators()),
        subgroup_(subgroup.begin(), subgroup.end()),
        cols_(2 * p.num_generators()),
        limit_(max_cosets) {
    table_.alphabet_ = p.alphabet();
    table_.limit_ = max_cosets;
    for (const Word& w : subgroup_) {
      check_alphabet(w, p.num_generators(), "subgroup generator");
      if (!free_reduce(w).empty()) table_.trivial_subgroup_ = false;
    }
  }

  CosetTable run() {
    new_coset();
    bool subgroup_done = false;
    std::size_t alpha = 0;
    while (!subgroup_done || alpha < rows()) {
      try {
        if (!subgroup_done) {
          for (const Word& w : subgroup_) scan_and_fill(0, w);
          subgroup_done = true;
          continue;
        }
        if (live(alpha)) {
          for (const Word& r : relators_) {
            if (!live(alpha)) break;
            scan_and_fill(alpha, r);
          }
          for (std::size_t x = 0; x < cols_ && live(alpha); ++x)
            if (at(alpha, x) == CosetTable::kUndefined) define(alpha, x);
        }
        ++alpha;
      } catch (const TableFull&) {
        if (live_count_ == rows()) return finish(EnumerationStatus::Overflowed);
        alpha = compact(alpha);
      }
    }
    compact(0);
    return finish(EnumerationStatus::Complete);
  }

 private:
  struct TableFull {};

  using Coset = std::int32_t;

  std::size_t rows() const { return parent_.size(); }
  bool live(std::size_t c) const { return parent_[c] == static_cast<Coset>(c); }
  Coset& at(std::size_t c, std::size_t x) { return table_.entries_[c * cols_ + x]; }

  Coset new_coset() {
    if (rows() >= limit_) throw TableFull{};
    Coset c = static_cast<Coset>(rows());
    parent_.push_back(c);
    table_.entries_.resize(table_.entries_.size() + cols_, CosetTable::kUndefined);
    ++live_count_;
    ++table_.total_defined_;
    return c;
  }

  void define(std::size_t c, std::size_t x) {
    Coset d = new_coset();
    at(c, x) = d;
    at(static_cast<std::size_t>(d), x ^ 1u) = static_cast<Coset>(c);
  }

  Coset rep(Coset k) {
    Coset root = k;
    while (parent_[static_cast<std::size_t>(root)] != root) root = parent_[static_cast<std::size_t>(root)];
    while (parent_[static_cast<std::size_t>(k)] != root) {
      Coset next = parent_[static_cast<std::size_t>(k)];
      parent_[static_cast<std::size_t>(k)] = root;
      k = next;
    }
    return root;
  }

  void merge(Coset k, Coset l) {
    Coset a = rep(k);
    Coset b = rep(l);
    if (a == b) return;
    Coset keep = std::min(a, b);
    Coset drop = std::max(a, b);
    parent_[static_cast<std::size_t>(drop)] = keep;
    queue_.push_back(drop);
    --live_count_;
  }

  void coincidence(Coset a, Coset b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      const auto g = static_cast<std::size_t>(queue_[i]);
      for (std::size_t x = 0; x < cols_; ++x) {
        Coset d = at(g, x);
        if (d == CosetTable::kUndefined) continue;
        at(static_cast<std::size_t>(d), x ^ 1u) = CosetTable::kUndefined;
        Coset mu = rep(static_cast<Coset>(g));
        Coset nu = rep(d);
        const auto umu = static_cast<std::size_t>(mu);
        const auto unu = static_cast<std::size_t>(nu);
        if (at(umu, x) != CosetTable::kUndefined) {
          merge(nu, at(umu, x));
        } else if (at(unu, x ^ 1u) != CosetTable::kUndefined) {
          merge(mu, at(unu, x ^ 1u));
        } else {
          at(umu, x) = nu;
          at(unu, x ^ 1u) = mu;
        }
      }
    }
#ifndef NDEBUG
    assert(inverse_columns_consistent());
#endif
  }

  void scan_and_fill(std::size_t alpha, const Word& w) {
    if (w.empty()) return;
    Coset f = static_cast<Coset>(alpha);
    Coset b = f;
    std::ptrdiff_t i = 0;
    std::ptrdiff_t j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    for (;;) {
      while (i <= j) {
        Coset next = at(static_cast<std::size_t>(f), w[static_cast<std::size_t>(i)].code());
        if (next == CosetTable::kUndefined) break;
        f = next;
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i) {
        Coset prev = at(static_cast<std::size_t>(b), w[static_cast<std::size_t>(j)].inverse().code());
        if (prev == CosetTable::kUndefined) break;
        b = prev;
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        const Letter l = w[static_cast<std::size_t>(i)];
        at(static_cast<std::size_t>(f), l.code()) = b;
        at(static_cast<std::size_t>(b), l.inverse().code()) = f;
        return;
      }
      define(static_cast<std::size_t>(f), w[static_cast<std::size_t>(i)].code());
    }
  }

  bool inverse_columns_consistent() {
    for (std::size_t c = 0; c < rows(); ++c) {
      if (!live(c)) continue;
      for (std::size_t x = 0; x < cols_; ++x) {
        Coset d = at(c, x);
        if (d == CosetTable::kUndefined) continue;
        if (!live(static_cast<std::size_t>(d))) return false;
        if (at(static_cast<std::size_t>(d), x ^ 1u) != static_cast<Coset>(c)) return false;
      }
    }
    return true;
  }

  // Renumbers live cosets 0..n-1 in their current order and drops dead rows.
  // Returns the new index of the first live coset at or after `alpha`.
  std::size_t compact(std::size_t alpha) {
    std::vector<Coset> remap(rows(), CosetTable::kUndefined);
    std::size_t next = 0;
    std::size_t new_alpha = live_count_;
    for (std::size_t c = 0; c < rows(); ++c) {
      if (!live(c)) continue;
      if (c >= alpha && new_alpha == live_count_) new_alpha = next;
      remap[c] = static_cast<Coset>(next++);
    }
    std::vector<Coset> entries(next * cols_, CosetTable::kUndefined);
    for (std::size_t c = 0; c < rows(); ++c) {
      if (!live(c)) continue;
      const auto nc = static_cast<std::size_t>(remap[c]);
      for (std::size_t x = 0; x < cols_; ++x) {
        Coset d = at(c, x);
        if (d != CosetTable::kUndefined) {
          assert(live(static_cast<std::size_t>(d)));
          entries[nc * cols_ + x] = remap[static_cast<std::size_t>(d)];
        }
      }
    }
    table_.entries_ = std::move(entries);
    parent_.resize(next);
    for (std::size_t c = 0; c < next; ++c) parent_[c] = static_cast<Coset>(c);
    return new_alpha;
  }

  CosetTable finish(EnumerationStatus status) {
    table_.status_ = status;
    table_.num_cosets_ = status == EnumerationStatus::Complete ? rows() : live_count_;
    if (status == EnumerationStatus::Overflowed) compact(0);
    return std::move(table_);
  }

  const std::vector<Word>& relators_;
  std::vector<Word> subgroup_;
  std::size_t cols_;
  std::size_t limit_;
  CosetTable table_;
  std::vector<Coset> parent_;
  std::vector<Coset> queue_;
  std::size_t live_count_ = 0;
};

CosetTable enumerate_cosets(const Presentation& p, std::span<const Word> subgroup_generators,
                            std::size_t max_cosets) {
  if (max_cosets == 0) throw std::invalid_argument("enumerate_cosets: max_cosets must be at least 1");
  return CosetEnumerator(p, subgroup_generators, max_cosets).run();
}

std::optional<std::size_t> group_order(const CosetTable& t) {
  if (!t.complete() || !t.trivial_subgroup()) return std::nullopt;
  return t.num_cosets();
}

bool wp_finite(const Word& w, const CosetTable& t) {
  if (!t.complete()) throw DomainError("wp_finite: coset table is incomplete");
  if (!t.trivial_subgroup()) throw DomainError("wp_finite: table is not over the trivial subgroup");
  check_alphabet(w, t.num_generators(), "wp_finite");
  const bool closes = *t.trace(0, w) == 0;
#ifndef NDEBUG
  // The action is regular, so w fixes coset 0 iff it fixes every coset.
  for (std::size_t c = 1; c < t.num_cosets(); ++c) assert((*t.trace(c, w) == c) == closes);
#endif
  return closes;
}

std::vector<std::pair<std::string, Permutation>> to_permutation_rep(const CosetTable& t) {
  if (!t.complete()) throw DomainError("to_permutation_rep: coset table is incomplete");
  std::vector<std::pair<std::string, Permutation>> out;
  for (std::size_t g = 0; g < t.num_generators(); ++g) {
    Permutation perm(t.num_cosets());
    for (std::size_t c = 0; c < t.num_cosets(); ++c) perm[c] = static_cast<std::uint32_t>(*t.image(c, Letter(g, false)));
    out.emplace_back(t.alphabet().name(g), std::move(perm));
  }
  return out;
}

bool verify_table(const CosetTable& t, const Presentation& p, std::span<const Word> subgroup_generators) {
  for (std::size_t c = 0; c < t.num_cosets(); ++c)
    for (std::size_t g = 0; g < t.num_generators(); ++g)
      for (bool inv : {false, true}) {
        Letter l(g, inv);
        auto d = t.image(c, l);
        if (!d) {
          if (t.complete()) return false;
          continue;
        }
        if (t.image(*d, l.inverse()) != c) return false;
      }
  if (!t.complete()) return true;
  for (std::size_t c = 0; c < t.num_cosets(); ++c)
    for (const Word& r : p.relators())
      if (t.trace(c, r) != c) return false;
  for (const Word& w : subgroup_generators)
    if (t.trace(0, w) != std::size_t{0}) return false;
  return true;
}

}  // namespace cgt
