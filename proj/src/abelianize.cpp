#include "cgt/abelianize.hpp"

#include <stdexcept>

namespace cgt {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
    for (long long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch in product");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  return out;
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix exponent_matrix(const Presentation& p) {
  IntMatrix m(p.relators().size(), p.num_generators());
  for (std::size_t r = 0; r < p.relators().size(); ++r)
    for (Letter l : p.relators()[r]) m(r, l.generator()) += l.exponent();
  return m;
}

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  for (const BigInt& d : diagonal)
    if (d != 0) ++r;
  return r;
}

namespace {

class SmithReducer {
 public:
  explicit SmithReducer(const IntMatrix& m)
      : a_(m), u_(IntMatrix::identity(m.rows())), v_(IntMatrix::identity(m.cols())) {}

  SmithForm run() {
    const std::size_t steps = std::min(a_.rows(), a_.cols());
    for (std::size_t t = 0; t < steps; ++t) {
      if (!reduce_at(t)) break;
    }
    SmithForm out;
    out.diagonal.assign(a_.cols(), BigInt(0));
    for (std::size_t t = 0; t < steps; ++t) {
      if (a_(t, t) < 0) negate_row(t);
      out.diagonal[t] = a_(t, t);
    }
    out.left = std::move(u_);
    out.right = std::move(v_);
    return out;
  }

 private:
  // Returns false when the remaining submatrix is zero.
  bool reduce_at(std::size_t t) {
    for (;;) {
      std::size_t pr = 0;
      std::size_t pc = 0;
      if (!smallest_entry(t, pr, pc)) return false;
      swap_rows(t, pr);
      swap_cols(t, pc);
      const BigInt pivot = a_(t, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < a_.rows(); ++i) {
        if (a_(i, t) == 0) continue;
        add_row_multiple(i, t, -(a_(i, t) / pivot));
        if (a_(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a_.cols(); ++j) {
        if (a_(t, j) == 0) continue;
        add_col_multiple(j, t, -(a_(t, j) / pivot));
        if (a_(t, j) != 0) clean = false;
      }
      if (!clean) continue;  // a smaller remainder is now available as pivot
      std::size_t bad = a_.rows();
      for (std::size_t i = t + 1; i < a_.rows() && bad == a_.rows(); ++i)
        for (std::size_t j = t + 1; j < a_.cols(); ++j)
          if (a_(i, j) % pivot != 0) {
            bad = i;
            break;
          }
      if (bad == a_.rows()) return true;
      add_row_multiple(t, bad, BigInt(1));
    }
  }

  bool smallest_entry(std::size_t t, std::size_t& pr, std::size_t& pc) const {
    bool found = false;
    BigInt best;
    for (std::size_t i = t; i < a_.rows(); ++i)
      for (std::size_t j = t; j < a_.cols(); ++j) {
        const BigInt& x = a_(i, j);
        if (x == 0) continue;
        BigInt ax = abs(x);
        if (!found || ax < best) {
          found = true;
          best = ax;
          pr = i;
          pc = j;
        }
      }
    return found;
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a_.cols(); ++c) std::swap(a_(i, c), a_(j, c));
    for (std::size_t c = 0; c < u_.cols(); ++c) std::swap(u_(i, c), u_(j, c));
  }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a_.rows(); ++r) std::swap(a_(r, i), a_(r, j));
    for (std::size_t r = 0; r < v_.rows(); ++r) std::swap(v_(r, i), v_(r, j));
  }

  // row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
    for (std::size_t c = 0; c < a_.cols(); ++c) a_(dst, c) += k * a_(src, c);
    for (std::size_t c = 0; c < u_.cols(); ++c) u_(dst, c) += k * u_(src, c);
  }

  // col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
    for (std::size_t r = 0; r < a_.rows(); ++r) a_(r, dst) += k * a_(r, src);
    for (std::size_t r = 0; r < v_.rows(); ++r) v_(r, dst) += k * v_(r, src);
  }

  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a_.cols(); ++c) a_(i, c) = -a_(i, c);
    for (std::size_t c = 0; c < u_.cols(); ++c) u_(i, c) = -u_(i, c);
  }

  IntMatrix a_;
  IntMatrix u_;
  IntMatrix v_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) { return SmithReducer(m).run(); }

std::optional<BigInt> AbelianInvariants::order() const {
  if (free_rank != 0) return std::nullopt;
  BigInt n = 1;
  for (const BigInt& d : torsion) n *= d;
  return n;
}

AbelianInvariants abelian_invariants(const Presentation& p) {
  SmithForm snf = smith_normal_form(exponent_matrix(p));
  AbelianInvariants inv;
  for (const BigInt& d : snf.diagonal)
    if (d > 1) inv.torsion.push_back(d);
  inv.free_rank = p.num_generators() - snf.rank();
  return inv;
}

bool is_perfect(const Presentation& p) { return abelian_invariants(p).trivial(); }

}  // namespace cgt
