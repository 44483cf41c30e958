#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cgt/presentation.hpp"

namespace cgt {

using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Determinant by fraction-free elimination (Bareiss). Square matrices only.
BigInt determinant(const IntMatrix& m);

/// Rows are relators, columns generators; entry = exponent sum.
IntMatrix exponent_matrix(const Presentation& p);

struct SmithForm {
  /// One entry per column. d1 | d2 | ... with zeros last; entries past the
  /// last row are structurally zero.
  std::vector<BigInt> diagonal;
  IntMatrix left;   // rows x rows, unimodular
  IntMatrix right;  // cols x cols, unimodular; left * m * right is diagonal
  std::size_t rank() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

struct AbelianInvariants {
  std::vector<BigInt> torsion;  // each >= 2, d1 | d2 | ...
  std::size_t free_rank = 0;

  /// Order of the abelianization, or nullopt when it is infinite.
  std::optional<BigInt> order() const;
  bool trivial() const { return torsion.empty() && free_rank == 0; }
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

AbelianInvariants abelian_invariants(const Presentation& p);

/// Trivial abelianization.
bool is_perfect(const Presentation& p);

}  // namespace cgt
