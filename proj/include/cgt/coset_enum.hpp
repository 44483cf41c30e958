#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cgt/presentation.hpp"

namespace cgt {

inline constexpr std::size_t kDefaultMaxCosets = 1'000'000;

enum class EnumerationStatus { Complete, Overflowed };

/// Action of the generators on the cosets of a subgroup. Coset 0 is the
/// subgroup itself. Columns are indexed by Letter::code(), so the column for
/// s^-1 sits next to the column for s.
class CosetTable {
 public:
  static constexpr std::int32_t kUndefined = -1;

  EnumerationStatus status() const { return status_; }
  bool complete() const { return status_ == EnumerationStatus::Complete; }
  /// The max_cosets value the enumeration ran with.
  std::size_t limit() const { return limit_; }
  std::size_t num_cosets() const { return num_cosets_; }
  std::size_t num_generators() const { return alphabet_.size(); }
  const Alphabet& alphabet() const { return alphabet_; }
  bool trivial_subgroup() const { return trivial_subgroup_; }
  /// Cosets defined during the run, dead ones included.
  std::size_t total_defined() const { return total_defined_; }

  std::optional<std::size_t> image(std::size_t coset, Letter l) const;
  /// Follows w from `coset`; nullopt if an entry on the way is undefined.
  std::optional<std::size_t> trace(std::size_t coset, const Word& w) const;

 private:
  friend class CosetEnumerator;

  Alphabet alphabet_;
  std::vector<std::int32_t> entries_;  // num_cosets_ x 2*num_generators
  std::size_t num_cosets_ = 0;
  std::size_t limit_ = 0;
  std::size_t total_defined_ = 0;
  bool trivial_subgroup_ = true;
  EnumerationStatus status_ = EnumerationStatus::Overflowed;
};

/// Todd-Coxeter enumeration, HLT strategy: every relator is traced from every
/// live coset in order, defining new cosets to complete the trace. Overflow
/// is reported in the table status once more than max_cosets cosets would be
/// live at once. Throws DomainError for subgroup words over another alphabet
/// and std::invalid_argument when max_cosets == 0.
CosetTable enumerate_cosets(const Presentation& p, std::span<const Word> subgroup_generators,
                            std::size_t max_cosets = kDefaultMaxCosets);

/// Number of cosets of a complete table over the trivial subgroup.
std::optional<std::size_t> group_order(const CosetTable& t);

/// Word problem through the regular representation. Requires a complete
/// table over the trivial subgroup (DomainError otherwise).
bool wp_finite(const Word& w, const CosetTable& t);

using Permutation = std::vector<std::uint32_t>;

/// One permutation of the cosets per generator, in alphabet order.
/// Requires a complete table.
std::vector<std::pair<std::string, Permutation>> to_permutation_rep(const CosetTable& t);

/// Checks the coset-table invariants: inverse columns agree, and for complete
/// tables every relator closes at every coset and every subgroup generator
/// closes at coset 0. Used by tests and debug builds.
bool verify_table(const CosetTable& t, const Presentation& p, std::span<const Word> subgroup_generators);

}  // namespace cgt
