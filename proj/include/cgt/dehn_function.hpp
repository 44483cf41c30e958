#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cgt/cayley.hpp"
#include "cgt/presentation.hpp"

namespace cgt {

enum class AreaKind { Exact, UpperBound, Unknown };

/// Insert `relator` (an element of R*) before letter `position`, then freely
/// reduce.
struct AreaMove {
  std::size_t position;
  Word relator;
  friend bool operator==(const AreaMove&, const AreaMove&) = default;
};

struct AreaOptions {
  std::optional<std::size_t> length_cap;  // default |w| + 2 * longest relator
  std::size_t node_cap = 100'000;         // expanded words per search
};

struct AreaResult {
  AreaKind kind = AreaKind::Unknown;
  std::size_t value = 0;          // meaningful unless kind == Unknown
  std::vector<AreaMove> witness;  // value moves taking w to the empty word
  std::size_t nodes_expanded = 0;
  std::size_t length_cap = 0;
  bool node_cap_hit = false;
};

/// Least number of relator insertions reducing w to 1, by best-first search
/// over freely reduced words no longer than the length cap. The search is
/// repeated with the cap raised by 2; Exact is reported only if both runs
/// finish within the node cap and agree. If `oracle` is given and says w is
/// nontrivial, the result is Unknown without searching.
AreaResult area(const Word& w, const Presentation& p, const AreaOptions& options = {},
                const WordOracle& oracle = nullptr);

/// Applies the moves in order and returns the final freely reduced word.
Word replay_area_witness(const Word& w, std::span<const AreaMove> moves);

enum class DeltaExactness { Exact, UpperBound, Partial };

struct DeltaRow {
  std::size_t n;
  std::size_t delta;
  DeltaExactness exactness;
  std::size_t trivial_words;  // trivial reduced words of length <= n
};

struct DehnFunctionOptions {
  AreaOptions area;
  std::size_t max_words = 5'000'000;  // reduced words enumerated in total
};

struct DehnFunctionTable {
  std::vector<DeltaRow> rows;  // n = 0, 1, ...; shorter than requested when truncated
  bool truncated = false;
};

/// delta(n) = max area over trivial freely reduced words of length <= n.
/// Triviality is decided by `oracle`. A row is Exact when every area in it
/// is Exact, UpperBound when some are only bounded, Partial when some area
/// is Unknown (delta is then the largest value found).
DehnFunctionTable dehn_function_estimate(const Presentation& p, std::size_t n_max, const WordOracle& oracle,
                                         const DehnFunctionOptions& options = {});

std::string to_string(AreaKind kind);
std::string to_string(DeltaExactness e);

/// `n<TAB>delta<TAB>exactness` per row.
std::string format_tsv(const DehnFunctionTable& table);

}  // namespace cgt
