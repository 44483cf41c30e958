#pragma once

// Independent reference implementations used by the tests. Nothing here
// calls into the code under test except for the shared value types.

#include <cstddef>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "cgt/cayley.hpp"
#include "cgt/knots.hpp"
#include "cgt/presentation.hpp"

namespace cgt::testing {

std::string data_path(const std::string& name);
std::string read_text(const std::string& path);
KnotDiagram load_knot(const std::string& name);

/// Knot fixtures under tests/data.
const std::vector<std::string>& knot_fixtures();

/// Uniform freely reduced word of exactly `length` letters.
Word random_reduced_word(std::mt19937_64& rng, std::size_t generators, std::size_t length);
/// Uniform word (possibly unreduced) of exactly `length` letters.
Word random_word(std::mt19937_64& rng, std::size_t generators, std::size_t length);

/// Rotations of every relator and its inverse, computed naively.
std::vector<Word> naive_closure(const Presentation& p);

/// Product of `count` random conjugates u r^{+-1} u^-1 with |u| <= max_conjugator.
Word random_relator_product(std::mt19937_64& rng, const Presentation& p, std::size_t count,
                            std::size_t max_conjugator);

/// Number of homomorphisms from the presented group to the symmetric group
/// S_n, by backtracking over generator images.
std::size_t count_homomorphisms(const Presentation& p, int n);

/// Forward search from the empty word: one step inserts a word of R* anywhere
/// and freely reduces. Records the step count of every word reached without
/// exceeding `length_cap` letters.
struct TrivialBall {
  std::unordered_map<Word, std::size_t, WordHash> distance;
  std::size_t length_cap = 0;
  bool contains(const Word& w) const { return distance.count(free_reduce(w)) > 0; }
};
TrivialBall trivial_ball(const Presentation& p, std::size_t length_cap,
                         std::size_t max_steps = std::numeric_limits<std::size_t>::max());

/// Breadth-first search from `w` to the empty word using the same moves as
/// the ball, without leaving `length_cap` letters. Returns the step count, or
/// nullopt when the empty word is not reached within `max_steps`.
std::optional<std::size_t> bfs_area(const Presentation& p, const Word& w, std::size_t length_cap,
                                    std::size_t max_steps);

/// Area of a null-homotopic word over <a, b | a b a^-1 b^-1>: the sum over
/// unit squares of the absolute winding number of the lattice loop.
std::size_t z2_winding_area(const Word& w);

/// Faithful floating-point representation in PSL(2,R) of
/// <x, y | x^5, y^2, (y x)^4>: x a rotation by 2pi/5, y a half-turn.
WordOracle triangle_group_oracle();

/// Named presentations reused across test files.
namespace fixtures {
inline const char* kA5 = "<s1, s2 | s1^3, s2^5, (s1 s2)^2>";
inline const char* kTrivial = "<s, t | s^3 t, t^3, s^4>";
inline const char* kBinaryIcosahedral = "<a, d | a d a = d^2, d^3 = a^5>";
inline const char* kP54 = "<s2, s3 | s2^5, s3^2, (s3 s2)^4>";
inline const char* kP54Prime = "<s2, t3 | s2^5, t3^2, (t3 s2^-1 t3 s2)^2>";
inline const char* kGenus2 = "<a1, b1, a2, b2 | a1 b1 a1^-1 b1^-1 a2 b2 a2^-1 b2^-1>";
inline const char* kTrefoilP1 = "<a, b, c, d | a d^-1 b, b d^-1 c, c d^-1 a>";
inline const char* kTrefoilP2 = "<a, b, c | b a = c b = a c>";
inline const char* kTrefoilP2Prime = "<a, b, c | a b = b c = c a>";
inline const char* kTrefoilP3 = "<a, b | b a b = a b a>";
inline const char* kTrefoilP5 = "<a, d | a d a = d^2>";
inline const char* kZ2 = "<a, b | a b a^-1 b^-1>";
inline const char* kZ3 = "<a | a^3>";
inline const char* kZ3Alt = "<a, b | a^3, b>";
}  // namespace fixtures

}  // namespace cgt::testing
