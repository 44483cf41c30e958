#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cgt/presentation.hpp"

namespace cgt {

/// X[i,j,k,l] with sign s: edge labels counterclockwise around the crossing,
/// starting at the incoming understrand i (so k is the outgoing
/// understrand). For sign +1 the overstrand runs l -> j, for -1 it runs j -> l.
struct PDCrossing {
  std::array<long long, 4> slots;
  int sign;
  friend bool operator==(const PDCrossing&, const PDCrossing&) = default;
};

/// The corner of a crossing between slots q and q+1 (mod 4).
struct Corner {
  std::size_t crossing;
  int quadrant;
  friend bool operator==(const Corner&, const Corner&) = default;
};

struct KnotDiagram {
  std::vector<PDCrossing> crossings;
  std::vector<long long> traversal;              // edge labels in orientation order, smallest first
  std::map<long long, std::size_t> arc_of_edge;  // arc 0 contains the smallest edge label
  std::vector<std::size_t> under_sequence;       // crossing ending arc j, for j = 0..n-1
  std::vector<std::vector<Corner>> faces;        // complementary regions of the projection
  std::size_t unbounded_face = 0;

  std::size_t num_crossings() const { return crossings.size(); }
  std::size_t num_arcs() const { return crossings.empty() ? 1 : crossings.size(); }
  std::size_t num_bounded_faces() const { return crossings.empty() ? 1 : faces.size() - 1; }
  std::size_t over_arc(std::size_t crossing) const;
};

/// Validates the crossings and derives traversal, arcs and faces. Throws
/// DomainError when a label does not occur exactly twice, the orientations
/// at the two ends of an edge disagree, the edges do not close into one
/// curve, or the rotation system is not planar.
KnotDiagram make_diagram(std::vector<PDCrossing> crossings);

/// `PD[X[a,b,c,d]s+, ...]`; `PD[]` is the crossingless unknot. Throws
/// ParseError on malformed text and DomainError on invalid diagrams.
KnotDiagram parse_pd(std::string_view text);
std::string format_pd(const KnotDiagram& d);

/// Overrides the default choice (the face with most corners, first on ties).
void set_unbounded_face(KnotDiagram& d, std::size_t face);

/// LeftRight reads an overstrand passing left to right (seen by the
/// traveller on the understrand) as +1, which coincides with the crossing
/// sign. RightLeft negates every sign.
enum class SignConvention { LeftRight, RightLeft };

struct WirtingerPresentation {
  Presentation presentation;
  Word meridian;
};

/// Generators a, b, c, ... (s1, s2, ... past 26 arcs), one per arc in
/// traversal order. Relation j, at the crossing ending arc j with overstrand
/// o and sign e: s_o^e s_{j+1} s_o^-e s_j^-1.
WirtingerPresentation wirtinger(const KnotDiagram& d, SignConvention convention = SignConvention::LeftRight,
                                bool drop_redundant = false);

/// One generator f1, f2, ... per bounded face, one relation per crossing:
/// x_NW x_SW^-1 x_SE x_NE^-1 with the unbounded face set to 1.
Presentation dehn_presentation(const KnotDiagram& d);

struct PeripheralSystem {
  Word meridian;
  Word parallel;
};

/// Overstrand generators met at the undercrossings from arc 0 onwards, each
/// to the power of its sign, followed by s_1^k with k cancelling the
/// exponent sum. Words are over the wirtinger() alphabet.
PeripheralSystem peripheral(const KnotDiagram& d, SignConvention convention = SignConvention::LeftRight);

/// Wirtinger presentation plus m p^-k.
Presentation surgery_presentation(const KnotDiagram& d, long long k,
                                  SignConvention convention = SignConvention::LeftRight);

}  // namespace cgt
