#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cgt/errors.hpp"
#include "cgt/presentation.hpp"

namespace cgt {

/// Decides w =_G 1. u =_G v is asked as u v^-1 =_G 1.
using WordOracle = std::function<bool(const Word&)>;

/// Raised when the oracle throws or contradicts itself during ball
/// construction; the message names the offending pair of words.
class OracleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An s-labelled edge from g to g*s.
struct CayleyEdge {
  std::size_t from;
  std::size_t to;
  std::size_t generator;
  friend bool operator==(const CayleyEdge&, const CayleyEdge&) = default;
};

struct CayleyDiagram {
  Alphabet generators;
  std::vector<Word> vertices;      // shortlex-least representative of each element
  std::vector<std::size_t> depth;  // word-length distance from the base vertex
  std::vector<CayleyEdge> edges;   // ordered by (from, generator)
  std::size_t base = 0;
  std::optional<std::size_t> radius;
  bool complete = false;  // no generator move leaves the vertex set

  std::vector<std::size_t> layer_sizes() const;
  friend bool operator==(const CayleyDiagram&, const CayleyDiagram&) = default;
};

/// BFS ball of the given radius around the identity. Vertex identity is
/// decided by `oracle` alone; within a layer candidates are visited in
/// shortlex order, so the representative of each vertex is the shortlex-least
/// word reaching it.
CayleyDiagram build_ball(const Presentation& p, const WordOracle& oracle, std::size_t radius);

/// A finite directed graph with labelled edges, possibly with loops and
/// parallel edges. An involutive label carries undirected edges: one edge per
/// unordered pair {x, s(x)}, a loop when s fixes x.
struct LabeledDigraph {
  struct Edge {
    std::size_t from;
    std::size_t to;
    std::size_t label;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  std::size_t num_vertices = 0;
  std::vector<std::string> labels;
  std::vector<bool> involutive;  // parallel to labels
  std::vector<Edge> edges;
  std::size_t base = 0;
  std::vector<std::string> vertex_names;  // optional; empty means v0, v1, ...

  friend bool operator==(const LabeledDigraph&, const LabeledDigraph&) = default;
};

/// Converts a Cayley diagram; generators flagged in `involutive` have each
/// pair {g -> gs, gs -> g} collapsed into a single undirected edge.
LabeledDigraph to_digraph(const CayleyDiagram& d, const std::vector<bool>& involutive = {});

/// Every vertex has one outgoing and one incoming edge per directed label,
/// and exactly one incident edge per involutive label.
bool check_regular(const LabeledDigraph& d);

/// For a regular connected diagram: the label-preserving automorphism sending
/// the base vertex to `target`, or nullopt if the partial map base -> target
/// does not extend to one. Throws DomainError on non-regular input.
std::optional<std::vector<std::size_t>> extend_translation(const LabeledDigraph& d, std::size_t target);

/// A regular connected diagram is homogeneous when every base -> y extends to
/// an automorphism. Throws DomainError on non-regular or disconnected input.
bool check_homogeneous(const LabeledDigraph& d);

/// (alpha-2)/alpha + (2 beta - 2)/beta >= 2, in exact rationals.
/// Throws std::invalid_argument if alpha or beta is not positive.
bool family_infinite(long long alpha, long long beta);

struct DotOptions {
  std::vector<bool> involutive;  // per generator; drawn undirected
  bool word_labels = true;       // label nodes with their representative words
};

std::string export_dot(const CayleyDiagram& d, const DotOptions& options = {});
std::string export_dot(const LabeledDigraph& d);

/// {vertices:[{id,word}], edges:[{from,to,label,sign}], radius, complete}
nlohmann::json to_json(const CayleyDiagram& d);
/// Reads the same schema back; `word` strings are parsed over `generators`.
CayleyDiagram cayley_from_json(const nlohmann::json& j, const Alphabet& generators);

/// Same schema for arbitrary diagrams. Accepts optional "labels" or
/// "generators" (declaring label order), "involutive" (list of label names)
/// and "base". An edge with sign -1 from x to y is read as the edge y -> x.
nlohmann::json to_json(const LabeledDigraph& d);
LabeledDigraph digraph_from_json(const nlohmann::json& j);

}  // namespace cgt
