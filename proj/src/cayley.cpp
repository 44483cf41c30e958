#include "cgt/cayley.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include <boost/rational.hpp>

#include "cgt/errors.hpp"

namespace cgt {

std::vector<std::size_t> CayleyDiagram::layer_sizes() const {
  std::vector<std::size_t> sizes;
  for (std::size_t d : depth) {
    if (d >= sizes.size()) sizes.resize(d + 1, 0);
    ++sizes[d];
  }
  return sizes;
}

namespace {

class BallBuilder {
 public:
  BallBuilder(const Presentation& p, const WordOracle& oracle) : p_(p), oracle_(oracle) {}

  std::optional<std::size_t> find(const Word& w) {
    std::optional<std::size_t> hit;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (!equal(w, vertices_[i])) continue;
      if (hit)
        throw OracleError("oracle is inconsistent: '" + show(w) + "' equals both '" + show(vertices_[*hit]) +
                          "' and '" + show(vertices_[i]) + "'");
      hit = i;
    }
    return hit;
  }

  std::vector<Word> vertices_;

 private:
  bool equal(const Word& u, const Word& v) {
    Word probe = free_reduce(u + invert(v));
    try {
      return oracle_(probe);
    } catch (const std::exception& e) {
      throw OracleError("oracle failed comparing '" + show(u) + "' with '" + show(v) + "': " + e.what());
    }
  }

  std::string show(const Word& w) const {
    return w.empty() ? std::string("1") : format_word(w, p_.alphabet());
  }

  const Presentation& p_;
  const WordOracle& oracle_;
};

}  // namespace

CayleyDiagram build_ball(const Presentation& p, const WordOracle& oracle, std::size_t radius) {
  CayleyDiagram d;
  d.generators = p.alphabet();
  d.radius = radius;
  const std::size_t n = p.num_generators();

  BallBuilder ball(p, oracle);
  ball.vertices_.push_back(Word{});
  d.depth.push_back(0);
  // Positive-letter moves found during the BFS, reused for the edge pass.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> moves;

  for (std::size_t i = 0; i < ball.vertices_.size(); ++i) {
    if (d.depth[i] >= radius) continue;
    for (std::uint32_t code = 0; code < 2 * n; ++code) {
      const Letter l = Letter::from_code(code);
      Word cand = ball.vertices_[i];
      cand.push_back(l);
      auto hit = ball.find(cand);
      std::size_t target;
      if (hit) {
        target = *hit;
      } else {
        target = ball.vertices_.size();
        ball.vertices_.push_back(std::move(cand));
        d.depth.push_back(d.depth[i] + 1);
      }
      if (!l.is_inverse()) moves.emplace(std::make_pair(i, l.generator()), target);
    }
  }

  d.complete = true;
  for (std::size_t i = 0; i < ball.vertices_.size(); ++i) {
    for (std::size_t g = 0; g < n; ++g) {
      auto it = moves.find({i, g});
      std::optional<std::size_t> target;
      if (it != moves.end()) {
        target = it->second;
      } else {
        Word cand = ball.vertices_[i];
        cand.push_back(Letter(g, false));
        target = ball.find(cand);
      }
      if (target)
        d.edges.push_back({i, *target, g});
      else
        d.complete = false;
    }
  }
  d.vertices = std::move(ball.vertices_);
  return d;
}

// ---------------------------------------------------------------------------

LabeledDigraph to_digraph(const CayleyDiagram& d, const std::vector<bool>& involutive) {
  LabeledDigraph g;
  g.num_vertices = d.vertices.size();
  g.labels = d.generators.names();
  g.involutive.assign(g.labels.size(), false);
  for (std::size_t i = 0; i < involutive.size() && i < g.labels.size(); ++i) g.involutive[i] = involutive[i];
  g.base = d.base;
  for (const Word& w : d.vertices) g.vertex_names.push_back(format_word(w, d.generators));
  for (const CayleyEdge& e : d.edges) {
    if (g.involutive[e.generator] && e.from > e.to) continue;
    g.edges.push_back({e.from, e.to, e.generator});
  }
  return g;
}

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// forward[v * L + s] and backward[v * L + s]; built only for regular diagrams.
struct MoveTable {
  std::size_t labels = 0;
  std::vector<std::size_t> forward;
  std::vector<std::size_t> backward;
};

std::optional<MoveTable> build_moves(const LabeledDigraph& d) {
  const std::size_t n = d.num_vertices;
  const std::size_t L = d.labels.size();
  if (d.involutive.size() != L && !d.involutive.empty()) return std::nullopt;
  auto invol = [&](std::size_t s) { return !d.involutive.empty() && d.involutive[s]; };
  MoveTable m;
  m.labels = L;
  m.forward.assign(n * L, kNone);
  m.backward.assign(n * L, kNone);
  for (const auto& e : d.edges) {
    if (e.label >= L || e.from >= n || e.to >= n) return std::nullopt;
    std::size_t& out = m.forward[e.from * L + e.label];
    std::size_t& in = m.backward[e.to * L + e.label];
    if (invol(e.label)) {
      // One incidence per endpoint; a loop is a single incidence.
      if (out != kNone) return std::nullopt;
      out = e.to;
      if (e.from != e.to) {
        std::size_t& other = m.forward[e.to * L + e.label];
        if (other != kNone) return std::nullopt;
        other = e.from;
      }
    } else {
      if (out != kNone || in != kNone) return std::nullopt;
      out = e.to;
      in = e.from;
    }
  }
  for (std::size_t s = 0; s < L; ++s) {
    for (std::size_t v = 0; v < n; ++v) {
      if (m.forward[v * L + s] == kNone) return std::nullopt;
      if (invol(s))
        m.backward[v * L + s] = m.forward[v * L + s];
      else if (m.backward[v * L + s] == kNone)
        return std::nullopt;
    }
  }
  return m;
}

bool connected(const LabeledDigraph& d, const MoveTable& m) {
  if (d.num_vertices == 0) return true;
  std::vector<bool> seen(d.num_vertices, false);
  std::vector<std::size_t> stack{d.base};
  seen[d.base] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t s = 0; s < m.labels; ++s)
      for (std::size_t w : {m.forward[v * m.labels + s], m.backward[v * m.labels + s]})
        if (!seen[w]) {
          seen[w] = true;
          ++count;
          stack.push_back(w);
        }
  }
  return count == d.num_vertices;
}

MoveTable require_regular(const LabeledDigraph& d) {
  if (d.num_vertices == 0 || d.base >= d.num_vertices) throw DomainError("diagram has no base vertex");
  auto m = build_moves(d);
  if (!m) throw DomainError("diagram is not regular");
  return *m;
}

std::optional<std::vector<std::size_t>> extend(const LabeledDigraph& d, const MoveTable& m, std::size_t target) {
  const std::size_t L = m.labels;
  std::vector<std::size_t> phi(d.num_vertices, kNone);
  phi[d.base] = target;
  std::vector<std::size_t> queue{d.base};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const std::size_t v = queue[qi];
    for (std::size_t s = 0; s < L; ++s) {
      for (const auto* table : {&m.forward, &m.backward}) {
        const std::size_t w = (*table)[v * L + s];
        const std::size_t image = (*table)[phi[v] * L + s];
        if (phi[w] == kNone) {
          phi[w] = image;
          queue.push_back(w);
        } else if (phi[w] != image) {
          return std::nullopt;
        }
      }
    }
  }
  if (queue.size() != d.num_vertices) throw DomainError("diagram is not connected");
  std::vector<bool> hit(d.num_vertices, false);
  for (std::size_t v : phi) {
    if (hit[v]) return std::nullopt;
    hit[v] = true;
  }
  return phi;
}

}  // namespace

bool check_regular(const LabeledDigraph& d) { return build_moves(d).has_value(); }

std::optional<std::vector<std::size_t>> extend_translation(const LabeledDigraph& d, std::size_t target) {
  MoveTable m = require_regular(d);
  if (target >= d.num_vertices) throw std::out_of_range("extend_translation: target vertex out of range");
  return extend(d, m, target);
}

bool check_homogeneous(const LabeledDigraph& d) {
  MoveTable m = require_regular(d);
  if (!connected(d, m)) throw DomainError("diagram is not connected");
  for (std::size_t y = 0; y < d.num_vertices; ++y)
    if (!extend(d, m, y)) return false;
  return true;
}

bool family_infinite(long long alpha, long long beta) {
  if (alpha <= 0 || beta <= 0) throw std::invalid_argument("family_infinite: alpha and beta must be positive");
  using Q = boost::rational<long long>;
  const Q angle_sum = Q(alpha - 2, alpha) + Q(2 * beta - 2, beta);
  return angle_sum >= Q(2);
}

// ---------------------------------------------------------------------------

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string export_dot(const CayleyDiagram& d, const DotOptions& options) {
  auto invol = [&](std::size_t g) { return g < options.involutive.size() && options.involutive[g]; };
  std::ostringstream os;
  os << "digraph cayley {\n";
  for (std::size_t i = 0; i < d.vertices.size(); ++i) {
    os << "  v" << i;
    if (options.word_labels) {
      const std::string w = d.vertices[i].empty() ? "1" : format_word(d.vertices[i], d.generators);
      os << " [label=\"" << dot_escape(w) << "\"]";
    }
    os << ";\n";
  }
  for (const CayleyEdge& e : d.edges) {
    if (invol(e.generator) && e.from > e.to) continue;
    os << "  v" << e.from << " -> v" << e.to << " [label=\"" << dot_escape(d.generators.name(e.generator)) << "\"";
    if (invol(e.generator)) os << ", dir=none";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string export_dot(const LabeledDigraph& d) {
  std::ostringstream os;
  os << "digraph diagram {\n";
  for (std::size_t i = 0; i < d.num_vertices; ++i) {
    os << "  v" << i;
    if (i < d.vertex_names.size()) os << " [label=\"" << dot_escape(d.vertex_names[i]) << "\"]";
    os << ";\n";
  }
  for (const auto& e : d.edges) {
    os << "  v" << e.from << " -> v" << e.to << " [label=\"" << dot_escape(d.labels.at(e.label)) << "\"";
    if (e.label < d.involutive.size() && d.involutive[e.label]) os << ", dir=none";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

nlohmann::json to_json(const CayleyDiagram& d) {
  nlohmann::json j;
  j["generators"] = d.generators.names();
  j["vertices"] = nlohmann::json::array();
  for (std::size_t i = 0; i < d.vertices.size(); ++i)
    j["vertices"].push_back({{"id", i}, {"word", format_word(d.vertices[i], d.generators)}, {"depth", d.depth[i]}});
  j["edges"] = nlohmann::json::array();
  for (const CayleyEdge& e : d.edges)
    j["edges"].push_back({{"from", e.from}, {"to", e.to}, {"label", d.generators.name(e.generator)}, {"sign", 1}});
  j["radius"] = d.radius ? nlohmann::json(*d.radius) : nlohmann::json(nullptr);
  j["complete"] = d.complete;
  j["base"] = d.base;
  return j;
}

CayleyDiagram cayley_from_json(const nlohmann::json& j, const Alphabet& generators) {
  CayleyDiagram d;
  d.generators = generators;
  std::map<std::size_t, std::size_t> index;
  for (const auto& v : j.at("vertices")) {
    index.emplace(v.at("id").get<std::size_t>(), d.vertices.size());
    d.vertices.push_back(parse_word(v.at("word").get<std::string>(), generators));
    d.depth.push_back(v.contains("depth") ? v["depth"].get<std::size_t>() : d.vertices.back().size());
  }
  auto vertex = [&](const nlohmann::json& id) {
    auto it = index.find(id.get<std::size_t>());
    if (it == index.end()) throw DomainError("edge refers to unknown vertex " + id.dump());
    return it->second;
  };
  for (const auto& e : j.at("edges")) {
    auto g = generators.find(e.at("label").get<std::string>());
    if (!g) throw DomainError("edge label '" + e.at("label").get<std::string>() + "' is not a generator");
    std::size_t from = vertex(e.at("from"));
    std::size_t to = vertex(e.at("to"));
    if (e.value("sign", 1) < 0) std::swap(from, to);
    d.edges.push_back({from, to, *g});
  }
  if (j.contains("radius") && !j["radius"].is_null()) d.radius = j["radius"].get<std::size_t>();
  d.complete = j.value("complete", false);
  d.base = j.contains("base") ? vertex(j["base"]) : 0;
  return d;
}

nlohmann::json to_json(const LabeledDigraph& d) {
  nlohmann::json j;
  j["labels"] = d.labels;
  j["involutive"] = nlohmann::json::array();
  for (std::size_t s = 0; s < d.labels.size(); ++s)
    if (s < d.involutive.size() && d.involutive[s]) j["involutive"].push_back(d.labels[s]);
  j["vertices"] = nlohmann::json::array();
  for (std::size_t i = 0; i < d.num_vertices; ++i) {
    nlohmann::json v = {{"id", i}};
    if (i < d.vertex_names.size()) v["word"] = d.vertex_names[i];
    j["vertices"].push_back(v);
  }
  j["edges"] = nlohmann::json::array();
  for (const auto& e : d.edges)
    j["edges"].push_back({{"from", e.from}, {"to", e.to}, {"label", d.labels.at(e.label)}, {"sign", 1}});
  j["base"] = d.base;
  return j;
}

LabeledDigraph digraph_from_json(const nlohmann::json& j) {
  LabeledDigraph d;
  std::map<std::string, std::size_t> index;  // keyed by the id's JSON text
  bool named = false;
  for (const auto& v : j.at("vertices")) {
    const auto& id = v.at("id");
    if (!index.emplace(id.dump(), d.num_vertices).second) throw DomainError("duplicate vertex id " + id.dump());
    ++d.num_vertices;
    std::string name;
    if (v.contains("word"))
      name = v["word"].get<std::string>();
    else if (v.contains("name"))
      name = v["name"].get<std::string>();
    else if (id.is_string())
      name = id.get<std::string>();
    else
      name = "v" + std::to_string(d.num_vertices - 1);
    named = named || v.contains("word") || v.contains("name") || id.is_string();
    d.vertex_names.push_back(std::move(name));
  }
  if (!named) d.vertex_names.clear();
  std::map<std::string, std::size_t> label_index;
  auto label = [&](const std::string& name) {
    auto [it, inserted] = label_index.emplace(name, d.labels.size());
    if (inserted) d.labels.push_back(name);
    return it->second;
  };
  for (const char* key : {"labels", "generators"})
    if (j.contains(key))
      for (const auto& l : j[key]) label(l.get<std::string>());
  auto vertex = [&](const nlohmann::json& id) {
    auto it = index.find(id.dump());
    if (it == index.end()) throw DomainError("edge refers to unknown vertex " + id.dump());
    return it->second;
  };
  for (const auto& e : j.at("edges")) {
    std::size_t from = vertex(e.at("from"));
    std::size_t to = vertex(e.at("to"));
    if (e.value("sign", 1) < 0) std::swap(from, to);
    d.edges.push_back({from, to, label(e.at("label").get<std::string>())});
  }
  if (j.contains("involutive"))
    for (const auto& l : j["involutive"]) label(l.get<std::string>());
  d.involutive.assign(d.labels.size(), false);
  if (j.contains("involutive"))
    for (const auto& l : j["involutive"]) d.involutive[label_index.at(l.get<std::string>())] = true;
  d.base = j.contains("base") ? vertex(j["base"]) : 0;
  return d;
}

}  // namespace cgt
