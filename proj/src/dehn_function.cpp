#include "cgt/dehn_function.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <tuple>
#include <unordered_map>

#include "cgt/errors.hpp"

namespace cgt {

namespace {

Word insert_reduced(const Word& w, std::size_t pos, const Word& r) {
  Word out;
  out.reserve(w.size() + r.size());
  auto push = [&out](Letter l) {
    if (!out.empty() && out.back() == l.inverse())
      out.pop_back();
    else
      out.push_back(l);
  };
  for (std::size_t i = 0; i < pos; ++i) out.push_back(w[i]);
  for (Letter l : r) push(l);
  for (std::size_t i = pos; i < w.size(); ++i) push(w[i]);
  return out;
}

struct SearchOutcome {
  std::optional<std::vector<AreaMove>> witness;
  bool optimal = false;  // witness popped from the queue (or none exists under the cap)
  std::size_t expanded = 0;
  bool capped = false;
};

// A* with h = ceil(|w| / L): one insertion of a word of length <= L shortens
// by at most L, so h is consistent and the first goal popped is optimal.
SearchOutcome search(const Word& start, const std::vector<Word>& closure, std::size_t length_cap,
                     std::size_t node_cap) {
  SearchOutcome out;
  if (start.empty()) {
    out.witness.emplace();
    out.optimal = true;
    return out;
  }
  std::size_t longest = 0;
  for (const Word& r : closure) longest = std::max(longest, r.size());
  if (longest == 0) {
    out.optimal = true;
    return out;
  }
  auto h = [longest](const Word& w) { return (w.size() + longest - 1) / longest; };

  struct Node {
    Word word;
    std::size_t g;
    std::size_t parent;
    AreaMove move;
  };
  std::vector<Node> nodes;
  std::unordered_map<Word, std::size_t, WordHash> best_g;
  // (f, -g, sequence) keeps ties deterministic and prefers deeper nodes.
  using Entry = std::tuple<std::size_t, std::size_t, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
  auto key = [](std::size_t f, std::size_t g, std::size_t idx) {
    return Entry{f, static_cast<std::size_t>(-1) - g, idx};
  };

  nodes.push_back({start, 0, 0, {0, {}}});
  best_g[start] = 0;
  open.push(key(h(start), 0, 0));
  std::optional<std::size_t> best_goal;

  auto unwind = [&nodes](std::size_t idx) {
    std::vector<AreaMove> moves;
    while (idx != 0) {
      moves.push_back(nodes[idx].move);
      idx = nodes[idx].parent;
    }
    std::reverse(moves.begin(), moves.end());
    return moves;
  };

  while (!open.empty()) {
    const std::size_t idx = std::get<2>(open.top());
    open.pop();
    const Node& node = nodes[idx];
    if (best_g.at(node.word) < node.g) continue;
    if (node.word.empty()) {
      out.witness = unwind(idx);
      out.optimal = true;
      return out;
    }
    if (out.expanded >= node_cap) {
      out.capped = true;
      break;
    }
    ++out.expanded;
    const Word current = node.word;
    const std::size_t g = node.g + 1;
    for (std::size_t pos = 0; pos <= current.size(); ++pos) {
      for (const Word& r : closure) {
        Word next = insert_reduced(current, pos, r);
        if (next.size() > length_cap) continue;
        auto it = best_g.find(next);
        if (it != best_g.end() && it->second <= g) continue;
        const std::size_t child = nodes.size();
        best_g[next] = g;
        const std::size_t f = g + h(next);
        const bool goal = next.empty();
        nodes.push_back({std::move(next), g, idx, {pos, r}});
        if (goal && (!best_goal || nodes[*best_goal].g > g)) best_goal = child;
        open.push(key(f, g, child));
      }
    }
  }
  if (!out.capped) {
    out.optimal = true;  // queue exhausted: no witness under this cap
    return out;
  }
  if (best_goal) out.witness = unwind(*best_goal);
  return out;
}

}  // namespace

AreaResult area(const Word& w, const Presentation& p, const AreaOptions& options, const WordOracle& oracle) {
  check_alphabet(w, p.num_generators(), "area");
  const Word start = free_reduce(w);
  AreaResult result;
  result.length_cap = options.length_cap.value_or(start.size() + 2 * p.max_relator_length());
  if (result.length_cap < start.size()) result.length_cap = start.size();
  if (oracle && !start.empty() && !oracle(start)) return result;

  const RelatorClosure relators(p);
  const std::vector<Word>& closure = relators.words();
  SearchOutcome first = search(start, closure, result.length_cap, options.node_cap);
  result.nodes_expanded = first.expanded;
  result.node_cap_hit = first.capped;
  if (!first.witness) return result;

  result.witness = std::move(*first.witness);
  result.value = result.witness.size();
  result.kind = AreaKind::UpperBound;
  if (!first.optimal || result.value == 0) {
    if (result.value == 0) result.kind = AreaKind::Exact;
    return result;
  }

  SearchOutcome second = search(start, closure, result.length_cap + 2, options.node_cap);
  result.nodes_expanded += second.expanded;
  result.node_cap_hit = second.capped;
  if (second.witness && second.witness->size() < result.value) {
    result.witness = std::move(*second.witness);
    result.value = result.witness.size();
    result.length_cap += 2;
    return result;
  }
  if (second.optimal) result.kind = AreaKind::Exact;
  return result;
}

Word replay_area_witness(const Word& w, std::span<const AreaMove> moves) {
  Word current = free_reduce(w);
  for (const AreaMove& m : moves) {
    if (m.position > current.size()) throw DomainError("area witness: insertion position out of range");
    current = insert_reduced(current, m.position, m.relator);
  }
  return current;
}

DehnFunctionTable dehn_function_estimate(const Presentation& p, std::size_t n_max, const WordOracle& oracle,
                                         const DehnFunctionOptions& options) {
  DehnFunctionTable table;
  const std::size_t gens = p.num_generators();
  std::size_t running = 0;
  DeltaExactness running_exactness = DeltaExactness::Exact;
  std::size_t trivial = 1;  // the empty word
  std::size_t enumerated = 1;
  table.rows.push_back({0, 0, DeltaExactness::Exact, trivial});

  auto absorb = [&](const Word& w) {
    if (!oracle(w)) return;
    ++trivial;
    const AreaResult a = area(w, p, options.area);
    if (a.kind == AreaKind::Unknown) {
      running_exactness = DeltaExactness::Partial;
      return;
    }
    running = std::max(running, a.value);
    if (a.kind == AreaKind::UpperBound && running_exactness == DeltaExactness::Exact)
      running_exactness = DeltaExactness::UpperBound;
  };

  for (std::size_t n = 1; n <= n_max; ++n) {
    // Freely reduced words of length exactly n: 2g (2g-1)^(n-1).
    std::size_t count = gens == 0 ? 0 : 2 * gens;
    for (std::size_t i = 1; i < n && count <= options.max_words; ++i) count *= 2 * gens - 1;
    if (count > options.max_words || enumerated + count > options.max_words) {
      table.truncated = true;
      break;
    }
    enumerated += count;
    if (count > 0) {
      Word w;
      // Odometer over letter codes, skipping positions that cancel.
      std::function<void(std::size_t)> extend = [&](std::size_t depth) {
        if (depth == n) {
          absorb(w);
          return;
        }
        for (std::size_t code = 0; code < 2 * gens; ++code) {
          Letter l = Letter::from_code(code);
          if (!w.empty() && w.back() == l.inverse()) continue;
          w.push_back(l);
          extend(depth + 1);
          w.pop_back();
        }
      };
      extend(0);
    }
    table.rows.push_back({n, running, running_exactness, trivial});
  }
  return table;
}

std::string to_string(AreaKind kind) {
  switch (kind) {
    case AreaKind::Exact:
      return "exact";
    case AreaKind::UpperBound:
      return "upper-bound";
    default:
      return "unknown";
  }
}

std::string to_string(DeltaExactness e) {
  switch (e) {
    case DeltaExactness::Exact:
      return "exact";
    case DeltaExactness::UpperBound:
      return "upper-bound";
    default:
      return "partial";
  }
}

std::string format_tsv(const DehnFunctionTable& table) {
  std::string out;
  for (const DeltaRow& r : table.rows)
    out += std::to_string(r.n) + "\t" + std::to_string(r.delta) + "\t" + to_string(r.exactness) + "\n";
  return out;
}

}  // namespace cgt
