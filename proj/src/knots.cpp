#include "cgt/knots.hpp"

#include <algorithm>
#include <utility>

#include "cgt/errors.hpp"
#include "lexer.hpp"

namespace cgt {

namespace {

struct Occurrence {
  std::size_t crossing;
  int slot;
};

// Whether the edge at `slot` points into the crossing.
bool is_incoming(const PDCrossing& x, int slot) {
  switch (slot) {
    case 0:
      return true;
    case 2:
      return false;
    case 1:
      return x.sign < 0;
    default:
      return x.sign > 0;
  }
}

std::string crossing_name(std::size_t c) { return "crossing " + std::to_string(c + 1); }

Alphabet arc_alphabet(std::size_t arcs) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < arcs; ++i)
    names.push_back(arcs <= 26 ? std::string(1, static_cast<char>('a' + i)) : "s" + std::to_string(i + 1));
  return Alphabet(std::move(names));
}

int convention_factor(SignConvention c) { return c == SignConvention::LeftRight ? 1 : -1; }

Word letter_power(std::size_t gen, long long e) { return power(Word{Letter(gen, false)}, e); }

}  // namespace

std::size_t KnotDiagram::over_arc(std::size_t crossing) const { return arc_of_edge.at(crossings.at(crossing).slots[1]); }

KnotDiagram make_diagram(std::vector<PDCrossing> crossings) {
  KnotDiagram d;
  d.crossings = std::move(crossings);
  const std::size_t n = d.crossings.size();
  if (n == 0) {
    d.faces.assign(2, {});
    d.unbounded_face = 1;
    return d;
  }

  std::map<long long, std::vector<Occurrence>> occurrences;
  for (std::size_t c = 0; c < n; ++c) {
    const PDCrossing& x = d.crossings[c];
    if (x.sign != 1 && x.sign != -1) throw DomainError(crossing_name(c) + ": sign must be +1 or -1");
    for (int s = 0; s < 4; ++s) occurrences[x.slots[static_cast<std::size_t>(s)]].push_back({c, s});
  }
  std::map<long long, Occurrence> head;  // where each edge enters a crossing
  for (const auto& [label, occ] : occurrences) {
    if (occ.size() != 2)
      throw DomainError("edge " + std::to_string(label) + " appears " + std::to_string(occ.size()) +
                        " times, expected 2");
    const bool in0 = is_incoming(d.crossings[occ[0].crossing], occ[0].slot);
    const bool in1 = is_incoming(d.crossings[occ[1].crossing], occ[1].slot);
    if (in0 == in1)
      throw DomainError("edge " + std::to_string(label) + " is oriented " + (in0 ? "into" : "out of") +
                        " both of its crossings");
    head[label] = in0 ? occ[0] : occ[1];
  }

  // Follow the orientation; crossing straight through at every head.
  const long long start = occurrences.begin()->first;
  long long edge = start;
  std::size_t passed_under = 0;
  do {
    d.traversal.push_back(edge);
    d.arc_of_edge[edge] = passed_under % n;
    const Occurrence h = head.at(edge);
    if (h.slot == 0) {
      d.under_sequence.push_back(h.crossing);
      ++passed_under;
    }
    edge = d.crossings[h.crossing].slots[static_cast<std::size_t>((h.slot + 2) % 4)];
  } while (edge != start && d.traversal.size() <= 2 * n);
  if (d.traversal.size() != 2 * n)
    throw DomainError("edges do not form a single closed curve (" + std::to_string(d.traversal.size()) + " of " +
                      std::to_string(2 * n) + " edges reached)");

  // Faces: leave a crossing along slot q with the region on the left; at the
  // far end (c', p') the same region sits in corner p' - 1.
  auto far_end = [&](std::size_t c, int q) {
    const long long label = d.crossings[c].slots[static_cast<std::size_t>(q)];
    const auto& occ = occurrences.at(label);
    return (occ[0].crossing == c && occ[0].slot == q) ? occ[1] : occ[0];
  };
  std::vector<int> face_of(4 * n, -1);
  for (std::size_t c = 0; c < n; ++c) {
    for (int q = 0; q < 4; ++q) {
      if (face_of[4 * c + static_cast<std::size_t>(q)] >= 0) continue;
      const int id = static_cast<int>(d.faces.size());
      d.faces.emplace_back();
      std::size_t cc = c;
      int qq = q;
      while (face_of[4 * cc + static_cast<std::size_t>(qq)] < 0) {
        face_of[4 * cc + static_cast<std::size_t>(qq)] = id;
        d.faces.back().push_back({cc, qq});
        const Occurrence next = far_end(cc, qq);
        cc = next.crossing;
        qq = (next.slot + 3) % 4;
      }
    }
  }
  if (d.faces.size() != n + 2)
    throw DomainError("diagram is not planar: " + std::to_string(d.faces.size()) + " faces, expected " +
                      std::to_string(n + 2));
  for (std::size_t f = 1; f < d.faces.size(); ++f)
    if (d.faces[f].size() > d.faces[d.unbounded_face].size()) d.unbounded_face = f;
  return d;
}

void set_unbounded_face(KnotDiagram& d, std::size_t face) {
  if (face >= d.faces.size()) throw DomainError("no face " + std::to_string(face));
  d.unbounded_face = face;
}

KnotDiagram parse_pd(std::string_view text) {
  detail::Lexer lex(text);
  auto keyword = [&](const char* word) {
    if (lex.peek().kind != detail::TokenKind::Identifier || lex.peek().text != word)
      lex.fail(std::string("expected '") + word + "'");
    lex.next();
  };
  keyword("PD");
  lex.expect('[');
  std::vector<PDCrossing> crossings;
  if (!lex.accept(']')) {
    do {
      keyword("X");
      lex.expect('[');
      PDCrossing x{};
      for (std::size_t s = 0; s < 4; ++s) {
        if (s > 0) lex.expect(',');
        x.slots[s] = lex.expect_integer();
      }
      lex.expect(']');
      keyword("s");
      if (lex.accept('+'))
        x.sign = 1;
      else if (lex.accept('-'))
        x.sign = -1;
      else
        lex.fail("expected crossing sign '+' or '-'");
      crossings.push_back(x);
    } while (lex.accept(','));
    lex.expect(']');
  }
  if (lex.peek().kind != detail::TokenKind::End) lex.fail("unexpected trailing input");
  return make_diagram(std::move(crossings));
}

std::string format_pd(const KnotDiagram& d) {
  std::string out = "PD[";
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    const PDCrossing& x = d.crossings[c];
    if (c > 0) out += ", ";
    out += "X[";
    for (std::size_t s = 0; s < 4; ++s) {
      if (s > 0) out += ",";
      out += std::to_string(x.slots[s]);
    }
    out += x.sign > 0 ? "]s+" : "]s-";
  }
  return out + "]";
}

WirtingerPresentation wirtinger(const KnotDiagram& d, SignConvention convention, bool drop_redundant) {
  const std::size_t n = d.num_crossings();
  std::vector<Word> relators;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t c = d.under_sequence[j];
    const std::size_t o = d.over_arc(c);
    const int e = d.crossings[c].sign * convention_factor(convention);
    relators.push_back(letter_power(o, e) + letter_power((j + 1) % n, 1) + letter_power(o, -e) +
                       letter_power(j, -1));
  }
  if (drop_redundant && !relators.empty()) relators.pop_back();
  return {Presentation(arc_alphabet(d.num_arcs()), std::move(relators)), Word{Letter(0, false)}};
}

Presentation dehn_presentation(const KnotDiagram& d) {
  const std::size_t n = d.num_crossings();
  std::vector<std::size_t> generator(d.faces.size(), 0);
  std::vector<std::string> names;
  for (std::size_t f = 0; f < d.faces.size(); ++f) {
    if (f == d.unbounded_face) continue;
    generator[f] = names.size();
    names.push_back("f" + std::to_string(names.size() + 1));
  }
  std::vector<std::size_t> face_at(4 * n);
  for (std::size_t f = 0; f < d.faces.size(); ++f)
    for (const Corner& k : d.faces[f]) face_at[4 * k.crossing + static_cast<std::size_t>(k.quadrant)] = f;

  std::vector<Word> relators;
  for (std::size_t c = 0; c < n; ++c) {
    Word r;
    // Corners 2, 3, 0, 1 are NW, SW, SE, NE with the understrand running S -> N.
    const std::pair<int, int> pattern[] = {{2, 1}, {3, -1}, {0, 1}, {1, -1}};
    for (auto [q, e] : pattern) {
      const std::size_t f = face_at[4 * c + static_cast<std::size_t>(q)];
      if (f != d.unbounded_face) r += letter_power(generator[f], e);
    }
    relators.push_back(std::move(r));
  }
  return Presentation(Alphabet(std::move(names)), std::move(relators));
}

PeripheralSystem peripheral(const KnotDiagram& d, SignConvention convention) {
  Word parallel;
  long long total = 0;
  for (std::size_t c : d.under_sequence) {
    const int e = d.crossings[c].sign * convention_factor(convention);
    parallel += letter_power(d.over_arc(c), e);
    total += e;
  }
  parallel += letter_power(0, -total);
  return {Word{Letter(0, false)}, free_reduce(parallel)};
}

Presentation surgery_presentation(const KnotDiagram& d, long long k, SignConvention convention) {
  const WirtingerPresentation w = wirtinger(d, convention);
  const PeripheralSystem ps = peripheral(d, convention);
  return w.presentation.with_relators({w.meridian + power(ps.parallel, -k)});
}

}  // namespace cgt
