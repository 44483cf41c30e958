#include <algorithm>
#include <functional>
#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "cgt/coset_enum.hpp"
#include "cgt/dehn_function.hpp"
#include "cgt/presentation.hpp"

using namespace cgt;
namespace fx = cgt::testing::fixtures;

namespace {

WordOracle free_oracle() {
  return [](const Word& w) { return free_wp(w); };
}

WordOracle coset_oracle(const Presentation& p) {
  auto t = std::make_shared<CosetTable>(enumerate_cosets(p, {}));
  REQUIRE(t->complete());
  return [t](const Word& w) { return wp_finite(w, *t); };
}

// delta(n) from the brute-force ball: the largest step count among the
// reduced words of length <= n.
std::vector<std::size_t> ball_delta(const testing::TrivialBall& ball, std::size_t n_max) {
  std::vector<std::size_t> out(n_max + 1, 0);
  for (const auto& [w, d] : ball.distance)
    if (w.size() <= n_max) out[w.size()] = std::max(out[w.size()], d);
  for (std::size_t n = 1; n <= n_max; ++n) out[n] = std::max(out[n], out[n - 1]);
  return out;
}

}  // namespace

TEST_CASE("area examples") {
  const Presentation z2 = parse_presentation(fx::kZ2);
  const AreaResult e = area(Word{}, z2);
  CHECK(e.kind == AreaKind::Exact);
  CHECK(e.value == 0);

  for (const char* text : {fx::kZ2, fx::kA5, fx::kGenus2, fx::kZ3}) {
    const Presentation p = parse_presentation(text);
    for (const Word& r : p.relators()) {
      const AreaResult a = area(r, p);
      CHECK(a.kind == AreaKind::Exact);
      CHECK(a.value == 1);
    }
  }

  const AreaResult c = area(parse_word("a^2 b a^-2 b^-1", z2.alphabet()), z2);
  CHECK(c.kind == AreaKind::Exact);
  CHECK(c.value == 2);
  CHECK(replay_area_witness(parse_word("a^2 b a^-2 b^-1", z2.alphabet()), c.witness).empty());

  // A nontrivial word is rejected by the oracle without searching.
  const AreaResult n = area(parse_word("a", z2.alphabet()), z2, {}, free_oracle());
  CHECK(n.kind == AreaKind::Unknown);
  CHECK(n.nodes_expanded == 0);
}

TEST_CASE("caps turn results into bounds") {
  const Presentation z2 = parse_presentation(fx::kZ2);
  const Word w = parse_word("a^3 b^3 a^-3 b^-3", z2.alphabet());
  AreaOptions tiny;
  tiny.node_cap = 3;
  const AreaResult a = area(w, z2, tiny);
  CHECK(a.kind != AreaKind::Exact);
  CHECK(a.node_cap_hit);
  if (a.kind == AreaKind::UpperBound) CHECK(replay_area_witness(w, a.witness).empty());
  const AreaResult full = area(w, z2);
  CHECK(full.kind == AreaKind::Exact);
  CHECK(full.value == 9);
  CHECK(full.length_cap == w.size() + 8);
}

TEST_CASE("property: areas agree with breadth-first search") {
  std::mt19937_64 rng(31);
  struct Case {
    const char* text;
    std::size_t max_len;
  };
  for (const Case& c : {Case{fx::kZ2, 8}, Case{fx::kZ3, 9}, Case{"<x, y | x^2, y^3>", 7}, Case{fx::kZ3Alt, 7}}) {
    CAPTURE(c.text);
    const Presentation p = parse_presentation(c.text);
    std::size_t longest = 0;
    for (const Word& r : p.relators()) longest = std::max(longest, r.size());
    for (int i = 0; i < 30; ++i) {
      const Word w = free_reduce(testing::random_relator_product(rng, p, 1 + i % 2, 2));
      if (w.size() > c.max_len) continue;
      CAPTURE(format_word(w, p.alphabet()));
      const std::size_t cap = w.size() + 2 * longest;
      AreaOptions options;
      options.length_cap = cap;
      const AreaResult a = area(w, p, options);
      REQUIRE(a.kind != AreaKind::Unknown);
      CHECK(replay_area_witness(w, a.witness).empty());
      CHECK(a.witness.size() == a.value);
      if (a.kind == AreaKind::Exact) CHECK(testing::bfs_area(p, w, cap, a.value) == a.value);
    }
  }
}

TEST_CASE("areas in Z^2 equal the winding-number area") {
  const Presentation z2 = parse_presentation(fx::kZ2);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 60; ++i) {
    const Word w = free_reduce(testing::random_relator_product(rng, z2, 1 + i % 3, 2));
    if (w.size() > 12) continue;
    CAPTURE(format_word(w, z2.alphabet()));
    const AreaResult a = area(w, z2);
    REQUIRE(a.kind == AreaKind::Exact);
    CHECK(a.value == testing::z2_winding_area(w));
  }
  CHECK(testing::z2_winding_area(parse_word("a^3 b^3 a^-3 b^-3", z2.alphabet())) == 9);
}

TEST_CASE("Dehn function of the free group is zero") {
  const Presentation f2 = parse_presentation("<a, b | >");
  const DehnFunctionTable t = dehn_function_estimate(f2, 6, free_oracle());
  REQUIRE(t.rows.size() == 7);
  for (const DeltaRow& r : t.rows) {
    CHECK(r.delta == 0);
    CHECK(r.exactness == DeltaExactness::Exact);
    CHECK(r.trivial_words == 1);
  }
  CHECK_FALSE(t.truncated);
}

TEST_CASE("Dehn function of <a | a^3>") {
  const Presentation z3 = parse_presentation(fx::kZ3);
  const DehnFunctionTable t = dehn_function_estimate(z3, 8, coset_oracle(z3));
  const std::vector<std::size_t> oracle = ball_delta(testing::trivial_ball(z3, 14), 8);
  REQUIRE(t.rows.size() == 9);
  for (const DeltaRow& r : t.rows) {
    CAPTURE(r.n);
    CHECK(r.exactness == DeltaExactness::Exact);
    CHECK(r.delta == r.n / 3);
    CHECK(r.delta == oracle[r.n]);
  }
  CHECK(t.rows[3].delta == 1);
  CHECK(format_tsv(t).rfind("0\t0\texact\n", 0) == 0);
}

TEST_CASE("Dehn function of Z^2 matches the winding-number oracle") {
  const Presentation z2 = parse_presentation(fx::kZ2);
  const WordOracle abelian = [](const Word& w) {
    const auto s = exponent_sums(w, 2);
    return s[0] == 0 && s[1] == 0;
  };
  const DehnFunctionTable t = dehn_function_estimate(z2, 8, abelian);
  REQUIRE(t.rows.size() == 9);
  // Largest winding area over every null-homotopic reduced word of length <= n.
  std::vector<std::size_t> oracle(9, 0);
  Word w;
  std::function<void()> walk = [&] {
    if (abelian(w)) oracle[w.size()] = std::max(oracle[w.size()], testing::z2_winding_area(w));
    if (w.size() == 8) return;
    for (std::size_t code = 0; code < 4; ++code) {
      const Letter l = Letter::from_code(code);
      if (!w.empty() && w.back() == l.inverse()) continue;
      w.push_back(l);
      walk();
      w.pop_back();
    }
  };
  walk();
  for (std::size_t n = 1; n <= 8; ++n) oracle[n] = std::max(oracle[n], oracle[n - 1]);
  for (const DeltaRow& r : t.rows) {
    CAPTURE(r.n);
    CHECK(r.exactness == DeltaExactness::Exact);
    CHECK(r.delta == oracle[r.n]);
  }
  CHECK(t.rows[4].delta == 1);
  CHECK(t.rows[6].delta == 2);
  CHECK(t.rows[8].delta == 4);
}

TEST_CASE("genus-2 surface: delta(8) = 1") {
  const Presentation g2 = parse_presentation(fx::kGenus2);
  // Homologically nontrivial words are rejected before running Dehn's algorithm.
  const WordOracle dehn = [g2](const Word& w) {
    const auto s = exponent_sums(w, 4);
    if (std::any_of(s.begin(), s.end(), [](long long x) { return x != 0; })) return false;
    return wp_dehn(w, g2) == DehnVerdict::Trivial;
  };
  DehnFunctionOptions options;
  options.max_words = 8'000'000;
  const DehnFunctionTable t = dehn_function_estimate(g2, 8, dehn, options);
  REQUIRE(t.rows.size() == 9);
  for (std::size_t n = 0; n < 8; ++n) CHECK(t.rows[n].delta == 0);
  CHECK(t.rows[8].delta == 1);
  CHECK(t.rows[8].exactness == DeltaExactness::Exact);
  // The 16 elements of R* are the only trivial reduced words of length 8.
  CHECK(t.rows[8].trivial_words == 17);
}

TEST_CASE("word caps truncate the table") {
  const Presentation z3 = parse_presentation(fx::kZ3);
  DehnFunctionOptions options;
  options.max_words = 4;
  const DehnFunctionTable t = dehn_function_estimate(z3, 8, coset_oracle(z3), options);
  CHECK(t.truncated);
  CHECK(t.rows.size() < 9);
}

TEST_CASE("two presentations of Z/3 satisfy the equivalence bound with C = 3") {
  const Presentation p = parse_presentation(fx::kZ3);
  const Presentation q = parse_presentation(fx::kZ3Alt);
  const DehnFunctionTable tp = dehn_function_estimate(p, 8, coset_oracle(p));
  const DehnFunctionTable tq = dehn_function_estimate(q, 8, coset_oracle(q));
  const std::size_t c = 3;
  // delta_j(c n + c) is at least delta_j(8) by monotonicity, which makes the
  // bound checkable from the computed range alone.
  for (std::size_t n = 0; n <= 8; ++n) {
    CHECK(tp.rows[n].delta <= c * tq.rows[8].delta + c * n + c);
    CHECK(tq.rows[n].delta <= c * tp.rows[8].delta + c * n + c);
  }
}
