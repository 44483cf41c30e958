#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "cgt/abelianize.hpp"
#include "cgt/errors.hpp"
#include "cgt/presentation.hpp"
#include "cgt/torus_knot.hpp"

using namespace cgt;
namespace fx = cgt::testing::fixtures;

namespace {

using F = Syllable::Factor;

Word tw(const char* text) { return parse_word(text, torus_alphabet()); }
TorusNormalForm nf(const char* text, int k = 3, int l = 2) { return nf_normalize(tw(text), k, l); }

const std::vector<std::pair<int, int>> kPairs{{3, 2}, {4, 3}, {5, 2}};

// Calls f on every word over the 6 letters of {t, u, v} of length <= max_len.
template <class Fn>
void for_each_word(std::size_t max_len, Fn&& f) {
  Word w;
  auto rec = [&](auto&& self) -> void {
    f(w);
    if (w.size() == max_len) return;
    for (std::size_t code = 0; code < 6; ++code) {
      w.push_back(Letter::from_code(code));
      self(self);
      w.pop_back();
    }
  };
  rec(rec);
}

}  // namespace

TEST_CASE("normal form examples") {
  CHECK(nf("u u u") == TorusNormalForm{3, 2, 1, {}});
  CHECK(nf("v v") == TorusNormalForm{3, 2, 1, {}});
  CHECK(nf("u^-1") == TorusNormalForm{3, 2, -1, {{F::U, 2}}});
  CHECK(nf_multiply(nf("u^-1"), nf("u")) == nf_identity(3, 2));
  const Word w = tw("u u v u u v");
  CHECK(nf_multiply(nf_normalize(w, 3, 2), nf_normalize(invert(w), 3, 2)) == nf_identity(3, 2));
  CHECK(nf("u u v u u v") == TorusNormalForm{3, 2, 0, {{F::U, 2}, {F::V, 1}, {F::U, 2}, {F::V, 1}}});
  CHECK(nf("t^-2 u^7 v^3", 3, 2) == TorusNormalForm{3, 2, 1, {{F::U, 1}, {F::V, 1}}});
  CHECK(nf("v u^3 v", 3, 2) == TorusNormalForm{3, 2, 2, {}});
}

TEST_CASE("multiplication examples") {
  const TorusNormalForm u2{3, 2, 0, {{F::U, 2}}};
  CHECK(nf_multiply(u2, u2) == TorusNormalForm{3, 2, 1, {{F::U, 1}}});
  CHECK(nf_multiply(nf_identity(3, 2), u2) == u2);
  CHECK_THROWS_AS(nf_multiply(nf_identity(3, 2), nf_identity(4, 3)), DomainError);
  CHECK_THROWS_AS(nf_normalize(Word{Letter(3, false)}, 3, 2), DomainError);
  CHECK_THROWS_AS(nf_identity(1, 2), std::invalid_argument);
}

TEST_CASE("word problem examples") {
  CHECK(wp_torus(tw("u u u v^-1 v^-1"), 3, 2));
  CHECK_FALSE(wp_torus(tw("u"), 3, 2));
  CHECK(wp_torus(tw("t u t^-1 u^-1"), 3, 2));
  CHECK(wp_torus(tw("t u^-4"), 4, 3));
  CHECK_FALSE(wp_torus(tw("t u^-3"), 4, 3));
}

TEST_CASE("projection examples") {
  CHECK(project_to_free_product(TorusNormalForm{3, 2, 5, {}}).syllables.empty());
  const TorusNormalForm uv{3, 2, 0, {{F::U, 1}, {F::V, 1}}};
  CHECK(project_to_free_product(uv) == FreeProductWord{3, 2, {{F::U, 1}, {F::V, 1}}});
  const Alphabet uv_alpha{"u", "v"};
  CHECK(fp_normalize(parse_word("u^4 v^3 u^-1", uv_alpha), 3, 2) ==
        FreeProductWord{3, 2, {{F::U, 1}, {F::V, 1}, {F::U, 2}}});
  CHECK(fp_normalize(parse_word("u^3 v^2", uv_alpha), 3, 2).syllables.empty());
}

TEST_CASE("printing and parsing") {
  CHECK(format_normal_form(nf_identity(3, 2)) == "t^0");
  CHECK(format_normal_form(nf("u^-1")) == "t^-1 · u^2");
  CHECK(format_normal_form(nf("u u v u u v")) == "t^0 · u^2 v^1 u^2 v^1");
  std::mt19937_64 rng(21);
  for (auto [k, l] : kPairs) {
    for (int i = 0; i < 200; ++i) {
      const TorusNormalForm x = nf_normalize(testing::random_word(rng, 3, static_cast<std::size_t>(i % 20)), k, l);
      CHECK(parse_normal_form(format_normal_form(x), k, l) == x);
      CHECK(nf_normalize(nf_to_word(x), k, l) == x);
    }
  }
}

TEST_CASE("property: group axioms on random triples") {
  std::mt19937_64 rng(22);
  for (auto [k, l] : kPairs) {
    const TorusNormalForm id = nf_identity(k, l);
    CHECK(nf_normalize(tw("t"), k, l) == nf_normalize(power(tw("u"), k), k, l));
    CHECK(nf_normalize(tw("t"), k, l) == nf_normalize(power(tw("v"), l), k, l));
    for (int i = 0; i < 1000; ++i) {
      const Word wa = testing::random_word(rng, 3, static_cast<std::size_t>(i % 17));
      const Word wb = testing::random_word(rng, 3, static_cast<std::size_t>(i % 13));
      const Word wc = testing::random_word(rng, 3, static_cast<std::size_t>(i % 11));
      const TorusNormalForm a = nf_normalize(wa, k, l);
      const TorusNormalForm b = nf_normalize(wb, k, l);
      const TorusNormalForm c = nf_normalize(wc, k, l);
      CHECK(nf_multiply(nf_multiply(a, b), c) == nf_multiply(a, nf_multiply(b, c)));
      CHECK(nf_multiply(a, nf_inverse(a)) == id);
      CHECK(nf_multiply(nf_inverse(a), a) == id);
      CHECK(nf_multiply(id, a) == a);
      CHECK(nf_multiply(a, id) == a);
      // Normalization is a homomorphism from the free group.
      CHECK(nf_normalize(wa + wb, k, l) == nf_multiply(a, b));
      CHECK(nf_normalize(invert(wa), k, l) == nf_inverse(a));
      // t is central.
      const TorusNormalForm t = nf_normalize(tw("t"), k, l);
      CHECK(nf_multiply(t, a) == nf_multiply(a, t));
      // Projection is a homomorphism onto C_k * C_l.
      CHECK(project_to_free_product(nf_multiply(a, b)) ==
            fp_multiply(project_to_free_product(a), project_to_free_product(b)));
      // Tail invariants.
      const auto& tail = a.tail;
      for (std::size_t s = 0; s < tail.size(); ++s) {
        const int bound = tail[s].factor == F::U ? k : l;
        CHECK(tail[s].exponent >= 1);
        CHECK(tail[s].exponent < bound);
        if (s > 0) CHECK(tail[s].factor != tail[s - 1].factor);
      }
    }
  }
}

TEST_CASE("property: relator products are trivial and free words are not") {
  std::mt19937_64 rng(23);
  for (auto [k, l] : kPairs) {
    const Presentation p = torus_presentation(k, l);
    for (int i = 0; i < 300; ++i) {
      CHECK(wp_torus(testing::random_relator_product(rng, p, 1 + i % 5, 4), k, l));
      // Words in u and v with every exponent run shorter than its order are
      // nontrivial exactly when they are nonempty after free reduction.
      Word w;
      for (int s = 0; s < 1 + i % 6; ++s) {
        const bool use_u = s % 2 == 0;
        const int bound = use_u ? k : l;
        std::uniform_int_distribution<int> e(1, bound - 1);
        w += power(Word{Letter(use_u ? 1 : 2, false)}, e(rng));
      }
      CHECK_FALSE(wp_torus(w, k, l));
    }
  }
}

TEST_CASE("property: nf equality matches the word problem") {
  std::mt19937_64 rng(24);
  for (auto [k, l] : kPairs) {
    for (int i = 0; i < 500; ++i) {
      const Word a = testing::random_word(rng, 3, static_cast<std::size_t>(i % 9));
      const Word b = i % 2 ? a + testing::random_relator_product(rng, torus_presentation(k, l), 1, 2)
                           : testing::random_word(rng, 3, static_cast<std::size_t>(i % 9));
      CHECK((nf_normalize(a, k, l) == nf_normalize(b, k, l)) == wp_torus(a + invert(b), k, l));
    }
  }
}

TEST_CASE("agreement with a brute-force rewriting oracle") {
  // (3, 2): every word of length <= 8. The other pairs up to length 6.
  struct Case {
    int k, l;
    std::size_t max_len, cap;
  };
  for (const Case& c : {Case{3, 2, 8, 10}, Case{4, 3, 6, 8}, Case{5, 2, 6, 8}}) {
    CAPTURE(c.k);
    CAPTURE(c.l);
    const testing::TrivialBall ball = testing::trivial_ball(torus_presentation(c.k, c.l), c.cap);
    std::size_t trivial = 0;
    std::size_t mismatches = 0;
    for_each_word(c.max_len, [&](const Word& w) {
      const bool fast = wp_torus(w, c.k, c.l);
      trivial += fast;
      if (fast != ball.contains(w)) ++mismatches;
    });
    CHECK(mismatches == 0);
    CHECK(trivial > 0);
  }
}

TEST_CASE("bridge to the trefoil presentation <a, d | a d a = d^2>") {
  // d -> u and a -> u^-1 v identify it with G_{3,2}.
  const Presentation p5 = parse_presentation(fx::kTrefoilP5);
  auto image = [](const Word& w) {
    Word out;
    for (Letter l : w) {
      Word piece = l.generator() == 1 ? tw("u") : tw("u^-1 v");
      out += l.is_inverse() ? invert(piece) : piece;
    }
    return out;
  };
  std::mt19937_64 rng(25);
  for (int i = 0; i < 300; ++i) {
    const Word w = i % 2 ? testing::random_relator_product(rng, p5, 1 + i % 4, 3)
                         : testing::random_word(rng, 2, static_cast<std::size_t>(i % 12));
    const bool trivial = wp_torus(image(w), 3, 2);
    if (i % 2) CHECK(trivial);
    if (trivial) {
      // Trivial words die in the abelianization d = 2a.
      const auto sums = exponent_sums(w, 2);
      CHECK(sums[0] + 2 * sums[1] == 0);
      CHECK(testing::count_homomorphisms(p5.with_relators({w}), 3) == testing::count_homomorphisms(p5, 3));
    }
  }
}
