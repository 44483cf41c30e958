#include "cgt/torus_knot.hpp"

#include <regex>
#include <stdexcept>

#include "cgt/errors.hpp"
#include "lexer.hpp"

namespace cgt {

namespace {

constexpr std::size_t kT = 0;
constexpr std::size_t kU = 1;
constexpr std::size_t kV = 2;

void check_orders(int k, int l) {
  if (k < 2 || l < 2) throw std::invalid_argument("torus group orders must satisfy k, l >= 2");
}

int order_of(Syllable::Factor f, int k, int l) { return f == Syllable::Factor::U ? k : l; }

// Appends `right` to `left`, merging syllables at the seam. Returns the
// number of full powers u^k (or v^l) produced, each of which is a copy of t
// when working in G_{k,l} and trivial in C_k * C_l.
std::int64_t append_syllables(std::vector<Syllable>& left, const std::vector<Syllable>& right, int k, int l) {
  std::int64_t carry = 0;
  for (const Syllable& s : right) {
    if (!left.empty() && left.back().factor == s.factor) {
      const int order = order_of(s.factor, k, l);
      int e = left.back().exponent + s.exponent;
      if (e >= order) {
        e -= order;
        ++carry;
      }
      if (e == 0)
        left.pop_back();
      else
        left.back().exponent = e;
    } else {
      left.push_back(s);
    }
  }
  return carry;
}

// The merge above is only correct when `right` is itself reduced and the
// seam collapses one syllable at a time; a fully collapsed seam exposes two
// syllables of the same factor, which the loop handles on the next step since
// `right` alternates.

}  // namespace

const Alphabet& torus_alphabet() {
  static const Alphabet alphabet{"t", "u", "v"};
  return alphabet;
}

Presentation torus_presentation(int k, int l) {
  check_orders(k, l);
  const Word t{Letter(kT, false)};
  std::vector<Word> relators{t + power(Word{Letter(kU, false)}, -k), t + power(Word{Letter(kV, false)}, -l)};
  return Presentation(torus_alphabet(), std::move(relators));
}

TorusNormalForm nf_identity(int k, int l) {
  check_orders(k, l);
  return TorusNormalForm{k, l, 0, {}};
}

TorusNormalForm nf_multiply(const TorusNormalForm& a, const TorusNormalForm& b) {
  if (a.k != b.k || a.l != b.l) throw DomainError("nf_multiply: normal forms belong to different groups");
  TorusNormalForm out = a;
  out.central_power += b.central_power;
  out.central_power += append_syllables(out.tail, b.tail, a.k, a.l);
  return out;
}

TorusNormalForm nf_inverse(const TorusNormalForm& a) {
  // (u^e)^-1 = t^-1 u^(k-e), likewise for v.
  TorusNormalForm out{a.k, a.l, -a.central_power, {}};
  for (auto it = a.tail.rbegin(); it != a.tail.rend(); ++it) {
    const int order = order_of(it->factor, a.k, a.l);
    out.central_power -= 1;
    out.central_power += append_syllables(out.tail, {Syllable{it->factor, order - it->exponent}}, a.k, a.l);
  }
  return out;
}

TorusNormalForm nf_normalize(const Word& w, int k, int l) {
  check_orders(k, l);
  TorusNormalForm nf = nf_identity(k, l);
  for (Letter x : w) {
    const int sign = x.exponent();
    switch (x.generator()) {
      case kT:
        nf.central_power += sign;
        break;
      case kU:
      case kV: {
        const auto factor = x.generator() == kU ? Syllable::Factor::U : Syllable::Factor::V;
        const int order = order_of(factor, k, l);
        if (sign > 0) {
          nf.central_power += append_syllables(nf.tail, {Syllable{factor, 1}}, k, l);
        } else {
          nf.central_power -= 1;
          nf.central_power += append_syllables(nf.tail, {Syllable{factor, order - 1}}, k, l);
        }
        break;
      }
      default:
        throw DomainError("torus normal form: letter outside {t, u, v}");
    }
  }
  return nf;
}

bool wp_torus(const Word& w, int k, int l) { return nf_normalize(w, k, l) == nf_identity(k, l); }

FreeProductWord project_to_free_product(const TorusNormalForm& nf) { return FreeProductWord{nf.k, nf.l, nf.tail}; }

FreeProductWord fp_normalize(const Word& w, int k, int l) {
  check_orders(k, l);
  FreeProductWord out{k, l, {}};
  for (Letter x : w) {
    if (x.generator() > 1) throw DomainError("free product normal form: letter outside {u, v}");
    const auto factor = x.generator() == 0 ? Syllable::Factor::U : Syllable::Factor::V;
    const int order = order_of(factor, k, l);
    append_syllables(out.syllables, {Syllable{factor, x.is_inverse() ? order - 1 : 1}}, k, l);
  }
  return out;
}

FreeProductWord fp_multiply(const FreeProductWord& a, const FreeProductWord& b) {
  if (a.k != b.k || a.l != b.l) throw DomainError("fp_multiply: words belong to different groups");
  FreeProductWord out = a;
  append_syllables(out.syllables, b.syllables, a.k, a.l);
  return out;
}

Word nf_to_word(const TorusNormalForm& nf) {
  Word w = power(Word{Letter(kT, false)}, nf.central_power);
  for (const Syllable& s : nf.tail)
    w += power(Word{Letter(s.factor == Syllable::Factor::U ? kU : kV, false)}, s.exponent);
  return w;
}

std::string format_normal_form(const TorusNormalForm& nf) {
  std::string out = "t^" + std::to_string(nf.central_power);
  if (nf.tail.empty()) return out;
  out += " \xC2\xB7";
  for (const Syllable& s : nf.tail) {
    out += s.factor == Syllable::Factor::U ? " u^" : " v^";
    out += std::to_string(s.exponent);
  }
  return out;
}

TorusNormalForm parse_normal_form(std::string_view text, int k, int l) {
  // The printer writes the identity's central factor as t^0.
  static const std::regex zero_power(R"(^(\s*)t\^0(?=\s|\*|\xC2\xB7|$))");
  const std::string cleaned = std::regex_replace(std::string(text), zero_power, "$1");
  detail::Lexer lex(cleaned);
  Word w;
  for (;;) {
    w += detail::parse_word_tokens(lex, torus_alphabet());
    if (!lex.accept('*')) break;
  }
  if (lex.peek().kind != detail::TokenKind::End) lex.fail("unexpected token in normal form");
  return nf_normalize(w, k, l);
}

}  // namespace cgt
