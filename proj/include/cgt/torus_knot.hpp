#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cgt/presentation.hpp"

namespace cgt {

/// One syllable u^e (1 <= e < k) or v^f (1 <= f < l) of a free-product word.
struct Syllable {
  enum class Factor : std::uint8_t { U, V };
  Factor factor;
  int exponent;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Reduced word of C_k * C_l = <u, v | u^k, v^l>: syllables alternate
/// between the two factors.
struct FreeProductWord {
  int k = 2;
  int l = 2;
  std::vector<Syllable> syllables;
  friend bool operator==(const FreeProductWord&, const FreeProductWord&) = default;
};

/// Element t^m * tail of G_{k,l} = <t, u, v | t = u^k = v^l>. t is central,
/// and the tail is the image in C_k * C_l, so (m, tail) is unique.
struct TorusNormalForm {
  int k = 2;
  int l = 2;
  std::int64_t central_power = 0;
  std::vector<Syllable> tail;
  friend bool operator==(const TorusNormalForm&, const TorusNormalForm&) = default;
};

/// Generators t, u, v in that order.
const Alphabet& torus_alphabet();

/// <t, u, v | t u^-k, t v^-l>.
Presentation torus_presentation(int k, int l);

TorusNormalForm nf_identity(int k, int l);

/// Throws DomainError for letters outside {t, u, v} and std::invalid_argument
/// unless k, l >= 2.
TorusNormalForm nf_normalize(const Word& w, int k, int l);

/// Throws DomainError when (k, l) differ.
TorusNormalForm nf_multiply(const TorusNormalForm& a, const TorusNormalForm& b);
TorusNormalForm nf_inverse(const TorusNormalForm& a);

bool wp_torus(const Word& w, int k, int l);

/// Drops the central power: the quotient map G_{k,l} -> C_k * C_l.
FreeProductWord project_to_free_product(const TorusNormalForm& nf);

/// Reduced form in C_k * C_l of a word over {u, v} (generator 0 is u,
/// generator 1 is v).
FreeProductWord fp_normalize(const Word& w, int k, int l);
FreeProductWord fp_multiply(const FreeProductWord& a, const FreeProductWord& b);

/// A word over {t, u, v} spelling the normal form (t^m then the syllables).
Word nf_to_word(const TorusNormalForm& nf);

/// `t^m · u^e0 v^f0 u^e1 ...`; the tail is omitted when empty.
std::string format_normal_form(const TorusNormalForm& nf);

/// Accepts format_normal_form output (and any word over t, u, v, with `·` or
/// `*` read as concatenation) and returns its normal form.
TorusNormalForm parse_normal_form(std::string_view text, int k, int l);

}  // namespace cgt
