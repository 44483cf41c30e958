#include "cgt/word.hpp"

#include <algorithm>
#include <stdexcept>

#include "cgt/errors.hpp"
#include "lexer.hpp"

namespace cgt {

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (Letter l : w) {
    if (!stack.empty() && stack.back() == l.inverse())
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return Word(std::move(stack));
}

bool free_wp(const Word& w) {
  std::vector<Letter> cur(w.begin(), w.end());
  // (i)/(ii): while |w| >= 2 and some adjacent pair cancels, delete it.
  while (cur.size() >= 2) {
    auto it = std::adjacent_find(cur.begin(), cur.end(), [](Letter a, Letter b) { return a == b.inverse(); });
    if (it == cur.end()) break;
    cur.erase(it, it + 2);
  }
  // (iii)
  return cur.empty();
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(it->inverse());
  return Word(std::move(out));
}

Word power(const Word& w, long long n) {
  const Word base = n < 0 ? invert(w) : w;
  const unsigned long long count = n < 0 ? static_cast<unsigned long long>(-(n + 1)) + 1 : static_cast<unsigned long long>(n);
  Word out;
  out.reserve(static_cast<std::size_t>(count) * base.size());
  for (unsigned long long i = 0; i < count; ++i) out += base;
  return out;
}

Word rotate(const Word& w, std::size_t shift) {
  if (w.empty()) return w;
  shift %= w.size();
  std::vector<Letter> out(w.begin(), w.end());
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(shift), out.end());
  return Word(std::move(out));
}

bool is_freely_reduced(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == w[i + 1].inverse()) return false;
  return true;
}

bool is_cyclically_reduced(const Word& w) {
  return is_freely_reduced(w) && (w.size() < 2 || w.front() != w.back().inverse());
}

CyclicReduction cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0;
  std::size_t hi = r.size();
  while (hi - lo >= 2 && r[lo] == r[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return {r.subword(lo, hi - lo), r.subword(0, lo)};
}

std::vector<Word> cyclic_permutations(const Word& w) {
  if (!is_cyclically_reduced(w)) throw std::invalid_argument("cyclic_permutations: word is not cyclically reduced");
  std::vector<Word> out;
  if (w.empty()) {
    out.push_back(w);
    return out;
  }
  // The rotations repeat with the least period of w.
  std::size_t period = w.size();
  for (std::size_t p = 1; p < w.size(); ++p) {
    if (w.size() % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < w.size() && ok; ++i) ok = w[i] == w[i - p];
    if (ok) {
      period = p;
      break;
    }
  }
  out.reserve(period);
  for (std::size_t s = 0; s < period; ++s) out.push_back(rotate(w, s));
  return out;
}

bool conjugate_free(const Word& u, const Word& v) {
  Word a = cyclic_reduce(u).core;
  Word b = cyclic_reduce(v).core;
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  Word doubled = a + a;
  auto it = std::search(doubled.begin(), doubled.end(), b.begin(), b.end());
  return it != doubled.end();
}

std::vector<long long> exponent_sums(const Word& w, std::size_t num_generators) {
  std::vector<long long> sums(num_generators, 0);
  for (Letter l : w) sums.at(l.generator()) += l.exponent();
  return sums;
}

// ---------------------------------------------------------------------------

bool Alphabet::valid_name(std::string_view name) {
  if (name.empty()) return false;
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); };
  if (!alpha(name[0])) return false;
  return std::all_of(name.begin() + 1, name.end(),
                     [&](char c) { return alpha(c) || (c >= '0' && c <= '9') || c == '_'; });
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!valid_name(names_[i])) throw std::invalid_argument("invalid generator name '" + names_[i] + "'");
    if (!index_.emplace(names_[i], i).second)
      throw std::invalid_argument("duplicate generator name '" + names_[i] + "'");
  }
}

std::optional<std::size_t> Alphabet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Letter Alphabet::letter(std::string_view name, bool inverse) const {
  auto g = find(name);
  if (!g) throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
  return Letter(*g, inverse);
}

namespace detail {

namespace {

bool starts_factor(const Token& t) {
  return t.kind == TokenKind::Identifier || (t.kind == TokenKind::Integer && t.text == "1") || t.is_symbol('(');
}

}  // namespace

Word parse_word_tokens(Lexer& lex, const Alphabet& alphabet) {
  Word out;
  while (starts_factor(lex.peek())) {
    Word factor;
    Token t = lex.next();
    if (t.kind == TokenKind::Identifier) {
      auto g = alphabet.find(t.text);
      if (!g) throw ParseError("undeclared generator '" + t.text + "'", t.line, t.column);
      factor.push_back(Letter(*g, false));
    } else if (t.is_symbol('(')) {
      factor = parse_word_tokens(lex, alphabet);
      lex.expect(')');
    }  // else: "1", the identity
    if (lex.accept('^')) {
      Token at = lex.peek();
      long long k = lex.expect_integer();
      if (k == 0) throw ParseError("exponent must be nonzero", at.line, at.column);
      if (k > 1'000'000 || k < -1'000'000) throw ParseError("exponent too large", at.line, at.column);
      factor = power(factor, k);
    }
    out += factor;
  }
  return out;
}

}  // namespace detail

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  detail::Lexer lex(text);
  Word w = detail::parse_word_tokens(lex, alphabet);
  if (lex.peek().kind != detail::TokenKind::End) lex.fail("unexpected token in word");
  return w;
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t run = 1;
    while (i + run < w.size() && w[i + run] == w[i]) ++run;
    if (!out.empty()) out += ' ';
    out += alphabet.name(w[i].generator());
    if (w[i].is_inverse())
      out += "^-" + std::to_string(run);
    else if (run > 1)
      out += "^" + std::to_string(run);
    i += run;
  }
  return out;
}

void check_alphabet(const Word& w, std::size_t num_generators, std::string_view context) {
  for (Letter l : w)
    if (l.generator() >= num_generators)
      throw DomainError(std::string(context) + ": letter refers to generator " + std::to_string(l.generator()) +
                        " but only " + std::to_string(num_generators) + " generators exist");
}

}  // namespace cgt
