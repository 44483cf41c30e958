#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cgt {

/// A generator or its inverse. Stored as 2*generator + (inverse ? 1 : 0), so
/// the natural order is s0 < s0^-1 < s1 < s1^-1 < ... and the inverse of a
/// letter is obtained by flipping the low bit.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(std::size_t generator, bool inverse)
      : code_(static_cast<std::uint32_t>(2 * generator + (inverse ? 1 : 0))) {}

  static constexpr Letter from_code(std::uint32_t code) {
    Letter l;
    l.code_ = code;
    return l;
  }

  constexpr std::size_t generator() const { return code_ >> 1; }
  constexpr bool is_inverse() const { return (code_ & 1u) != 0; }
  constexpr int exponent() const { return is_inverse() ? -1 : 1; }
  constexpr Letter inverse() const { return from_code(code_ ^ 1u); }
  constexpr std::uint32_t code() const { return code_; }

  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  std::uint32_t code_ = 0;
};

/// A word in the generators and their inverses. Not reduced unless a caller
/// reduces it; the empty word is the identity expression.
class Word {
 public:
  using value_type = Letter;
  using const_iterator = std::vector<Letter>::const_iterator;

  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  Word(const_iterator first, const_iterator last) : letters_(first, last) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  const_iterator begin() const { return letters_.begin(); }
  const_iterator end() const { return letters_.end(); }
  std::span<const Letter> letters() const { return letters_; }

  void push_back(Letter l) { letters_.push_back(l); }
  void pop_back() { letters_.pop_back(); }
  void reserve(std::size_t n) { letters_.reserve(n); }
  Word& operator+=(const Word& other) {
    letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
    return *this;
  }

  /// Letters [pos, pos + len).
  Word subword(std::size_t pos, std::size_t len) const {
    return Word(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                letters_.begin() + static_cast<std::ptrdiff_t>(pos + len));
  }

  friend Word operator+(Word a, const Word& b) { return a += b; }
  friend bool operator==(const Word&, const Word&) = default;
  /// Lexicographic on letter codes.
  friend auto operator<=>(const Word& a, const Word& b) { return a.letters_ <=> b.letters_; }

 private:
  std::vector<Letter> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Letter l : w) {
      h ^= l.code() + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

/// Shorter words first, then lexicographic.
bool shortlex_less(const Word& a, const Word& b);

Word free_reduce(const Word& w);

/// The three-step deletion procedure for the free group, run literally:
/// delete an adjacent cancelling pair until none is left, then test emptiness.
bool free_wp(const Word& w);

Word invert(const Word& w);

/// w^n for any integer n (negative powers invert).
Word power(const Word& w, long long n);

/// The rotation starting at letter `shift`.
Word rotate(const Word& w, std::size_t shift);

bool is_freely_reduced(const Word& w);
bool is_cyclically_reduced(const Word& w);

struct CyclicReduction {
  Word core;
  Word conjugator;  // w = conjugator * core * conjugator^-1 in the free group
};

CyclicReduction cyclic_reduce(const Word& w);

/// Distinct rotations of a cyclically reduced word, in rotation order.
/// Throws std::invalid_argument if w is not cyclically reduced.
std::vector<Word> cyclic_permutations(const Word& w);

/// Conjugacy in the free group: the cyclic reductions are rotations of each other.
bool conjugate_free(const Word& u, const Word& v);

/// Exponent sum of each generator, indexed by generator.
std::vector<long long> exponent_sums(const Word& w, std::size_t num_generators);

/// An ordered set of generator names.
class Alphabet {
 public:
  Alphabet() = default;
  /// Throws std::invalid_argument on an invalid or duplicate name.
  explicit Alphabet(std::vector<std::string> names);
  Alphabet(std::initializer_list<std::string> names)
      : Alphabet(std::vector<std::string>(names)) {}

  static bool valid_name(std::string_view name);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t generator) const { return names_.at(generator); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;

  Letter letter(std::string_view name, bool inverse = false) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Parses whitespace-separated letters: `name`, `name^-1`, `name^k`,
/// parenthesised groups `(u)^k`, and `1` for the identity.
Word parse_word(std::string_view text, const Alphabet& alphabet);

/// Runs of a letter as `name^k` (inverses `name^-k`), separated by single
/// spaces; the empty word prints as "".
std::string format_word(const Word& w, const Alphabet& alphabet);

/// Throws DomainError if a letter's generator is outside [0, num_generators).
void check_alphabet(const Word& w, std::size_t num_generators, std::string_view context);

}  // namespace cgt
