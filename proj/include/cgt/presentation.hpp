#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cgt/word.hpp"

namespace cgt {

/// A finite presentation <S | R>. Relators are freely reduced on construction;
/// relators that reduce to the empty word are kept so that relator indices
/// match the input.
class Presentation {
 public:
  Presentation() = default;
  /// Throws DomainError if a relator uses a generator outside the alphabet.
  Presentation(Alphabet generators, std::vector<Word> relators);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t num_generators() const { return alphabet_.size(); }
  const std::vector<Word>& relators() const { return relators_; }

  /// Longest relator length (0 for a free presentation).
  std::size_t max_relator_length() const;

  Presentation with_relators(std::vector<Word> extra) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  Alphabet alphabet_;
  std::vector<Word> relators_;
};

/// Grammar: '<' gen (',' gen)* '|' item (',' item)* '>', where an item is a
/// word or a chain `w0 = w1 = ...` (stored as w0 w1^-1, w1 w2^-1, ...).
/// `#` starts a comment running to the end of the line.
Presentation parse_presentation(std::string_view text);

/// Inverse of parse_presentation; empty relators print as `1`.
std::string format_presentation(const Presentation& p);

/// The set R*: every rotation of every cyclically reduced relator and of its
/// inverse. Sorted by (length, letters) and deduplicated.
class RelatorClosure {
 public:
  explicit RelatorClosure(const Presentation& p);

  const std::vector<Word>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  bool contains(const Word& w) const;

 private:
  std::vector<Word> words_;
};

RelatorClosure relator_closure(const Presentation& p);

/// u -> v with u v^-1 in R* and |v| < |u|.
struct DehnRule {
  Word lhs;
  Word rhs;
  friend bool operator==(const DehnRule&, const DehnRule&) = default;
};

/// All rules u -> v with r = u v^-1, r in R*, |u| > |r|/2. Ordered by
/// decreasing |lhs|, then lhs, then rhs.
std::vector<DehnRule> dehn_rules(const Presentation& p);

struct DehnStep {
  enum class Kind { FreeCancellation, Rule };
  Kind kind;
  std::size_t position;  // index of the first replaced letter in the current word
  std::size_t rule = 0;  // index into the rule list when kind == Rule
};

struct DehnReductionTrace {
  std::vector<DehnStep> steps;
  Word final;
};

/// Greedy rewriting with a fixed rule list. Each round cancels free pairs,
/// then replaces the leftmost occurrence of the longest applicable left-hand
/// side (first matching rule in list order wins ties).
class DehnRewriter {
 public:
  explicit DehnRewriter(std::vector<DehnRule> rules);
  explicit DehnRewriter(const Presentation& p) : DehnRewriter(dehn_rules(p)) {}

  const std::vector<DehnRule>& rules() const { return rules_; }
  DehnReductionTrace reduce(const Word& w) const;
  /// Same result as reduce(w).final without recording the trace.
  Word reduce_word(const Word& w) const;

 private:
  struct Match {
    std::size_t position;
    std::size_t rule;
  };
  bool find_match(const std::vector<Letter>& w, Match& m) const;

  std::vector<DehnRule> rules_;
  std::vector<std::size_t> lengths_;  // distinct lhs lengths, decreasing
  std::unordered_map<Word, std::size_t, WordHash> first_rule_;
};

DehnReductionTrace dehn_reduce(const Word& w, std::span<const DehnRule> rules);

/// Applies a recorded trace step by step; throws DomainError if a step does
/// not match the word it is applied to.
Word replay_trace(const Word& input, std::span<const DehnStep> steps, std::span<const DehnRule> rules);

enum class DehnVerdict { Trivial, NonTrivialAssumingDehn };

/// Trivial is always sound. NonTrivialAssumingDehn is only a proof of
/// nontriviality when p is a Dehn presentation.
DehnVerdict wp_dehn(const Word& w, const Presentation& p);

}  // namespace cgt
