#include "cgt/presentation.hpp"

#include <algorithm>
#include <set>

#include "cgt/errors.hpp"
#include "lexer.hpp"

namespace cgt {

Presentation::Presentation(Alphabet generators, std::vector<Word> relators) : alphabet_(std::move(generators)) {
  relators_.reserve(relators.size());
  for (const Word& r : relators) {
    check_alphabet(r, alphabet_.size(), "relator");
    relators_.push_back(free_reduce(r));
  }
}

std::size_t Presentation::max_relator_length() const {
  std::size_t m = 0;
  for (const Word& r : relators_) m = std::max(m, r.size());
  return m;
}

Presentation Presentation::with_relators(std::vector<Word> extra) const {
  std::vector<Word> all = relators_;
  all.insert(all.end(), extra.begin(), extra.end());
  return Presentation(alphabet_, std::move(all));
}

Presentation parse_presentation(std::string_view text) {
  detail::Lexer lex(text);
  lex.expect('<');
  std::vector<std::string> names;
  std::set<std::string> seen;
  if (!lex.peek().is_symbol('|')) {
    do {
      detail::Token t = lex.peek();
      if (t.kind != detail::TokenKind::Identifier) lex.fail("expected a generator name");
      lex.next();
      if (!seen.insert(t.text).second) throw ParseError("duplicate generator '" + t.text + "'", t.line, t.column);
      names.push_back(t.text);
    } while (lex.accept(','));
  }
  lex.expect('|');
  Alphabet alphabet(names);

  std::vector<Word> relators;
  if (!lex.peek().is_symbol('>')) {
    do {
      detail::Token start = lex.peek();
      Word lhs = detail::parse_word_tokens(lex, alphabet);
      if (lex.peek().is_symbol('=')) {
        while (lex.accept('=')) {
          Word rhs = detail::parse_word_tokens(lex, alphabet);
          relators.push_back(lhs + invert(rhs));
          lhs = std::move(rhs);
        }
      } else {
        // An item must consist of something; `1` counts as something.
        if (lhs.empty() && !(start.kind == detail::TokenKind::Integer || start.is_symbol('(')))
          lex.fail("expected a relator");
        relators.push_back(std::move(lhs));
      }
    } while (lex.accept(','));
  }
  lex.expect('>');
  if (lex.peek().kind != detail::TokenKind::End) lex.fail("trailing input after presentation");
  return Presentation(std::move(alphabet), std::move(relators));
}

std::string format_presentation(const Presentation& p) {
  std::string out = "<";
  const auto& names = p.alphabet().names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    out += i ? ", " : " ";
    out += names[i];
  }
  out += " |";
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    out += i ? ", " : " ";
    const Word& r = p.relators()[i];
    out += r.empty() ? "1" : format_word(r, p.alphabet());
  }
  out += " >";
  return out;
}

// ---------------------------------------------------------------------------

RelatorClosure::RelatorClosure(const Presentation& p) {
  std::set<Word> acc;
  for (const Word& r : p.relators()) {
    Word core = cyclic_reduce(r).core;
    if (core.empty()) continue;
    for (Word& w : cyclic_permutations(core)) acc.insert(std::move(w));
    for (Word& w : cyclic_permutations(invert(core))) acc.insert(std::move(w));
  }
  words_.assign(acc.begin(), acc.end());
  std::stable_sort(words_.begin(), words_.end(), shortlex_less);
}

bool RelatorClosure::contains(const Word& w) const {
  return std::binary_search(words_.begin(), words_.end(), w, shortlex_less);
}

RelatorClosure relator_closure(const Presentation& p) { return RelatorClosure(p); }

std::vector<DehnRule> dehn_rules(const Presentation& p) {
  std::set<std::pair<Word, Word>> acc;
  const RelatorClosure closure = relator_closure(p);
  for (const Word& r : closure.words()) {
    for (std::size_t len = r.size(); 2 * len > r.size(); --len) {
      Word lhs = r.subword(0, len);
      Word rhs = invert(r.subword(len, r.size() - len));
      acc.emplace(std::move(lhs), std::move(rhs));
    }
  }
  std::vector<DehnRule> rules;
  rules.reserve(acc.size());
  for (const auto& [lhs, rhs] : acc) rules.push_back({lhs, rhs});
  std::stable_sort(rules.begin(), rules.end(),
                   [](const DehnRule& a, const DehnRule& b) { return a.lhs.size() > b.lhs.size(); });
  return rules;
}

// ---------------------------------------------------------------------------

DehnRewriter::DehnRewriter(std::vector<DehnRule> rules) : rules_(std::move(rules)) {
  std::set<std::size_t, std::greater<>> lengths;
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    if (rules_[i].rhs.size() >= rules_[i].lhs.size())
      throw std::invalid_argument("Dehn rule does not shorten the word");
    lengths.insert(rules_[i].lhs.size());
    first_rule_.emplace(rules_[i].lhs, i);  // keeps the first rule for a repeated lhs
  }
  lengths_.assign(lengths.begin(), lengths.end());
}

bool DehnRewriter::find_match(const std::vector<Letter>& w, Match& m) const {
  for (std::size_t len : lengths_) {
    if (len > w.size()) continue;
    for (std::size_t pos = 0; pos + len <= w.size(); ++pos) {
      Word probe(w.begin() + static_cast<std::ptrdiff_t>(pos), w.begin() + static_cast<std::ptrdiff_t>(pos + len));
      auto it = first_rule_.find(probe);
      if (it != first_rule_.end()) {
        m = {pos, it->second};
        return true;
      }
    }
  }
  return false;
}

namespace {

// One stack pass over w. Each cancellation is recorded at its position in the
// word as it stands at that moment: the kept prefix is `out`, so the pair sits
// at out.size() - 1.
void cancel_free_pairs(std::vector<Letter>& w, std::vector<DehnStep>* steps) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == l.inverse()) {
      if (steps) steps->push_back({DehnStep::Kind::FreeCancellation, out.size() - 1});
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  w.swap(out);
}

}  // namespace

DehnReductionTrace DehnRewriter::reduce(const Word& input) const {
  DehnReductionTrace trace;
  std::vector<Letter> w(input.begin(), input.end());
  cancel_free_pairs(w, &trace.steps);
  Match m{};
  while (find_match(w, m)) {
    const DehnRule& rule = rules_[m.rule];
    auto first = w.begin() + static_cast<std::ptrdiff_t>(m.position);
    w.erase(first, first + static_cast<std::ptrdiff_t>(rule.lhs.size()));
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(m.position), rule.rhs.begin(), rule.rhs.end());
    trace.steps.push_back({DehnStep::Kind::Rule, m.position, m.rule});
    cancel_free_pairs(w, &trace.steps);
  }
  trace.final = Word(std::move(w));
  return trace;
}

Word DehnRewriter::reduce_word(const Word& input) const {
  std::vector<Letter> w(input.begin(), input.end());
  cancel_free_pairs(w, nullptr);
  Match m{};
  while (find_match(w, m)) {
    const DehnRule& rule = rules_[m.rule];
    auto first = w.begin() + static_cast<std::ptrdiff_t>(m.position);
    w.erase(first, first + static_cast<std::ptrdiff_t>(rule.lhs.size()));
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(m.position), rule.rhs.begin(), rule.rhs.end());
    cancel_free_pairs(w, nullptr);
  }
  return Word(std::move(w));
}

DehnReductionTrace dehn_reduce(const Word& w, std::span<const DehnRule> rules) {
  return DehnRewriter(std::vector<DehnRule>(rules.begin(), rules.end())).reduce(w);
}

Word replay_trace(const Word& input, std::span<const DehnStep> steps, std::span<const DehnRule> rules) {
  std::vector<Letter> w(input.begin(), input.end());
  for (const DehnStep& s : steps) {
    if (s.kind == DehnStep::Kind::FreeCancellation) {
      if (s.position + 1 >= w.size() || w[s.position] != w[s.position + 1].inverse())
        throw DomainError("replay: no cancelling pair at position " + std::to_string(s.position));
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(s.position),
              w.begin() + static_cast<std::ptrdiff_t>(s.position + 2));
    } else {
      if (s.rule >= rules.size()) throw DomainError("replay: rule index out of range");
      const DehnRule& rule = rules[s.rule];
      if (s.position + rule.lhs.size() > w.size() ||
          !std::equal(rule.lhs.begin(), rule.lhs.end(), w.begin() + static_cast<std::ptrdiff_t>(s.position)))
        throw DomainError("replay: rule lhs does not occur at position " + std::to_string(s.position));
      auto first = w.begin() + static_cast<std::ptrdiff_t>(s.position);
      w.erase(first, first + static_cast<std::ptrdiff_t>(rule.lhs.size()));
      w.insert(w.begin() + static_cast<std::ptrdiff_t>(s.position), rule.rhs.begin(), rule.rhs.end());
    }
  }
  return Word(std::move(w));
}

DehnVerdict wp_dehn(const Word& w, const Presentation& p) {
  check_alphabet(w, p.num_generators(), "wp_dehn");
  return DehnRewriter(p).reduce_word(w).empty() ? DehnVerdict::Trivial : DehnVerdict::NonTrivialAssumingDehn;
}

}  // namespace cgt
