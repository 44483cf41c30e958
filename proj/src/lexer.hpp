#pragma once

// Tokenizer shared by the word, presentation, normal-form and PD-code parsers.

#include <cstddef>
#include <string>
#include <string_view>

#include "cgt/errors.hpp"
#include "cgt/word.hpp"

namespace cgt::detail {

enum class TokenKind { Identifier, Integer, Symbol, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;

  bool is_symbol(char c) const { return kind == TokenKind::Symbol && text.size() == 1 && text[0] == c; }
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

  bool accept(char symbol) {
    if (current_.is_symbol(symbol)) {
      advance();
      return true;
    }
    return false;
  }

  Token expect(char symbol) {
    if (!current_.is_symbol(symbol)) fail(std::string("expected '") + symbol + "'");
    return next();
  }

  long long expect_integer() {
    bool negative = accept('-');
    if (!negative) accept('+');
    if (current_.kind != TokenKind::Integer) fail("expected an integer");
    Token t = next();
    long long v = 0;
    try {
      v = std::stoll(t.text);
    } catch (const std::out_of_range&) {
      throw ParseError("integer out of range", t.line, t.column);
    }
    return negative ? -v : v;
  }

  [[noreturn]] void fail(const std::string& message) const {
    std::string got = current_.kind == TokenKind::End ? std::string("end of input") : "'" + current_.text + "'";
    throw ParseError(message + ", got " + got, current_.line, current_.column);
  }

 private:
  void advance() {
    skip_space();
    current_ = Token{};
    current_.line = line_;
    current_.column = column_;
    if (pos_ >= text_.size()) {
      current_.kind = TokenKind::End;
      return;
    }
    char c = text_[pos_];
    auto is_alpha = [](char ch) { return (ch >= 'A' && ch <= 'Z') || (ch >= 'a' && ch <= 'z'); };
    auto is_digit = [](char ch) { return ch >= '0' && ch <= '9'; };
    if (is_alpha(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (is_alpha(text_[pos_]) || is_digit(text_[pos_]) || text_[pos_] == '_')) bump();
      current_.kind = TokenKind::Identifier;
      current_.text = std::string(text_.substr(start, pos_ - start));
    } else if (is_digit(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && is_digit(text_[pos_])) bump();
      current_.kind = TokenKind::Integer;
      current_.text = std::string(text_.substr(start, pos_ - start));
    } else if (static_cast<unsigned char>(c) == 0xC2 && pos_ + 1 < text_.size() &&
               static_cast<unsigned char>(text_[pos_ + 1]) == 0xB7) {
      // U+00B7 middle dot, used as a product sign in printed normal forms.
      bump();
      bump();
      current_.kind = TokenKind::Symbol;
      current_.text = "*";
    } else {
      bump();
      current_.kind = TokenKind::Symbol;
      current_.text = std::string(1, c);
    }
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') bump();
      } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  Token current_;
};

/// Parses a word at the lexer's position; stops at the first token that
/// cannot start a factor. Generators are resolved against `alphabet`.
Word parse_word_tokens(Lexer& lex, const Alphabet& alphabet);

}  // namespace cgt::detail
