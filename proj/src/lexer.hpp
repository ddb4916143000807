#ifndef NCSING_SRC_LEXER_HPP
#define NCSING_SRC_LEXER_HPP

#include <cctype>
#include <string>

#include "ncsing/errors.hpp"

namespace ncsing::detail {

enum class Tok { Number, Name, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

/// Tokenizer for the expression grammar; shared by the noncommutative and
/// commutative parsers.
class Lexer {
public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

private:
  void advance() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
    std::size_t start = i_;
    if (i_ >= text_.size()) {
      current_ = {Tok::End, "", start};
      return;
    }
    char c = text_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
      current_ = {Tok::Number, text_.substr(i_, j - i_), start};
      i_ = j;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_'))
        ++j;
      current_ = {Tok::Name, text_.substr(i_, j - i_), start};
      i_ = j;
      return;
    }
    ++i_;
    switch (c) {
      case '+': current_ = {Tok::Plus, "+", start}; return;
      case '-': current_ = {Tok::Minus, "-", start}; return;
      case '*': current_ = {Tok::Star, "*", start}; return;
      case '^': current_ = {Tok::Caret, "^", start}; return;
      case '/': current_ = {Tok::Slash, "/", start}; return;
      case '(': current_ = {Tok::LParen, "(", start}; return;
      case ')': current_ = {Tok::RParen, ")", start}; return;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
  }

  const std::string& text_;
  std::size_t i_ = 0;
  Token current_{Tok::End, "", 0};
};

inline unsigned checked_exponent(const Token& t) {
  unsigned long v = 0;
  try {
    v = std::stoul(t.text);
  } catch (const std::exception&) {
    throw ParseError("exponent out of range", t.pos);
  }
  if (v > 10000) throw ParseError("exponent out of range", t.pos);
  return static_cast<unsigned>(v);
}

}  // namespace ncsing::detail

#endif
