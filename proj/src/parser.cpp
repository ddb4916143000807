#include "ncsing/parser.hpp"

#include <sstream>

#include "lexer.hpp"
#include "ncsing/errors.hpp"

namespace ncsing {

namespace {

using detail::Lexer;
using detail::Tok;
using detail::Token;

class Parser {
public:
  Parser(const std::string& text, const Alphabet& alphabet, int cap)
      : lexer_(text), alphabet_(alphabet), cap_(cap) {}

  NcJet parse() {
    NcJet result = parse_expr();
    const Token& t = lexer_.peek();
    if (t.kind != Tok::End) throw ParseError("trailing input", t.pos);
    return result;
  }

private:
  NcJet parse_expr() {
    bool negate = false;
    if (lexer_.peek().kind == Tok::Plus) {
      lexer_.take();
    } else if (lexer_.peek().kind == Tok::Minus) {
      lexer_.take();
      negate = true;
    }
    NcJet acc = parse_term();
    if (negate) acc.scale(-1);
    while (lexer_.peek().kind == Tok::Plus || lexer_.peek().kind == Tok::Minus) {
      bool minus = lexer_.take().kind == Tok::Minus;
      NcJet term = parse_term();
      if (minus) acc -= term;
      else acc += term;
    }
    return acc;
  }

  NcJet parse_term() {
    NcJet acc = parse_factor();
    while (lexer_.peek().kind == Tok::Star) {
      lexer_.take();
      acc = mul(acc, parse_factor());
    }
    return acc;
  }

  NcJet parse_factor() {
    NcJet base = parse_base();
    if (lexer_.peek().kind == Tok::Caret) {
      lexer_.take();
      Token e = lexer_.peek();
      if (e.kind != Tok::Number) throw ParseError("expected natural exponent after '^'", e.pos);
      lexer_.take();
      return pow(base, detail::checked_exponent(e));
    }
    return base;
  }

  NcJet parse_base() {
    Token t = lexer_.peek();
    switch (t.kind) {
      case Tok::Number: {
        lexer_.take();
        Q value(t.text);
        if (lexer_.peek().kind == Tok::Slash) {
          lexer_.take();
          Token d = lexer_.peek();
          if (d.kind != Tok::Number) throw ParseError("expected denominator after '/'", d.pos);
          lexer_.take();
          Q den(d.text);
          if (sgn(den) == 0) throw ParseError("zero denominator", d.pos);
          value /= den;
        }
        value.canonicalize();
        return NcJet::constant(alphabet_, cap_, value);
      }
      case Tok::Name: {
        lexer_.take();
        auto letter = alphabet_.find(t.text);
        if (!letter) throw ParseError("unknown variable '" + t.text + "'", t.pos);
        return NcJet::variable(alphabet_, cap_, *letter);
      }
      case Tok::LParen: {
        lexer_.take();
        NcJet inner = parse_expr();
        Token close = lexer_.peek();
        if (close.kind != Tok::RParen) throw ParseError("expected ')'", close.pos);
        lexer_.take();
        return inner;
      }
      case Tok::End:
        throw ParseError("unexpected end of input", t.pos);
      default:
        throw ParseError("expected number, variable or '('", t.pos);
    }
  }

  Lexer lexer_;
  const Alphabet& alphabet_;
  int cap_;
};

}  // namespace

NcJet parse_poly(const std::string& text, const Alphabet& alphabet, int cap) {
  if (cap <= 0) throw DomainError("truncation cap must be positive");
  return Parser(text, alphabet, cap).parse();
}

std::string format_rational(const Q& c) { return c.get_str(); }

std::string format_word(const Alphabet& alphabet, const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream out;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!first) out << '*';
    out << alphabet.name(w[i]);
    if (j - i > 1) out << '^' << (j - i);
    first = false;
    i = j;
  }
  return out.str();
}

std::string format_term(const Alphabet& alphabet, const Word& w, const Q& c) {
  if (w.empty()) return format_rational(c);
  if (c == 1) return format_word(alphabet, w);
  if (c == -1) return "-" + format_word(alphabet, w);
  return format_rational(c) + "*" + format_word(alphabet, w);
}

std::string format(const NcJet& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : f.terms()) {
    if (first) {
      out << format_term(f.alphabet(), w, c);
      first = false;
      continue;
    }
    if (sgn(c) < 0) out << " - " << format_term(f.alphabet(), w, -c);
    else out << " + " << format_term(f.alphabet(), w, c);
  }
  return out.str();
}

}  // namespace ncsing
