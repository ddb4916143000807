#include "ncsing/commpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lexer.hpp"
#include "ncsing/errors.hpp"
#include "ncsing/parser.hpp"

namespace ncsing {

CommPoly::CommPoly(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

CommPoly CommPoly::constant(const Alphabet& alphabet, const Q& value) {
  CommPoly p(alphabet);
  p.add_term(Exponents(alphabet.size(), 0), value);
  return p;
}

CommPoly CommPoly::variable(const Alphabet& alphabet, Letter v) {
  if (v >= alphabet.size()) throw DomainError("letter index out of range");
  CommPoly p(alphabet);
  Exponents e(alphabet.size(), 0);
  e[v] = 1;
  p.add_term(e, 1);
  return p;
}

void CommPoly::add_term(const Exponents& e, const Q& c) {
  if (e.size() != alphabet_.size()) throw DomainError("exponent vector length mismatch");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void CommPoly::check_compatible(const CommPoly& other) const {
  if (alphabet_ != other.alphabet_) throw DomainError("alphabet mismatch");
}

CommPoly& CommPoly::operator+=(const CommPoly& rhs) {
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& rhs) {
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

bool CommPoly::operator==(const CommPoly& rhs) const {
  return alphabet_ == rhs.alphabet_ && terms_ == rhs.terms_;
}

CommPoly operator+(CommPoly lhs, const CommPoly& rhs) {
  lhs += rhs;
  return lhs;
}

CommPoly operator-(CommPoly lhs, const CommPoly& rhs) {
  lhs -= rhs;
  return lhs;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
  a.check_compatible(b);
  CommPoly out(a.alphabet_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      CommPoly::Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

CommPoly pow(const CommPoly& a, unsigned exponent) {
  CommPoly out = CommPoly::constant(a.alphabet(), 1);
  for (unsigned i = 0; i < exponent; ++i) out = out * a;
  return out;
}

namespace {

using detail::Lexer;
using detail::Tok;
using detail::Token;

class CommParser {
public:
  CommParser(const std::string& text, const Alphabet& alphabet)
      : lexer_(text), alphabet_(alphabet) {}

  CommPoly parse() {
    CommPoly result = parse_expr();
    const Token& t = lexer_.peek();
    if (t.kind != Tok::End) throw ParseError("trailing input", t.pos);
    return result;
  }

private:
  CommPoly parse_expr() {
    bool negate = false;
    if (lexer_.peek().kind == Tok::Plus) {
      lexer_.take();
    } else if (lexer_.peek().kind == Tok::Minus) {
      lexer_.take();
      negate = true;
    }
    CommPoly acc = parse_term();
    if (negate) acc = CommPoly::constant(alphabet_, -1) * acc;
    while (lexer_.peek().kind == Tok::Plus || lexer_.peek().kind == Tok::Minus) {
      bool minus = lexer_.take().kind == Tok::Minus;
      CommPoly term = parse_term();
      if (minus) acc -= term;
      else acc += term;
    }
    return acc;
  }

  CommPoly parse_term() {
    CommPoly acc = parse_factor();
    while (lexer_.peek().kind == Tok::Star) {
      lexer_.take();
      acc = acc * parse_factor();
    }
    return acc;
  }

  CommPoly parse_factor() {
    CommPoly base = parse_base();
    if (lexer_.peek().kind == Tok::Caret) {
      lexer_.take();
      Token e = lexer_.peek();
      if (e.kind != Tok::Number) throw ParseError("expected natural exponent after '^'", e.pos);
      lexer_.take();
      return pow(base, detail::checked_exponent(e));
    }
    return base;
  }

  CommPoly parse_base() {
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
        return CommPoly::constant(alphabet_, value);
      }
      case Tok::Name: {
        lexer_.take();
        auto letter = alphabet_.find(t.text);
        if (!letter) throw ParseError("unknown variable '" + t.text + "'", t.pos);
        return CommPoly::variable(alphabet_, *letter);
      }
      case Tok::LParen: {
        lexer_.take();
        CommPoly inner = parse_expr();
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
};

unsigned total_degree(const CommPoly::Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

std::string format_exponents(const Alphabet& alphabet, const CommPoly::Exponents& e) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!first) out << '*';
    out << alphabet.name(static_cast<Letter>(i));
    if (e[i] > 1) out << '^' << e[i];
    first = false;
  }
  if (first) return "1";
  return out.str();
}

std::string format_comm_term(const Alphabet& alphabet, const CommPoly::Exponents& e, const Q& c) {
  if (total_degree(e) == 0) return format_rational(c);
  if (c == 1) return format_exponents(alphabet, e);
  if (c == -1) return "-" + format_exponents(alphabet, e);
  return format_rational(c) + "*" + format_exponents(alphabet, e);
}

}  // namespace

CommPoly parse_comm(const std::string& text, const Alphabet& variables) {
  return CommParser(text, variables).parse();
}

CommPoly substitute_zero(const CommPoly& p, Letter v) {
  if (v >= p.alphabet().size()) throw DomainError("unknown variable");
  CommPoly out(p.alphabet());
  for (const auto& [e, c] : p.terms()) {
    if (e[v] == 0) out.add_term(e, c);
  }
  return out;
}

CommPoly substitute_zero(const CommPoly& p, const std::string& variable) {
  auto v = p.alphabet().find(variable);
  if (!v) throw DomainError("unknown variable '" + variable + "'");
  return substitute_zero(p, *v);
}

std::string format(const CommPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<CommPoly::Exponents, Q>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    unsigned da = total_degree(a.first), db = total_degree(b.first);
    if (da != db) return da < db;
    return a.first < b.first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    if (first) {
      out << format_comm_term(p.alphabet(), e, c);
      first = false;
      continue;
    }
    if (sgn(c) < 0) out << " - " << format_comm_term(p.alphabet(), e, -c);
    else out << " + " << format_comm_term(p.alphabet(), e, c);
  }
  return out.str();
}

}  // namespace ncsing
