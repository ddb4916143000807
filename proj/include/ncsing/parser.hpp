#ifndef NCSING_PARSER_HPP
#define NCSING_PARSER_HPP

#include <string>

#include "ncsing/jet.hpp"

namespace ncsing {

/// Parses the expression grammar
///
///   expr     := ('+'|'-')? term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := base ('^' natural)?
///   base     := rational | name | '(' expr ')'
///   rational := integer ('/' positive-integer)?
///
/// into a jet truncated at `cap`. '*' is noncommutative concatenation and is
/// mandatory between factors (no implicit juxtaposition). Whitespace is
/// insignificant. Throws ParseError (with position) or DomainError on a bad
/// cap / unknown variable.
NcJet parse_poly(const std::string& text, const Alphabet& alphabet, int cap);

/// Formats a jet so that parse_poly(format(f), f.alphabet(), f.cap()) == f.
/// Terms are emitted leading-first; the zero jet prints as "0".
std::string format(const NcJet& f);

/// One word in grammar form, e.g. "x^2*y"; the empty word prints as "1".
std::string format_word(const Alphabet& alphabet, const Word& w);

/// One term with its coefficient, e.g. "4*x^3", "-1/2*y", "x*y".
std::string format_term(const Alphabet& alphabet, const Word& w, const Q& c);

std::string format_rational(const Q& c);

}  // namespace ncsing

#endif
