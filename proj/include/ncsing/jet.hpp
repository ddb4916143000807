#ifndef NCSING_JET_HPP
#define NCSING_JET_HPP

#include <gmpxx.h>

#include <map>
#include <utility>

#include "ncsing/alphabet.hpp"
#include "ncsing/word.hpp"

namespace ncsing {

/// Exact rational coefficient.
using Q = mpq_class;

/// A truncated noncommutative power series: finite-support coefficient
/// function Word -> Q together with a truncation degree `cap`. Every
/// operation is performed modulo words of degree > cap, and no zero
/// coefficient is ever stored.
///
/// The coefficient map is ordered by the local order (degree, then lex), so
/// iteration visits the most leading term first.
class NcJet {
public:
  NcJet(Alphabet alphabet, int cap);

  static NcJet constant(const Alphabet& alphabet, int cap, const Q& value);
  static NcJet variable(const Alphabet& alphabet, int cap, Letter v);
  static NcJet monomial(const Alphabet& alphabet, int cap, const Word& w, const Q& coeff);

  const Alphabet& alphabet() const { return alphabet_; }
  int cap() const { return cap_; }
  const std::map<Word, Q, WordLess>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  Q coeff(const Word& w) const;

  /// Accumulates c onto the coefficient of w; silently drops words beyond
  /// the cap and erases coefficients that cancel to zero.
  void add_term(const Word& w, const Q& c);

  /// The order-minimal support word and its coefficient. Throws on zero.
  std::pair<Word, Q> leading_term() const;

  /// Degree of the leading term; cap()+1 for the zero jet.
  int order() const;

  /// Largest support degree; -1 for the zero jet.
  int top_degree() const;

  NcJet& operator+=(const NcJet& rhs);
  NcJet& operator-=(const NcJet& rhs);
  NcJet operator-() const;
  NcJet& scale(const Q& c);

  bool operator==(const NcJet& rhs) const;
  bool operator!=(const NcJet& rhs) const { return !(*this == rhs); }

private:
  Alphabet alphabet_;
  int cap_;
  std::map<Word, Q, WordLess> terms_;

  void check_compatible(const NcJet& other) const;
  friend NcJet mul(const NcJet&, const NcJet&);
};

NcJet operator+(NcJet lhs, const NcJet& rhs);
NcJet operator-(NcJet lhs, const NcJet& rhs);
NcJet operator*(const Q& c, NcJet jet);

/// Bilinear concatenation product, truncated at the cap. Throws on
/// cap/alphabet mismatch.
NcJet mul(const NcJet& a, const NcJet& b);
NcJet operator*(const NcJet& a, const NcJet& b);

/// exponent-fold concatenation power (exponent 0 gives the constant 1).
NcJet pow(const NcJet& a, unsigned exponent);

/// Copies a jet to a different cap, dropping now-out-of-range terms.
NcJet with_cap(const NcJet& a, int cap);

/// The local order on words, carried together with its alphabet.
struct LocalOrder {
  Alphabet alphabet;

  Ordering compare(const Word& a, const Word& b) const { return compare_words(a, b); }
  bool precedes(const Word& a, const Word& b) const { return word_precedes(a, b); }
};

/// Order-minimal support word of f with its coefficient (spec: leading term
/// is the term of least degree, lex tie-break). Throws on zero or on an
/// order over a different alphabet.
std::pair<Word, Q> leading_term(const NcJet& f, const LocalOrder& order);

}  // namespace ncsing

#endif
