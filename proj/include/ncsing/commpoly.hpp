#ifndef NCSING_COMMPOLY_HPP
#define NCSING_COMMPOLY_HPP

#include <map>
#include <vector>

#include "ncsing/jet.hpp"

namespace ncsing {

/// A commutative polynomial with exact rational coefficients: finite-support
/// map from exponent vectors to Q. Canonical storage (sorted keys, no zero
/// coefficients) makes equality structural. No truncation.
class CommPoly {
public:
  using Exponents = std::vector<unsigned>;

  explicit CommPoly(Alphabet alphabet);
  static CommPoly constant(const Alphabet& alphabet, const Q& value);
  static CommPoly variable(const Alphabet& alphabet, Letter v);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::map<Exponents, Q>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, const Q& c);

  CommPoly& operator+=(const CommPoly& rhs);
  CommPoly& operator-=(const CommPoly& rhs);
  bool operator==(const CommPoly& rhs) const;
  bool operator!=(const CommPoly& rhs) const { return !(*this == rhs); }

private:
  Alphabet alphabet_;
  std::map<Exponents, Q> terms_;

  void check_compatible(const CommPoly& other) const;
  friend CommPoly operator*(const CommPoly& a, const CommPoly& b);
};

CommPoly operator+(CommPoly lhs, const CommPoly& rhs);
CommPoly operator-(CommPoly lhs, const CommPoly& rhs);
CommPoly operator*(const CommPoly& a, const CommPoly& b);
CommPoly pow(const CommPoly& a, unsigned exponent);

/// Same grammar as parse_poly, with commutative multiplication.
CommPoly parse_comm(const std::string& text, const Alphabet& variables);

/// Drops every term with a positive exponent of v (substitutes v = 0).
CommPoly substitute_zero(const CommPoly& p, Letter v);
CommPoly substitute_zero(const CommPoly& p, const std::string& variable);

/// Terms sorted by (total degree, exponents); parseable by parse_comm.
std::string format(const CommPoly& p);

}  // namespace ncsing

#endif
