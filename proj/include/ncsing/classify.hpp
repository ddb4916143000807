#ifndef NCSING_CLASSIFY_HPP
#define NCSING_CLASSIFY_HPP

#include <string>

#include "ncsing/invariants.hpp"

namespace ncsing {

enum class CoarseType { A, D, E6, EOther, Unclassified };

enum class Situation { Flopping, DivisorToCurve, Unknown };

/// The eight normal-form families matched by fingerprint. INF (= -1) marks
/// an infinite parameter, e.g. Family::D with n = INF, m = 2 is D_{inf,2}.
enum class Family { A, D, E6 };

constexpr int kInf = -1;

struct FamilyTag {
  Family family;
  int n = kInf;  // A_n / D_{n,.} / E_{6,n} discrete parameter
  int m = kInf;  // D only

  bool operator==(const FamilyTag&) const = default;
};

/// "A_5", "D_{2,inf}", "E_{6,4}", "A_inf", "D_{inf,inf}", "E_{6,inf}", ...
std::string tag_name(const FamilyTag& tag);

/// The normal form of a family over a 2-letter alphabet:
///   A_n       x^2 + y^n                 n >= 2
///   D_{n,m}   x*y^2 + x^(2m-1) + x^(2n) n, m >= 2
///   D_{n,inf} x*y^2 + x^(2n)            n >= 2
///   E_{6,n}   x^3 + x*y^3 + y^n         n >= 4   (p(y) = y^n)
///   A_inf     x^2
///   D_{inf,m} x*y^2 + x^(2m-1)          m >= 2
///   D_{inf,inf} x*y^2
///   E_{6,inf} x^3 + x*y^3
/// Throws DomainError for parameters outside the table constraints.
Potential family_potential(const FamilyTag& tag, const Alphabet& alphabet, int cap);

/// Invariant report of the family normal form at the given cap; memoized.
InvariantReport family_fingerprint(const FamilyTag& tag, int cap);

struct TypeClass {
  CoarseType coarse = CoarseType::Unclassified;
  std::vector<FamilyTag> candidates;  // all fingerprint matches, in table order
  Situation situation = Situation::Unknown;

  bool has_candidate(const FamilyTag& tag) const;
};

/// Coarse classification from (Crk_1..Crk_4) against the corank table
///   A:  <=1 <=1 <=1 <=1
///   D:    2   2   2 <=2
///   E6:   2   3   4   4
/// plus candidate families whose fingerprints match the full report.
/// Patterns with Crk = 2, Crk_2 = 3 outside the E6 row are reported EOther
/// (families defined by more than numerical coranks); anything else is
/// Unclassified. Requires exactly 2 variables and cap >= 4.
TypeClass classify(const Potential& f, int cap);

/// classify + the underlying report in one pass.
struct Classification {
  Analysis analysis;
  TypeClass type;
};
Classification classify_full(const Potential& f, int cap);

}  // namespace ncsing

#endif
