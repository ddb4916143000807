#ifndef NCSING_INVARIANTS_HPP
#define NCSING_INVARIANTS_HPP

#include "ncsing/calculus.hpp"
#include "ncsing/staircase.hpp"

namespace ncsing {

enum class DimensionKind { Finite, Infinite, Inconclusive };

struct DimensionVerdict {
  DimensionKind kind = DimensionKind::Inconclusive;
  Count value = 0;          // Finite: the dimension (sum of all c_m, c_0 included)
  GrowthKind growth = GrowthKind::Finite;  // Infinite: Polynomial or Exponential
  int growth_degree = 0;    // Infinite+Polynomial: c_m = Theta(m^growth_degree)

  bool operator==(const DimensionVerdict&) const = default;
};

enum class JdimVerdict { Zero, One, Inconclusive };

struct InvariantReport {
  std::vector<Count> coranks;  // c_1..c_cap
  DimensionVerdict dimension;
  JdimVerdict jdim = JdimVerdict::Inconclusive;
  Certificate certificate = Certificate::TruncatedAtCap;
  int cap = 0;

  bool operator==(const InvariantReport&) const = default;
};

/// The full pipeline state for one potential: generators, completed system,
/// staircase, and the derived report.
struct Analysis {
  JacobiGenerators generators;
  RewriteSystem system;
  Staircase stairs;
  InvariantReport report;
};

/// generators -> complete -> staircase -> verdicts, all at the given cap.
/// Zero derivatives are filtered out (all-zero derivative sets give the
/// empty rewrite system, i.e. the zero ideal, which is exact).
Analysis analyze(const Potential& f, int cap);

std::vector<Count> coranks(const Potential& f, int cap);
DimensionVerdict dimension(const Potential& f, int cap);
JdimVerdict jdim(const Potential& f, int cap);

}  // namespace ncsing

#endif
