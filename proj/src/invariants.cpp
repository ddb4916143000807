#include "ncsing/invariants.hpp"

#include "ncsing/errors.hpp"

namespace ncsing {

Analysis analyze(const Potential& f, int cap) {
  if (cap <= 0) throw DomainError("truncation cap must be positive");

  Potential fc = f.cap() == cap ? f : Potential(with_cap(f.jet(), cap));
  JacobiGenerators generators = jacobi_generators(fc);

  std::vector<NcJet> gens = generators.nonzero();
  // an all-zero derivative set means the zero ideal, whose standard basis
  // is the (exact) empty system
  RewriteSystem system = gens.empty()
                             ? RewriteSystem{fc.alphabet(), cap, {}, Certificate::Exact}
                             : complete(gens, cap);

  Staircase stairs = staircase(system);
  Analysis out{std::move(generators), std::move(system), std::move(stairs), InvariantReport{}};

  InvariantReport& rep = out.report;
  rep.cap = cap;
  rep.certificate = out.system.certificate;
  rep.coranks.assign(out.stairs.counts.begin() + 1, out.stairs.counts.end());

  Growth growth = analyze_growth(out.stairs);

  // Every rule with lead degree <= cap is discovered even when tails get
  // truncated: truncation only drops words beyond the cap, reductions are
  // degree-exact below it, and an undiscovered lead would have to be a
  // standard word of the discovered system. So when the discovered
  // staircase is finite and fits under the cap there is no room for
  // further leads, and the finite verdict is sound without an exact
  // certificate.
  bool finite_sound = growth.kind == GrowthKind::Finite && growth.longest_word <= cap;

  if (rep.certificate != Certificate::Exact && !finite_sound) {
    rep.dimension.kind = DimensionKind::Inconclusive;
    rep.jdim = JdimVerdict::Inconclusive;
    return out;
  }
  switch (growth.kind) {
    case GrowthKind::Finite:
      rep.dimension.kind = DimensionKind::Finite;
      rep.dimension.value = growth.total;
      rep.jdim = JdimVerdict::Zero;
      break;
    case GrowthKind::Polynomial:
      rep.dimension.kind = DimensionKind::Infinite;
      rep.dimension.growth = GrowthKind::Polynomial;
      rep.dimension.growth_degree = growth.degree;
      // cumulative dimension grows like m^(degree+1)
      rep.jdim = growth.degree == 0 ? JdimVerdict::One : JdimVerdict::Inconclusive;
      break;
    case GrowthKind::Exponential:
      rep.dimension.kind = DimensionKind::Infinite;
      rep.dimension.growth = GrowthKind::Exponential;
      rep.jdim = JdimVerdict::Inconclusive;
      break;
  }
  return out;
}

std::vector<Count> coranks(const Potential& f, int cap) {
  return analyze(f, cap).report.coranks;
}

DimensionVerdict dimension(const Potential& f, int cap) {
  return analyze(f, cap).report.dimension;
}

JdimVerdict jdim(const Potential& f, int cap) { return analyze(f, cap).report.jdim; }

}  // namespace ncsing
