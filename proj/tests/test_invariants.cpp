#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "ncsing/invariants.hpp"
#include "oracle.hpp"

using namespace ncsing;
using namespace ncsing::testing;

namespace {

std::vector<long> longs(const std::vector<Count>& v) {
  std::vector<long> out;
  for (const auto& c : v) out.push_back(c.get_si());
  return out;
}

}  // namespace

TEST_CASE("coranks of the paper examples") {
  CHECK(longs(coranks(potential("x^4 + x*y^2", 12), 12)) ==
        std::vector<long>{2, 2, 2, 1, 1, 0, 0, 0, 0, 0, 0, 0});
  // E6 row: starts (2, 3, ...)
  CHECK(longs(coranks(potential("x^3 + x*y^3", 10), 10)) ==
        std::vector<long>{2, 3, 4, 4, 4, 4, 4, 4, 4, 4});
  // oracle-frozen: generators {x, y^4} leave {1, y, y^2, y^3}
  CHECK(longs(coranks(potential("x^2 + y^5", 10), 10)) ==
        std::vector<long>{1, 1, 1, 0, 0, 0, 0, 0, 0, 0});
}

TEST_CASE("dimension verdicts") {
  DimensionVerdict nine = dimension(potential("x^4 + x*y^2", 12), 12);
  CHECK(nine.kind == DimensionKind::Finite);
  CHECK(nine.value == 9);

  // A_n sweep against the oracle's values n - 1
  for (int n = 2; n <= 12; ++n) {
    Potential f = potential("x^2 + y^" + std::to_string(n), 12);
    DimensionVerdict v = dimension(f, 12);
    CHECK(v.kind == DimensionKind::Finite);
    CHECK(v.value == n - 1);
  }

  DimensionVerdict line = dimension(potential("x^2", 10), 10);
  CHECK(line.kind == DimensionKind::Infinite);
  CHECK(line.growth == GrowthKind::Polynomial);
  CHECK(line.growth_degree == 0);
}

TEST_CASE("jdim dichotomy verdicts") {
  CHECK(jdim(potential("x*y^2", 10), 10) == JdimVerdict::One);
  CHECK(jdim(potential("x^2", 10), 10) == JdimVerdict::One);
  CHECK(jdim(potential("x^4 + x*y^2", 12), 12) == JdimVerdict::Zero);
  CHECK(jdim(potential("x^3 + x*y^3", 10), 10) == JdimVerdict::One);
}

TEST_CASE("zero Jacobi ideal (commutator potential) grows exponentially") {
  Analysis a = analyze(potential("x*y - y*x", 8), 8);
  CHECK(a.system.rules.empty());
  CHECK(a.report.certificate == Certificate::Exact);
  CHECK(longs(a.report.coranks) == std::vector<long>{2, 4, 8, 16, 32, 64, 128, 256});
  CHECK(a.report.dimension.kind == DimensionKind::Infinite);
  CHECK(a.report.dimension.growth == GrowthKind::Exponential);
  CHECK(a.report.jdim == JdimVerdict::Inconclusive);
}

TEST_CASE("series-tailed ideals still get sound finite verdicts") {
  // the D_{2,2} form: its reduced basis has power-series tails, so the
  // certificate stays truncated, but the finite staircase fits under the
  // cap and the dimension is still exact
  Analysis a = analyze(potential("x*y^2 + x^3 + x^4", 12), 12);
  CHECK(a.report.certificate == Certificate::TruncatedAtCap);
  CHECK(a.report.dimension.kind == DimensionKind::Finite);
  CHECK(a.report.dimension.value == 8);
  CHECK(a.report.jdim == JdimVerdict::Zero);
  CHECK(longs(a.report.coranks) == std::vector<long>{2, 2, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0});
}

TEST_CASE("truncated certificates without a finite staircase stay inconclusive") {
  // the x^24 rule of D_{6,inf} lies far beyond cap 12: the visible staircase
  // is infinite and the certificate truncated, so no verdict is possible
  Analysis a = analyze(potential("x*y^2 + x^12", 12), 12);
  CHECK(a.report.certificate == Certificate::TruncatedAtCap);
  CHECK(a.report.dimension.kind == DimensionKind::Inconclusive);
  CHECK(a.report.jdim == JdimVerdict::Inconclusive);

  // whereas a finite staircase under the cap is conclusive even when the
  // verification window is not: rules {x, y^11} at cap 12
  Analysis b = analyze(potential("x^2 + y^12", 12), 12);
  CHECK(b.report.certificate == Certificate::TruncatedAtCap);
  CHECK(b.report.dimension.kind == DimensionKind::Finite);
  CHECK(b.report.dimension.value == 11);
  CHECK(b.report.jdim == JdimVerdict::Zero);
}

TEST_CASE("oracle agrees with the staircase pipeline") {
  std::mt19937_64 rng(43);
  const int cap = 8;
  std::vector<std::string> fixed = {
      "x^4 + x*y^2", "x*y^2", "x^2", "x^2 + y^5", "x^3 + x*y^3",
      "x*y^2 + x^3", "x*y^2 + x^4", "x*y - y*x", "x^2 + y^2",
  };
  for (const auto& expr : fixed) {
    Potential f = potential(expr, cap);
    auto od = oracle::graded_dims(f, cap);
    auto machine = coranks(f, cap);
    int max_gen_degree = 0;
    for (const auto& g : jacobi_generators(f).by_variable) {
      max_gen_degree = std::max(max_gen_degree, g.top_degree());
    }
    for (int m = 1; m <= cap - max_gen_degree; ++m) {
      CHECK(machine[static_cast<std::size_t>(m - 1)] ==
            od.coranks[static_cast<std::size_t>(m - 1)]);
    }
  }
  // random degree-<=5 potentials in 2 variables
  int done = 0;
  for (int trial = 0; trial < 200 && done < 25; ++trial) {
    NcJet raw = random_jet(rng, xy(), cap, 5, 5);
    NcJet clean(xy(), cap);
    for (const auto& [word, c] : raw.terms()) {
      if (degree(word) >= 2) clean.add_term(word, c);
    }
    if (clean.is_zero()) continue;
    ++done;
    Potential f(clean);
    auto od = oracle::graded_dims(f, cap);
    auto machine = coranks(f, cap);
    for (int m = 1; m <= cap; ++m) {
      CHECK(machine[static_cast<std::size_t>(m - 1)] ==
            od.coranks[static_cast<std::size_t>(m - 1)]);
    }
  }
  CHECK(done >= 25);
}

TEST_CASE("cumulative corank sums match the oracle's quotient dimensions") {
  const int cap = 8;
  for (const auto& expr : {"x^4 + x*y^2", "x*y^2 + x^3", "x^2 + y^4"}) {
    Potential f = potential(expr, cap);
    auto od = oracle::graded_dims(f, cap);
    auto machine = coranks(f, cap);
    Count cumulative = 1;  // c_0
    for (int m = 1; m <= cap; ++m) {
      cumulative += machine[static_cast<std::size_t>(m - 1)];
      CHECK(cumulative == od.quotient_dims[static_cast<std::size_t>(m)]);
    }
  }
}

TEST_CASE("corank1 from the rank formula matches the staircase value") {
  std::mt19937_64 rng(47);
  const int cap = 7;
  int done = 0;
  for (int trial = 0; trial < 200 && done < 40; ++trial) {
    NcJet raw = random_jet(rng, xy(), cap, 5, 4);
    NcJet clean(xy(), cap);
    for (const auto& [word, c] : raw.terms()) {
      if (degree(word) >= 2) clean.add_term(word, c);
    }
    if (clean.is_zero()) continue;
    ++done;
    Potential f(clean);
    CHECK(Count(corank1(f)) == coranks(f, cap)[0]);
  }
  CHECK(done >= 40);
}

TEST_CASE("increasing the cap never changes established coranks") {
  for (const auto& expr : {"x^4 + x*y^2", "x*y^2", "x^3 + x*y^3"}) {
    auto small = coranks(potential(expr, 9), 9);
    auto large = coranks(potential(expr, 14), 14);
    for (std::size_t m = 0; m < small.size(); ++m) CHECK(small[m] == large[m]);
  }
}
