#include "ncsing/classify.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "ncsing/errors.hpp"

namespace ncsing {

namespace {

std::string param(int v) { return v == kInf ? "inf" : std::to_string(v); }

const Alphabet& standard_xy() {
  static const Alphabet alphabet({"x", "y"});
  return alphabet;
}

}  // namespace

std::string tag_name(const FamilyTag& tag) {
  switch (tag.family) {
    case Family::A:
      return tag.n == kInf ? "A_inf" : "A_" + std::to_string(tag.n);
    case Family::D:
      return "D_{" + param(tag.n) + "," + param(tag.m) + "}";
    case Family::E6:
      return "E_{6," + param(tag.n) + "}";
  }
  return "?";
}

Potential family_potential(const FamilyTag& tag, const Alphabet& alphabet, int cap) {
  if (alphabet.size() != 2) throw DomainError("family normal forms live in 2 variables");
  const Letter x = 0, y = 1;
  NcJet f(alphabet, cap);
  auto power = [&](Letter l, int e) { return Word(static_cast<std::size_t>(e), l); };
  switch (tag.family) {
    case Family::A:
      f.add_term(power(x, 2), 1);
      if (tag.n != kInf) {
        if (tag.n < 2) throw DomainError("A_n requires n >= 2");
        f.add_term(power(y, tag.n), 1);
      }
      break;
    case Family::D: {
      Word xyy;
      xyy.push_back(x);
      xyy.push_back(y);
      xyy.push_back(y);
      f.add_term(xyy, 1);
      if (tag.m != kInf) {
        if (tag.m < 2) throw DomainError("D families require m >= 2");
        f.add_term(power(x, 2 * tag.m - 1), 1);
      }
      if (tag.n != kInf) {
        if (tag.n < 2) throw DomainError("D families require n >= 2");
        f.add_term(power(x, 2 * tag.n), 1);
      }
      break;
    }
    case Family::E6: {
      f.add_term(power(x, 3), 1);
      Word xyyy;
      xyyy.push_back(x);
      for (int i = 0; i < 3; ++i) xyyy.push_back(y);
      f.add_term(xyyy, 1);
      if (tag.n != kInf) {
        if (tag.n < 4) throw DomainError("E_{6,n} requires ord(p) = n >= 4");
        f.add_term(power(y, tag.n), 1);
      }
      break;
    }
  }
  return Potential(std::move(f));
}

InvariantReport family_fingerprint(const FamilyTag& tag, int cap) {
  using Key = std::tuple<Family, int, int, int>;
  static std::map<Key, InvariantReport> cache;
  static std::mutex mutex;
  Key key{tag.family, tag.n, tag.m, cap};
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  InvariantReport rep = analyze(family_potential(tag, standard_xy(), cap), cap).report;
  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(key, rep);
  return rep;
}

bool TypeClass::has_candidate(const FamilyTag& tag) const {
  for (const auto& c : candidates) {
    if (c == tag) return true;
  }
  return false;
}

namespace {

/// Families whose defining terms survive the cap, in table order
/// (flop families first, then the divisor-to-curve limits).
std::vector<FamilyTag> families_within(int cap) {
  std::vector<FamilyTag> out;
  for (int n = 2; n <= cap; ++n) out.push_back({Family::A, n, kInf});
  for (int n = 2; 2 * n <= cap; ++n)
    for (int m = 2; 2 * m - 1 <= cap; ++m) out.push_back({Family::D, n, m});
  for (int n = 2; 2 * n <= cap; ++n) out.push_back({Family::D, n, kInf});
  for (int n = 4; n <= cap; ++n) out.push_back({Family::E6, n, kInf});
  out.push_back({Family::A, kInf, kInf});
  for (int m = 2; 2 * m - 1 <= cap; ++m) out.push_back({Family::D, kInf, m});
  out.push_back({Family::D, kInf, kInf});
  out.push_back({Family::E6, kInf, kInf});
  return out;
}

CoarseType coarse_from_coranks(const std::vector<Count>& c) {
  auto at = [&](std::size_t i) { return c[i - 1]; };  // Crk_i
  if (at(1) <= 1 && at(2) <= 1 && at(3) <= 1 && at(4) <= 1) return CoarseType::A;
  if (at(1) == 2 && at(2) == 2 && at(3) == 2 && at(4) <= 2) return CoarseType::D;
  if (at(1) == 2 && at(2) == 3 && at(3) == 4 && at(4) == 4) return CoarseType::E6;
  if (at(1) == 2 && at(2) == 3) return CoarseType::EOther;
  return CoarseType::Unclassified;
}

}  // namespace

Classification classify_full(const Potential& f, int cap) {
  if (f.alphabet().size() != 2)
    throw DomainError("classification requires a potential in exactly 2 variables");
  if (cap < 4) throw DomainError("classification needs cap >= 4 to read Crk_1..Crk_4");

  Classification out{analyze(f, cap), TypeClass{}};
  const InvariantReport& rep = out.analysis.report;

  out.type.coarse = coarse_from_coranks(rep.coranks);

  // fingerprint equality includes the certificate and the verdicts, so
  // truncated-and-inconclusive inputs can only ever match another report
  // that is equally inconclusive; family matching stays honest without an
  // explicit exactness gate
  if (rep.dimension.kind != DimensionKind::Inconclusive) {
    for (const auto& tag : families_within(cap)) {
      if (family_fingerprint(tag, cap) == rep) out.type.candidates.push_back(tag);
    }
  }
  switch (rep.jdim) {
    case JdimVerdict::Zero: out.type.situation = Situation::Flopping; break;
    case JdimVerdict::One: out.type.situation = Situation::DivisorToCurve; break;
    case JdimVerdict::Inconclusive: out.type.situation = Situation::Unknown; break;
  }
  return out;
}

TypeClass classify(const Potential& f, int cap) { return classify_full(f, cap).type; }

}  // namespace ncsing
