#ifndef NCSING_REWRITE_HPP
#define NCSING_REWRITE_HPP

#include <functional>
#include <vector>

#include "ncsing/jet.hpp"

namespace ncsing {

/// A monic rewrite rule lead + tail: every support word of the tail strictly
/// follows the lead in the local order, so the rule rewrites an occurrence
/// of lead to -tail. lead has degree >= 1.
struct Rule {
  Word lead;
  NcJet tail;
};

enum class Certificate { Exact, TruncatedAtCap };

/// An interreduced truncated standard basis for a two-sided ideal: no lead
/// is a subword of another lead, no tail contains any lead as a subword of
/// a support word, rules sorted by lead in the local order.
///
/// certificate == Exact means the rule set is the complete (finite) standard
/// basis of the untruncated ideal: completion reached a fixpoint, every
/// critical pair of the final system re-verified to zero, no reduction ever
/// crossed the cap, and 2 * (max lead degree) <= cap so the verification
/// window covers all overlaps.
struct RewriteSystem {
  Alphabet alphabet;
  int cap;
  std::vector<Rule> rules;
  Certificate certificate = Certificate::TruncatedAtCap;

  std::vector<Word> leads() const;
};

/// An overlap ambiguity between rules: overlap = a . lead(suffix_rule)
///                                              = lead(prefix_rule) . b
/// with 1 <= |a| < |lead(prefix_rule)| (self-overlaps allowed).
struct CriticalPair {
  std::size_t prefix_rule;  // index j: lead(j) is a prefix of the overlap
  std::size_t suffix_rule;  // index i: lead(i) is a suffix of the overlap
  Word a, b;
  Word overlap;
};

/// All proper overlaps between leads (including self-overlaps) with overlap
/// degree <= cap, each reported once, sorted by overlap word.
std::vector<CriticalPair> critical_pairs(const RewriteSystem& sys);

/// Normal form of p modulo the rules: repeatedly rewrite the order-least
/// support word that contains some lead, using the leftmost occurrence of
/// the order-least applicable lead. Terminates because every rewrite moves
/// the replaced term strictly later in the (cap-bounded) local order.
NcJet reduce(const NcJet& p, const RewriteSystem& sys);

struct ReduceOutcome {
  NcJet normal_form;
  bool truncated = false;  // true when a rewrite dropped words beyond the cap
};

ReduceOutcome reduce_tracked(const NcJet& p, const RewriteSystem& sys);

/// As reduce, but the rewrite site among all applicable (word, rule,
/// occurrence) triples is chosen by `pick(n)` (a value in [0, n)). Normal
/// forms must not depend on the choices exactly when the system is
/// confluent; used by the property tests.
NcJet reduce_with_choice(const NcJet& p, const RewriteSystem& sys,
                         const std::function<std::size_t(std::size_t)>& pick);

/// Interreduction: drops/rewrites rules until no lead divides another lead
/// and every tail is fully reduced. Idempotent.
std::vector<Rule> interreduce(std::vector<Rule> rules, const Alphabet& alphabet, int cap);

/// Buchberger-style completion for the local order on noncommutative power
/// series, truncated at cap: monicizes and interreduces the generators,
/// resolves critical pairs in increasing overlap order until fixpoint, then
/// re-verifies every pair of the final system to certify exactness.
///
/// Throws DomainError when the generator list is empty or contains a zero
/// (or unit-leading) jet.
RewriteSystem complete(const std::vector<NcJet>& generators, int cap);

/// Completion over the generators' own cap.
RewriteSystem complete(const std::vector<NcJet>& generators);

}  // namespace ncsing

#endif
