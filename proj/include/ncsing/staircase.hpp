#ifndef NCSING_STAIRCASE_HPP
#define NCSING_STAIRCASE_HPP

#include <gmpxx.h>

#include <vector>

#include "ncsing/rewrite.hpp"

namespace ncsing {

using Count = mpz_class;

/// Deterministic acceptor for the language of words containing no forbidden
/// subword (an Aho-Corasick automaton with matching states removed). Every
/// remaining state accepts, so the standard words of a rewrite system are
/// exactly the accepted words.
struct Staircase {
  std::vector<Word> forbidden;
  std::size_t alphabet_size = 0;
  int cap = 0;

  /// next[s][letter] -> state, or -1 once a forbidden word has been matched.
  std::vector<std::vector<int>> next;
  int start = 0;

  /// counts[m] = number of accepted words of length m, m = 0..cap.
  std::vector<Count> counts;
};

/// Builds the avoidance automaton for the system's lead words and counts
/// accepted words of each length up to the cap.
Staircase staircase(const RewriteSystem& sys);

/// Same, from a bare forbidden set.
Staircase staircase(const std::vector<Word>& forbidden, std::size_t alphabet_size, int cap);

/// All accepted words of degree <= max_degree, in local order.
std::vector<Word> staircase_words(const Staircase& st, int max_degree);

enum class GrowthKind {
  Finite,       // no reachable cycle: finitely many standard words
  Polynomial,   // counts eventually polynomial of degree `degree`
  Exponential,  // some strongly connected component carries two cycles
};

struct Growth {
  GrowthKind kind = GrowthKind::Finite;
  int degree = 0;        // Polynomial: c_m = Theta(m^degree)
  Count total = 0;       // Finite: sum over all m of c_m (including c_0)
  int longest_word = 0;  // Finite: largest accepted degree
};

/// Cycle-structure analysis of the accepted language. Decidable exactly:
/// the language is finite iff no cycle is reachable; counts are eventually
/// polynomial of degree k iff every reachable SCC is a simple cycle and the
/// largest number of cyclic SCCs along a path is k+1.
Growth analyze_growth(const Staircase& st);

}  // namespace ncsing

#endif
