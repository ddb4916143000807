#ifndef NCSING_WORD_HPP
#define NCSING_WORD_HPP

#include <cstddef>
#include <string>

namespace ncsing {

/// A letter is an index into an Alphabet.
using Letter = char8_t;

/// A word is a finite sequence of letters; the empty word is the monomial 1.
/// Words are the monomials of the free algebra, so "degree" is length.
using Word = std::u8string;

inline std::size_t degree(const Word& w) { return w.size(); }

/// The local order: lower degree is more leading, ties broken
/// lexicographically by letter index (= declared alphabet order).
/// Returns true when `a` strictly precedes (is more leading than) `b`.
inline bool word_precedes(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

/// Comparator so that sorted containers iterate leading-first.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const { return word_precedes(a, b); }
};

enum class Ordering { Precedes, Equals, Follows };

inline Ordering compare_words(const Word& a, const Word& b) {
  if (a == b) return Ordering::Equals;
  return word_precedes(a, b) ? Ordering::Precedes : Ordering::Follows;
}

/// Leftmost occurrence of `factor` as a contiguous subword of `w`;
/// Word::npos if absent. The empty factor matches at 0.
inline std::size_t find_factor(const Word& w, const Word& factor) {
  return w.find(factor);
}

inline bool has_factor(const Word& w, const Word& factor) {
  return w.find(factor) != Word::npos;
}

/// Rotation of `w` by `k`: w[k:] + w[:k].
inline Word rotate(const Word& w, std::size_t k) {
  return w.substr(k) + w.substr(0, k);
}

}  // namespace ncsing

#endif
