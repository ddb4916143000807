#ifndef NCSING_TESTS_HELPERS_HPP
#define NCSING_TESTS_HELPERS_HPP

#include <string>
#include <vector>

#include "ncsing/calculus.hpp"
#include "ncsing/parser.hpp"

namespace ncsing::testing {

inline const Alphabet& xy() {
  static const Alphabet a({"x", "y"});
  return a;
}

inline const Alphabet& xyw() {
  static const Alphabet a({"x", "y", "w"});
  return a;
}

/// Word from a string of single-letter variable names, e.g. "xyy".
inline Word w(const Alphabet& alphabet, const std::string& letters) {
  Word out;
  for (char c : letters) {
    auto l = alphabet.find(std::string(1, c));
    REQUIRE(l.has_value());
    out.push_back(*l);
  }
  return out;
}

inline NcJet jet(const std::string& expr, int cap = 10, const Alphabet& alphabet = xy()) {
  return parse_poly(expr, alphabet, cap);
}

inline Potential potential(const std::string& expr, int cap = 10,
                           const Alphabet& alphabet = xy()) {
  return Potential(parse_poly(expr, alphabet, cap));
}

/// Uniform small random jet for property tests.
template <typename Rng>
NcJet random_jet(Rng& rng, const Alphabet& alphabet, int cap, int max_terms, int max_degree) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> letter(0, static_cast<int>(alphabet.size()) - 1);
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  NcJet out(alphabet, cap);
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    Word word;
    int d = deg(rng);
    for (int i = 0; i < d; ++i) word.push_back(static_cast<Letter>(letter(rng)));
    Q c(num(rng), den(rng));
    c.canonicalize();
    out.add_term(word, c);
  }
  return out;
}

}  // namespace ncsing::testing

#endif
