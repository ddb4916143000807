#ifndef NCSING_CALCULUS_HPP
#define NCSING_CALCULUS_HPP

#include <cstdint>
#include <vector>

#include "ncsing/jet.hpp"

namespace ncsing {

/// A potential: a jet with no constant and no linear terms.
class Potential {
public:
  explicit Potential(NcJet jet);

  const NcJet& jet() const { return jet_; }
  const Alphabet& alphabet() const { return jet_.alphabet(); }
  int cap() const { return jet_.cap(); }

private:
  NcJet jet_;
};

/// Cyclic derivative with respect to variable v: on a word, sum over all
/// cyclic rotations beginning with v of that rotation with its first letter
/// removed; extended linearly.
NcJet cyclic_derivative(const NcJet& f, Letter v);

struct JacobiGenerators {
  std::vector<NcJet> by_variable;   // one derivative per letter, zeros included
  std::vector<Letter> zero_variables;  // letters whose derivative vanished

  std::vector<NcJet> nonzero() const;
};

/// All cyclic derivatives of a potential, in alphabet order.
JacobiGenerators jacobi_generators(const Potential& f);

/// A continuous endomorphism of the power series ring, given by one image
/// jet per variable. Images must have zero constant term. Flagged an
/// automorphism when the linear parts form an invertible matrix.
class Substitution {
public:
  Substitution(Alphabet alphabet, std::vector<NcJet> images);

  static Substitution identity(const Alphabet& alphabet, int cap);

  const Alphabet& alphabet() const { return alphabet_; }
  int cap() const { return images_.front().cap(); }
  const NcJet& image(Letter v) const { return images_.at(v); }
  const std::vector<NcJet>& images() const { return images_; }

  bool is_automorphism() const { return automorphism_; }

private:
  Alphabet alphabet_;
  std::vector<NcJet> images_;
  bool automorphism_;
};

/// Ring-homomorphic image of f under s, truncated at the cap.
NcJet substitute(const NcJet& f, const Substitution& s);

/// apply `first`, then `then`.
Substitution compose(const Substitution& first, const Substitution& then);

/// Seed-deterministic random automorphism with small rational coefficients
/// and image degrees bounded by max_image_degree (>= 1). The linear part is
/// rejection-sampled until invertible.
Substitution random_automorphism(const Alphabet& alphabet, int cap, std::uint64_t seed,
                                 int max_image_degree);

/// Symmetrized quadratic coefficient matrix of a potential: entry (i,j) is
/// half the sum of the coefficients of x_i x_j and x_j x_i (so (i,i) is the
/// coefficient of x_i^2).
std::vector<std::vector<Q>> quadratic_form(const Potential& f);

std::size_t rank(std::vector<std::vector<Q>> matrix);

/// Number of variables minus the rank of the symmetrized quadratic matrix.
std::size_t corank1(const Potential& f);

struct SplitResult {
  std::size_t r = 0;                  // number of split square variables
  std::vector<Q> square_scalars;      // a_i with f ~ sum a_i x_i^2 + g
  std::vector<std::string> residual_names;  // variables of g (may be empty)
  NcJet residual_on_original;         // g written over the original alphabet
  Substitution change;                // substitution realizing the splitting

  /// g re-expressed over the residual sub-alphabet. Throws when r = d.
  Potential residual() const;
};

/// Splitting Lemma, computed to the jet cap: diagonalizes the quadratic
/// part over the rationals (keeping nonzero scalars on the split squares)
/// and eliminates split variables from all higher degrees. Cyclic moves
/// (which do not change any cyclic derivative) are used freely, so
/// substitute(f, change) agrees with sum a_i x_i^2 + g up to cyclic
/// equivalence: all cyclic derivatives agree exactly.
SplitResult split(const Potential& f);

}  // namespace ncsing

#endif
