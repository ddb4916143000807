#include "ncsing/calculus.hpp"

#include <algorithm>
#include <random>

#include "ncsing/errors.hpp"

namespace ncsing {

Potential::Potential(NcJet jet) : jet_(std::move(jet)) {
  if (jet_.coeff(Word()) != 0) throw DomainError("potential has a constant term");
  for (std::size_t v = 0; v < jet_.alphabet().size(); ++v) {
    if (jet_.coeff(Word(1, static_cast<Letter>(v))) != 0)
      throw DomainError("potential has a linear term");
  }
}

NcJet cyclic_derivative(const NcJet& f, Letter v) {
  if (v >= f.alphabet().size()) throw DomainError("unknown variable");
  NcJet out(f.alphabet(), f.cap());
  for (const auto& [w, c] : f.terms()) {
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (w[k] != v) continue;
      // rotation starting at k, first letter scored off
      out.add_term(w.substr(k + 1) + w.substr(0, k), c);
    }
  }
  return out;
}

JacobiGenerators jacobi_generators(const Potential& f) {
  JacobiGenerators out;
  for (std::size_t v = 0; v < f.alphabet().size(); ++v) {
    NcJet d = cyclic_derivative(f.jet(), static_cast<Letter>(v));
    if (d.is_zero()) out.zero_variables.push_back(static_cast<Letter>(v));
    out.by_variable.push_back(std::move(d));
  }
  return out;
}

std::vector<NcJet> JacobiGenerators::nonzero() const {
  std::vector<NcJet> out;
  for (const auto& d : by_variable) {
    if (!d.is_zero()) out.push_back(d);
  }
  return out;
}

namespace {

/// Gaussian elimination; returns the rank, destroying the matrix.
std::size_t rank_in_place(std::vector<std::vector<Q>>& m) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (sgn(m[r][col]) == 0) continue;
      Q factor = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Q>> linear_part(const Substitution& s) {
  std::size_t d = s.alphabet().size();
  std::vector<std::vector<Q>> m(d, std::vector<Q>(d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      m[i][j] = s.images()[i].coeff(Word(1, static_cast<Letter>(j)));
    }
  }
  return m;
}

}  // namespace

std::size_t rank(std::vector<std::vector<Q>> matrix) { return rank_in_place(matrix); }

Substitution::Substitution(Alphabet alphabet, std::vector<NcJet> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
  if (images_.size() != alphabet_.size())
    throw DomainError("substitution needs exactly one image per variable");
  for (const auto& img : images_) {
    if (img.alphabet() != alphabet_) throw DomainError("alphabet mismatch");
    if (img.cap() != images_.front().cap()) throw DomainError("truncation cap mismatch");
    if (img.coeff(Word()) != 0)
      throw DomainError("substitution image has a nonzero constant term");
  }
  automorphism_ = rank(linear_part(*this)) == alphabet_.size();
}

Substitution Substitution::identity(const Alphabet& alphabet, int cap) {
  std::vector<NcJet> images;
  for (std::size_t v = 0; v < alphabet.size(); ++v) {
    images.push_back(NcJet::variable(alphabet, cap, static_cast<Letter>(v)));
  }
  return Substitution(alphabet, std::move(images));
}

NcJet substitute(const NcJet& f, const Substitution& s) {
  if (s.alphabet() != f.alphabet()) throw DomainError("alphabet mismatch");
  if (s.cap() != f.cap()) throw DomainError("truncation cap mismatch");
  NcJet out(f.alphabet(), f.cap());
  for (const auto& [w, c] : f.terms()) {
    NcJet acc = NcJet::constant(f.alphabet(), f.cap(), c);
    for (Letter l : w) {
      acc = mul(acc, s.image(l));
      if (acc.is_zero()) break;
    }
    out += acc;
  }
  return out;
}

Substitution compose(const Substitution& first, const Substitution& then) {
  std::vector<NcJet> images;
  for (const auto& img : first.images()) images.push_back(substitute(img, then));
  return Substitution(first.alphabet(), std::move(images));
}

Substitution random_automorphism(const Alphabet& alphabet, int cap, std::uint64_t seed,
                                 int max_image_degree) {
  if (max_image_degree < 1) throw DomainError("max_image_degree must be >= 1");
  std::mt19937_64 rng(seed);
  const std::size_t d = alphabet.size();

  // invertible small-integer linear part, by rejection
  std::uniform_int_distribution<int> entry(-2, 2);
  std::vector<std::vector<Q>> m;
  do {
    m.assign(d, std::vector<Q>(d, 0));
    for (auto& row : m)
      for (auto& e : row) e = entry(rng);
  } while (rank(m) != d);

  std::uniform_int_distribution<int> num(-2, 2);
  std::uniform_int_distribution<int> den(1, 2);
  std::uniform_int_distribution<int> extra_terms(0, 2);
  std::uniform_int_distribution<int> letter(0, static_cast<int>(d) - 1);

  std::vector<NcJet> images;
  for (std::size_t i = 0; i < d; ++i) {
    NcJet img(alphabet, cap);
    for (std::size_t j = 0; j < d; ++j) img.add_term(Word(1, static_cast<Letter>(j)), m[i][j]);
    if (max_image_degree >= 2) {
      int k = extra_terms(rng);
      for (int t = 0; t < k; ++t) {
        std::uniform_int_distribution<int> deg(2, max_image_degree);
        int wdeg = deg(rng);
        Word w;
        for (int p = 0; p < wdeg; ++p) w.push_back(static_cast<Letter>(letter(rng)));
        int n = num(rng);
        if (n == 0) n = 1;
        Q c(n, den(rng));
        c.canonicalize();
        img.add_term(w, c);
      }
    }
    images.push_back(std::move(img));
  }
  return Substitution(alphabet, std::move(images));
}

std::vector<std::vector<Q>> quadratic_form(const Potential& f) {
  const std::size_t d = f.alphabet().size();
  std::vector<std::vector<Q>> q(d, std::vector<Q>(d, 0));
  for (const auto& [w, c] : f.jet().terms()) {
    if (degree(w) != 2) continue;
    std::size_t i = w[0], j = w[1];
    q[i][j] += c / 2;
    q[j][i] += c / 2;
  }
  return q;
}

std::size_t corank1(const Potential& f) {
  return f.alphabet().size() - rank(quadratic_form(f));
}

namespace {

/// Rotates every stored word of exact degree `deg` that contains a letter
/// < num_split so that it starts with one; among those rotations the
/// lexicographically least is chosen. Cyclic derivative-preserving.
void cyclic_collect(NcJet& h, std::size_t deg, std::size_t num_split) {
  std::vector<std::pair<Word, Q>> moved;
  std::vector<Word> dead;
  for (const auto& [w, c] : h.terms()) {
    if (degree(w) != deg) continue;
    Word best;
    bool found = false;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (w[k] >= num_split) continue;
      Word r = rotate(w, k);
      if (!found || r < best) best = r;
      found = true;
    }
    if (!found || best == w) continue;
    moved.emplace_back(best, c);
    dead.push_back(w);
  }
  for (const auto& w : dead) h.add_term(w, -h.coeff(w));
  for (const auto& [w, c] : moved) h.add_term(w, c);
}

/// Symmetric congruence diagonalization over Q: returns an invertible S with
/// S^T Q S diagonal, nonzero entries first. Lagrange's method.
struct Diagonalization {
  std::vector<std::vector<Q>> change;  // S, as substitution matrix rows
  std::vector<Q> diagonal;             // the first `rank` entries are nonzero
  std::size_t rank = 0;
};

Diagonalization diagonalize(std::vector<std::vector<Q>> a) {
  const std::size_t d = a.size();
  std::vector<std::vector<Q>> s(d, std::vector<Q>(d, 0));
  for (std::size_t i = 0; i < d; ++i) s[i][i] = 1;

  // column operation col_k += t * col_l on a (aka A <- E^T A E) and on s
  auto col_op = [&](std::size_t k, std::size_t l, const Q& t) {
    for (std::size_t r = 0; r < d; ++r) a[r][k] += t * a[r][l];
    for (std::size_t r = 0; r < d; ++r) a[k][r] += t * a[l][r];
    for (std::size_t r = 0; r < d; ++r) s[r][k] += t * s[r][l];
  };
  auto col_swap = [&](std::size_t k, std::size_t l) {
    for (std::size_t r = 0; r < d; ++r) std::swap(a[r][k], a[r][l]);
    for (std::size_t r = 0; r < d; ++r) std::swap(a[k][r], a[l][r]);
    for (std::size_t r = 0; r < d; ++r) std::swap(s[r][k], s[r][l]);
  };

  std::size_t pos = 0;
  for (; pos < d; ++pos) {
    std::size_t k = pos;
    while (k < d && sgn(a[k][k]) == 0) ++k;
    if (k == d) {
      // no nonzero diagonal entry; look for an off-diagonal one
      bool found = false;
      for (std::size_t i = pos; i < d && !found; ++i) {
        for (std::size_t j = i + 1; j < d && !found; ++j) {
          if (sgn(a[i][j]) != 0) {
            col_op(i, j, 1);  // makes a[i][i] = 2 a[i][j] nonzero
            k = i;
            found = true;
          }
        }
      }
      if (!found) break;  // remaining block is zero
    }
    if (k != pos) col_swap(k, pos);
    for (std::size_t j = pos + 1; j < d; ++j) {
      if (sgn(a[pos][j]) == 0) continue;
      col_op(j, pos, -a[pos][j] / a[pos][pos]);
    }
  }

  Diagonalization out;
  out.change = std::move(s);
  out.rank = pos;
  for (std::size_t i = 0; i < d; ++i) out.diagonal.push_back(a[i][i]);
  return out;
}

Substitution linear_substitution(const Alphabet& alphabet, int cap,
                                 const std::vector<std::vector<Q>>& m) {
  std::vector<NcJet> images;
  for (std::size_t i = 0; i < m.size(); ++i) {
    NcJet img(alphabet, cap);
    for (std::size_t j = 0; j < m.size(); ++j)
      img.add_term(Word(1, static_cast<Letter>(j)), m[i][j]);
    images.push_back(std::move(img));
  }
  return Substitution(alphabet, std::move(images));
}

}  // namespace

Potential SplitResult::residual() const {
  if (residual_names.empty())
    throw DomainError("no residual variables: the quadratic part has full rank");
  Alphabet sub(residual_names);
  const std::size_t offset = residual_on_original.alphabet().size() - residual_names.size();
  NcJet g(sub, residual_on_original.cap());
  for (const auto& [w, c] : residual_on_original.terms()) {
    Word mapped;
    for (Letter l : w) mapped.push_back(static_cast<Letter>(l - offset));
    g.add_term(mapped, c);
  }
  return Potential(std::move(g));
}

SplitResult split(const Potential& f) {
  const Alphabet& alphabet = f.alphabet();
  const int cap = f.cap();
  const std::size_t d = alphabet.size();

  Diagonalization diag = diagonalize(quadratic_form(f));
  const std::size_t r = diag.rank;

  Substitution change = Substitution::identity(alphabet, cap);
  NcJet h = f.jet();
  if (r > 0) {
    change = linear_substitution(alphabet, cap, diag.change);
    h = substitute(h, change);
  }

  // collect the degree-2 part cyclically; the antisymmetric remainder
  // cancels and the symmetric part is now diagonal
  cyclic_collect(h, 2, d);

  // eliminate split variables degree by degree
  for (int k = 3; k <= cap && r > 0; ++k) {
    cyclic_collect(h, static_cast<std::size_t>(k), r);
    std::vector<NcJet> u(r, NcJet(alphabet, cap));
    bool any = false;
    for (const auto& [w, c] : h.terms()) {
      if (static_cast<int>(degree(w)) != k) continue;
      if (w[0] < r) {
        u[w[0]].add_term(w.substr(1), c);
        any = true;
      }
    }
    if (!any) continue;
    std::vector<NcJet> images;
    for (std::size_t i = 0; i < d; ++i) {
      NcJet img = NcJet::variable(alphabet, cap, static_cast<Letter>(i));
      if (i < r && !u[i].is_zero()) {
        img -= (Q(1) / (2 * diag.diagonal[i])) * u[i];
      }
      images.push_back(std::move(img));
    }
    Substitution step(alphabet, std::move(images));
    h = substitute(h, step);
    change = compose(change, step);
    // the step leaves a commutator residue (z_i u_i - u_i z_i)/2 at degree k,
    // zero as a cyclic class; collecting removes it
    cyclic_collect(h, static_cast<std::size_t>(k), r);
  }

  // peel off the squares; what is left is g
  for (std::size_t i = 0; i < r; ++i) {
    Word sq(2, static_cast<Letter>(i));
    h.add_term(sq, -diag.diagonal[i]);
  }
  for (const auto& entry : h.terms()) {
    for (Letter l : entry.first) {
      if (l < r) throw DomainError("internal error: split left a term in a split variable");
    }
    if (degree(entry.first) < 3) throw DomainError("internal error: split left a low-degree term");
  }

  SplitResult out{r,
                  std::vector<Q>(diag.diagonal.begin(),
                                 diag.diagonal.begin() + static_cast<std::ptrdiff_t>(r)),
                  {},
                  std::move(h),
                  std::move(change)};
  for (std::size_t i = r; i < d; ++i) out.residual_names.push_back(alphabet.name(static_cast<Letter>(i)));
  return out;
}

}  // namespace ncsing
