#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "jumploci/conn/flat.hpp"
#include "jumploci/liealg/catalog.hpp"
#include "jumploci/liealg/levi.hpp"
#include "jumploci/poly/multipoly.hpp"

namespace jumploci {

struct NilpotentInput : std::domain_error {
  using std::domain_error::domain_error;
};

/// phi[e_i, e_j] - [phi e_i, phi e_j] for every basis pair i < j (rows, in
/// lexicographic order of pairs) with values in k (columns). phi has rows
/// indexed by the basis of h and columns by the basis of k. T needs a
/// constructor from Rational.
template <class T>
Matrix<T> hom_defect(const LieAlgebra& h, const LieAlgebra& k, const Matrix<T>& phi, const T& zero) {
  if (phi.rows() != h.dim() || phi.cols() != k.dim()) throw std::invalid_argument("hom_defect: dimension mismatch");
  const std::size_t n = h.dim(), m = k.dim();
  Matrix<T> out(n * (n - (n ? 1 : 0)) / 2, m, zero);
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++row) {
      const auto& c = h.bracket(i, j);
      for (std::size_t l = 0; l < n; ++l) {
        if (c[l] == 0) continue;
        for (std::size_t q = 0; q < m; ++q) out(row, q) += T(c[l]) * phi(l, q);
      }
      for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) {
          if (p == q) continue;
          const auto& b = k.bracket(p, q);
          T prod = phi(i, p) * phi(j, q);
          for (std::size_t r = 0; r < m; ++r)
            if (b[r] != 0) out(row, r) -= T(b[r]) * prod;
        }
    }
  return out;
}

inline Matrix<Rational> hom_defect(const LieAlgebra& h, const LieAlgebra& k, const GOneForm& phi) {
  return hom_defect<Rational>(h, k, phi, Rational(0));
}
inline bool is_lie_hom(const LieAlgebra& h, const LieAlgebra& k, const GOneForm& phi) {
  return hom_defect(h, k, phi).is_zero();
}

/// Dimension of the image of phi.
inline std::size_t image_rank(const GOneForm& phi) { return rank(phi); }

/// Coordinate names on Hom(h, k): "<h basis>.<k basis>", row-major.
std::string hom_variable(const LieAlgebra& h, std::size_t i, const LieAlgebra& k, std::size_t j);
std::vector<std::string> hom_variables(const LieAlgebra& h, const LieAlgebra& k);
/// Values of the hom coordinates of phi, in the order of hom_variables.
std::vector<Rational> hom_point(const GOneForm& phi);
/// Evaluates a polynomial in (a subset of) the hom coordinates at phi.
Rational eval_on_hom(const MultiPoly& f, const LieAlgebra& h, const LieAlgebra& k, const GOneForm& phi);
/// det phi(x) = -a^2 - bc for x in h, as a polynomial in the hom coordinates.
MultiPoly det_of_image(const LieAlgebra& h, const Vector<Rational>& x);

/// Explicit rank-two homomorphism from V (x)_alpha C to sl2:
/// phi u = (lambda / (2 eps)) H, phi z_i = t_i X_eps. `t` has one entry per
/// basis vector z_i of V. Throws std::invalid_argument when lambda is not a
/// nonzero eigenvalue of the Jordan data, when t is nonzero off the
/// lambda-blocks or before the last position of a lambda-block, or when all
/// t_r vanish.
GOneForm metabelian_family(const std::vector<JordanBlock>& blocks, const Rational& lambda, int epsilon,
                           const std::vector<Rational>& t);

/// f(phi) = prod over distinct nonzero eigenvalues lambda of (det U + lambda^2/4),
/// U = phi(u), in the variables "u.H", "u.Xp", "u.Xm". Throws NilpotentInput.
MultiPoly metabelian_certificate(const std::vector<JordanBlock>& blocks);

struct MetabelianClassification {
  std::size_t image_rank = 0;
  bool in_family = false;
  Rational lambda;
  int epsilon = 0;
  std::vector<Rational> t;
  /// P with P^{-1} phi(x) P equal to the family member (2x2 matrices).
  Matrix<Rational> conjugator;
  std::string reason;
};

/// For a homomorphism phi of rank >= 2, diagonalizes phi(u) by GL2
/// conjugation, reads off (lambda, eps, t) and compares exactly with
/// metabelian_family. Rank <= 1 inputs are reported with in_family = false
/// and reason "rank one".
MetabelianClassification classify_metabelian_hom(const std::vector<JordanBlock>& blocks, const GOneForm& phi);

/// Conjugates every row of phi (an element of Hom(h, sl2)) by P: x -> P^{-1} x P.
GOneForm conjugate_sl2(const GOneForm& phi, const Matrix<Rational>& p);

/// A Zariski closed subset of Hom(s, sl2) given as a union of common zero sets.
struct ClosedSubset {
  std::vector<std::vector<MultiPoly>> components;
  bool contains(const LieAlgebra& s, const GOneForm& phi) const;
  bool contains_origin() const;
};

/// W with rep(s, sl2) contained in rep^1(s, sl2) union W and 0 not in W, built
/// by induction on the derived length. At each step V is the last nonzero
/// derived term, the lifts u_i are the standard basis vectors spanning the
/// complement used by `quotient`, and f_i(phi) = R_i(det phi(u_i)) with
/// R_i(x) = prod (x + mu^2/4) over the distinct nonzero eigenvalues mu of
/// ad_V(u_i). Throws std::invalid_argument if s is not solvable.
ClosedSubset solvable_certificate(const LieAlgebra& s);

/// Q: Hom(s~, k) -> Hom(s (x) g, k), Phi~ -> (Phi~ o q, 0).
GOneForm q_map(const LeviInput& l, const Quotient& tilde, const GOneForm& phi_tilde);

}  // namespace jumploci
