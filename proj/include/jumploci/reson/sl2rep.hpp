#pragma once

#include <string>
#include <vector>

#include "jumploci/exactnum/linalg.hpp"
#include "jumploci/poly/multipoly.hpp"
#include "jumploci/poly/segre.hpp"

namespace jumploci {

/// Finite-dimensional sl2 representation given as a direct sum of
/// irreducibles, with block-diagonal matrices in the weight bases.
struct Sl2Rep {
  std::vector<std::size_t> summands;
  Sl2Matrices theta;

  std::size_t dim() const { return theta[0].rows(); }
  /// theta(g) for g = a H + b X+ + c X-.
  Matrix<Rational> apply(const Vector<Rational>& g) const;
};

/// V_m with basis v_0..v_{m-1}: H v_k = (m-1-2k) v_k, X- v_k = v_{k+1},
/// X+ v_k = k(m-k) v_{k-1}.
Sl2Rep sl2_irrep(std::size_t m);

/// Direct sum of the irreducibles of the given dimensions.
Sl2Rep sl2_rep(const std::vector<std::size_t>& dims);

/// Empty when the bracket relations hold and dim V >= 1.
std::string sl2_rep_violation(const Sl2Rep& rep);

/// det theta(aH + bX+ + cX-) as a polynomial in a, b, c.
MultiPoly det_theta(const Sl2Rep& rep);

/// Squares of the eigenvalues of theta(g), one per weight:
/// (m_j - 1 - 2k)^2 (a^2 + bc).
std::vector<Rational> eigen_squares(const Sl2Rep& rep, const Vector<Rational>& g);

MultiPoly build_certificate(const MultiPoly& phi0, const Sl2Rep& rep);

}  // namespace jumploci
