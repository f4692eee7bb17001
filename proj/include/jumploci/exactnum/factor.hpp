#pragma once

#include <string>
#include <utility>
#include <vector>

#include "jumploci/exactnum/matrix.hpp"
#include "jumploci/exactnum/quad_scalar.hpp"
#include "jumploci/exactnum/upoly.hpp"

namespace jumploci {

struct RationalRoot {
  Rational value;
  unsigned multiplicity = 1;
};

struct PolyFactor {
  UPoly poly;  // monic
  unsigned multiplicity = 1;
};

/// Factorization of a univariate polynomial over Q into linear factors with
/// rational roots, irreducible quadratics, and left-over factors of degree
/// >= 3 without rational roots (kept symbolic, not split further).
struct FactoredPoly {
  Rational leading = 0;
  std::vector<RationalRoot> rational_roots;  // sorted by value
  std::vector<PolyFactor> quadratics;
  std::vector<PolyFactor> residual;

  bool is_zero() const { return leading == 0; }
  UPoly expand() const;
  bool has_rational_root(const Rational& x) const;
  /// Every root representable in a single quadratic extension: the rational
  /// roots plus both roots of each irreducible quadratic.
  std::vector<QuadScalar> explicit_roots() const;
  std::string to_string(const std::string& var = "x") const;
};

FactoredPoly factor(const UPoly& p);

/// Squarefree decomposition (Yun): pairs (a_i, i) with p = lc * prod a_i^i.
std::vector<PolyFactor> squarefree_decomposition(const UPoly& p);

/// Rational roots of a nonzero polynomial, each listed once, sorted.
std::vector<Rational> rational_roots(const UPoly& p);

/// Roots of an irreducible monic quadratic x^2 + b x + c in Q(sqrt disc).
std::pair<QuadScalar, QuadScalar> quadratic_roots(const UPoly& q);

/// Factored characteristic polynomial of a square rational matrix.
FactoredPoly eigen_factors(const Matrix<Rational>& m);

}  // namespace jumploci
