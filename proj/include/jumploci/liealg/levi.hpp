#pragma once

#include <vector>

#include "jumploci/liealg/lie_algebra.hpp"

namespace jumploci {

/// h = s (x)_alpha g with alpha(y) a derivation of s for each basis vector y of g.
struct LeviInput {
  LieAlgebra s;
  LieAlgebra g;
  std::vector<Matrix<Rational>> action;
};

/// Empty when valid; otherwise a description of the first violation.
std::string levi_violation(const LeviInput& l);

/// Basis: s first, then g. [y, x] = alpha(y) x.
LieAlgebra semidirect(const LeviInput& l);

/// s~ = s / (ideal generated by alpha(y) x) and the projection q.
Quotient tilde_quotient(const LeviInput& l);

/// s = C^m with sl2 acting through the given matrices theta(H), theta(Xp), theta(Xm).
LeviInput abelian_sl2_module(const std::vector<Matrix<Rational>>& theta);

}  // namespace jumploci
