#pragma once

#include "jumploci/cdga/cdga.hpp"
#include "jumploci/liealg/lie_algebra.hpp"

namespace jumploci {

/// Coefficient matrix of an element of A^1 (x) g: rows indexed by the basis
/// of A^1 (or of h, for Hom(h, g)), columns by the basis of g. Row r holds
/// the g-vector paired with the r-th basis 1-form.
using GOneForm = Matrix<Rational>;

/// Left side of the Maurer-Cartan equation,
/// sum_r d(a_r) (x) w_r + sum_{r<s} a_r a_s (x) [w_r, w_s],
/// as a dim A^2 x dim g matrix.
Matrix<Rational> mc_defect(const CDGA& a, const LieAlgebra& g, const GOneForm& omega);
bool is_flat(const CDGA& a, const LieAlgebra& g, const GOneForm& omega);

/// eta (x) g as a rank <= 1 coefficient matrix.
GOneForm segre(const Vector<Rational>& eta, const Vector<Rational>& g);

/// True iff omega has rank <= 1 and its A^1-side factor is closed.
bool in_F1(const CDGA& a, const GOneForm& omega);

/// For a rank-one omega, a factorization omega = eta (x) g. Returns false for
/// omega = 0 or rank >= 2.
bool split_rank_one(const GOneForm& omega, Vector<Rational>& eta, Vector<Rational>& g);

}  // namespace jumploci
