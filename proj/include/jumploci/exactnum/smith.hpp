#pragma once

#include "jumploci/exactnum/matrix.hpp"
#include "jumploci/exactnum/rational.hpp"

namespace jumploci {

/// U * M * V = D with U, V unimodular and D diagonal, nonnegative, each
/// diagonal entry dividing the next.
struct SmithForm {
  Matrix<Integer> U;
  Matrix<Integer> D;
  Matrix<Integer> V;
};

SmithForm smith_normal_form(const Matrix<Integer>& m);

/// Determinant of an integer matrix (exact).
Integer integer_determinant(const Matrix<Integer>& m);

}  // namespace jumploci
