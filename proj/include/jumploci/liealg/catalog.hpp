#pragma once

#include <string>
#include <vector>

#include "jumploci/liealg/lie_algebra.hpp"

namespace jumploci {

struct JordanBlock {
  Rational lambda;
  std::size_t size = 1;
};

LieAlgebra abelian(std::size_t n);
/// Heisenberg algebra of dimension 2n+1: [x_i, y_i] = z.
/// For n = 1 the basis is (x, y, z).
LieAlgebra heisenberg(std::size_t n);
/// aff(1): basis (u, x), [u, x] = x.
LieAlgebra aff1();
/// Borel subalgebra of sl2: basis (H, Xp), [H, Xp] = 2 Xp.
LieAlgebra borel();
/// sl2 in the standard basis (H, Xp, Xm).
LieAlgebra sl2();

/// V (x)_alpha C with alpha in Jordan form: basis z1..zn of V, then u;
/// per block [u, z_first] = lambda z_first, [u, z_i] = lambda z_i + z_{i-1}.
LieAlgebra metabelian(const std::vector<JordanBlock>& blocks);

/// Looks up a catalog algebra by name: "abelian<n>", "heis3", "heis5",
/// "aff1", "borel", "sl2". Throws std::invalid_argument otherwise.
LieAlgebra catalog_algebra(const std::string& name);
std::vector<std::string> catalog_names();

}  // namespace jumploci

namespace jumploci {

/// g = aH + bXp + cXm as the 2x2 matrix [[a, b], [c, -a]].
Matrix<Rational> sl2_to_matrix(const Vector<Rational>& g);
/// Inverse of sl2_to_matrix; throws if the matrix is not traceless.
Vector<Rational> sl2_from_matrix(const Matrix<Rational>& m);
/// det [[a, b], [c, -a]] = -a^2 - bc.
Rational sl2_det(const Vector<Rational>& g);

}  // namespace jumploci
