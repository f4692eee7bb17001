#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "jumploci/exactnum/linalg.hpp"
#include "jumploci/exactnum/matrix.hpp"
#include "jumploci/exactnum/rational.hpp"

namespace jumploci {

/// Finite-dimensional Lie algebra over Q given by structure constants
/// [e_i, e_j] = sum_k c^k_ij e_k. The full antisymmetric table is stored.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  /// Abelian algebra on the given basis names.
  explicit LieAlgebra(std::vector<std::string> basis);

  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::string>& basis() const { return basis_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  /// Sets [e_i, e_j] = value and [e_j, e_i] = -value. Throws for i == j
  /// unless value is zero.
  void set_bracket(std::size_t i, std::size_t j, const Vector<Rational>& value);
  const Vector<Rational>& bracket(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  Rational structure_constant(std::size_t i, std::size_t j, std::size_t k) const { return bracket(i, j)[k]; }

  Vector<Rational> bracket(const Vector<Rational>& x, const Vector<Rational>& y) const;
  /// Matrix of ad(x) in the standard basis.
  Matrix<Rational> ad(const Vector<Rational>& x) const;
  Matrix<Rational> ad(std::size_t i) const;
  Vector<Rational> unit(std::size_t i) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.basis_ == b.basis_ && a.table_ == b.table_;
  }

 private:
  std::vector<std::string> basis_;
  std::vector<Vector<Rational>> table_;
};

struct ValidationReport {
  bool ok = true;
  /// First basis triple (i, j, k) on which the Jacobi identity fails.
  std::optional<std::array<std::size_t, 3>> failing_triple;
  std::string message;
};

/// Checks antisymmetry and the Jacobi identity on all basis triples.
ValidationReport validate(const LieAlgebra& h);

/// Basis (echelon form) of the span of all brackets [x, y] with x in a, y in b.
std::vector<Vector<Rational>> bracket_span(const LieAlgebra& h, const std::vector<Vector<Rational>>& a,
                                           const std::vector<Vector<Rational>>& b);
std::vector<Vector<Rational>> full_space(std::size_t dim);

/// h = D^0 > D^1 > ... until stabilization; the last entry is the limit.
std::vector<std::vector<Vector<Rational>>> derived_series(const LieAlgebra& h);
std::vector<std::vector<Vector<Rational>>> lower_central_series(const LieAlgebra& h);
bool is_solvable(const LieAlgebra& h);
bool is_nilpotent(const LieAlgebra& h);

struct H1Data {
  std::size_t dim = 0;
  /// Basis of the annihilator of [h, h] in h*, as coordinate vectors.
  std::vector<Vector<Rational>> dual_basis;
};
H1Data h1(const LieAlgebra& h);
inline std::size_t h1_dim(const LieAlgebra& h) { return h1(h).dim; }

/// True iff x (as a matrix of a linear map h -> h) is a derivation.
bool is_derivation(const LieAlgebra& h, const Matrix<Rational>& d);

/// Quotient of h by an ideal. The complement is spanned by the standard
/// basis vectors at the non-pivot columns of the ideal's echelon form.
struct Quotient {
  LieAlgebra algebra;
  /// dim(quotient) x dim(h) matrix of the projection.
  Matrix<Rational> projection;
};
Quotient quotient(const LieAlgebra& h, const std::vector<Vector<Rational>>& ideal);

/// Smallest ideal containing the given vectors.
std::vector<Vector<Rational>> ideal_closure(const LieAlgebra& h, std::vector<Vector<Rational>> gens);

/// Checks that `phi` (rows indexed by target basis, columns by source basis)
/// maps brackets to brackets.
bool is_homomorphism(const LieAlgebra& source, const LieAlgebra& target, const Matrix<Rational>& phi);

}  // namespace jumploci
