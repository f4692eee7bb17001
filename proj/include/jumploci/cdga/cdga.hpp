#pragma once

#include <string>
#include <utility>
#include <vector>

#include "jumploci/exactnum/linalg.hpp"
#include "jumploci/exactnum/matrix.hpp"
#include "jumploci/liealg/lie_algebra.hpp"

namespace jumploci {

using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

/// Finite connected commutative differential graded algebra over Q.
///
/// Degree 0 is spanned by the unit. Products of basis elements are stored
/// sparsely for every pair of degrees with i + j <= top degree; products
/// landing above the top degree vanish.
class CDGA {
 public:
  CDGA() = default;
  /// Zero products (apart from the unit) and zero differential.
  explicit CDGA(std::vector<std::vector<std::string>> basis);

  int top_degree() const { return static_cast<int>(basis_.size()) - 1; }
  std::size_t dim(int degree) const;
  std::size_t total_dim() const;
  const std::vector<std::string>& basis(int degree) const { return basis_.at(static_cast<std::size_t>(degree)); }
  /// (degree, index) of a basis element by name.
  std::pair<int, std::size_t> locate(const std::string& name) const;

  /// Sets e^i_a * e^j_b = value (in A^{i+j}). For i, j >= 1 the reversed
  /// product is filled in with the Koszul sign unless a == b and i == j.
  void set_product(int i, std::size_t a, int j, std::size_t b, SparseVec value);
  const SparseVec& product(int i, std::size_t a, int j, std::size_t b) const;
  Vector<Rational> multiply(int i, const Vector<Rational>& x, int j, const Vector<Rational>& y) const;
  /// Matrix of left multiplication by x in A^i, as a map A^j -> A^{i+j}.
  Matrix<Rational> left_multiplication(int i, const Vector<Rational>& x, int j) const;

  /// d^i : A^i -> A^{i+1} as a dim(i+1) x dim(i) matrix.
  void set_differential(int i, Matrix<Rational> d);
  const Matrix<Rational>& d(int i) const;

 private:
  std::size_t block(int i, int j) const { return static_cast<std::size_t>(i) * basis_.size() + static_cast<std::size_t>(j); }
  std::vector<std::vector<std::string>> basis_;
  // products_[block(i,j)][a * dim(j) + b]; empty blocks for i + j > top.
  std::vector<std::vector<SparseVec>> products_;
  std::vector<Matrix<Rational>> d_;
  // d^top maps to the zero space.
  Matrix<Rational> empty_;
};

/// Empty when A is a valid connected CDGA; otherwise the first violation.
/// Associativity is checked only when the total dimension is at most 64.
std::string cdga_violation(const CDGA& a);

/// Exterior algebra on h* with the CE differential d xi(x, y) = -xi([x, y]).
/// Degree-p basis: sorted index subsets in lexicographic order, named like
/// "u*^x*".
CDGA chevalley_eilenberg(const LieAlgebra& h);

/// Sorted index subsets of {0..n-1} of size p, in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t p);

/// H^*(C \ {n points}) with zero differential: A^1 of dimension n.
CDGA free_model(std::size_t n);

/// dim H^i = dim ker d^i - rank d^{i-1}, for 0 <= i <= top degree.
std::vector<std::size_t> betti(const CDGA& a);

/// Coordinates of the closed 1-forms (kernel basis of d^1).
std::vector<Vector<Rational>> closed_one_forms(const CDGA& a);

}  // namespace jumploci
