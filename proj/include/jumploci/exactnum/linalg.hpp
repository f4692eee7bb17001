#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "jumploci/exactnum/matrix.hpp"
#include "jumploci/exactnum/quad_scalar.hpp"
#include "jumploci/exactnum/rational.hpp"
#include "jumploci/exactnum/upoly.hpp"

namespace jumploci {

template <class T>
using Vector = std::vector<T>;

// ---------------------------------------------------------------------------
// Rank, kernels, determinants
// ---------------------------------------------------------------------------

/// Exact rank over Q. Rows are scaled to integers and reduced by
/// fraction-free (Bareiss) elimination.
std::size_t rank(const Matrix<Rational>& m);
std::size_t rank(const Matrix<Integer>& m);
/// Rank over Q(sqrt d).
std::size_t rank(const Matrix<QuadScalar>& m);
/// Rank over the fraction field Q(x), i.e. the generic rank of a matrix
/// depending polynomially on one parameter.
std::size_t rank(const Matrix<UPoly>& m);

/// Basis of the right null space; empty iff the matrix is injective.
std::vector<Vector<Rational>> kernel_basis(const Matrix<Rational>& m);
std::vector<Vector<QuadScalar>> kernel_basis(const Matrix<QuadScalar>& m);

Rational determinant(const Matrix<Rational>& m);
/// Inverse over Q; throws std::domain_error when singular.
Matrix<Rational> inverse(const Matrix<Rational>& m);
Matrix<QuadScalar> inverse(const Matrix<QuadScalar>& m);

/// Row-reduced echelon form over a field, in place; returns pivot columns.
template <class T>
std::vector<std::size_t> rref_in_place(Matrix<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const T zero = T(0);
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == zero) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    T inv = T(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == zero) continue;
      T f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Kernel of a matrix over a field via RREF.
template <class T>
std::vector<Vector<T>> kernel_basis_field(Matrix<T> m) {
  auto pivots = rref_in_place(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector<T>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector<T> v(m.cols(), T(0));
    v[free] = T(1);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves m * x = b over a field; returns false when inconsistent.
template <class T>
bool solve_field(const Matrix<T>& m, const Vector<T>& b, Vector<T>& x) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: length mismatch");
  Matrix<T> aug(m.rows(), m.cols() + 1, T(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return false;
  x.assign(m.cols(), T(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, m.cols());
  return true;
}

/// Basis (as rows) of the span of the given vectors, in echelon form.
template <class T>
std::vector<Vector<T>> span_basis(const std::vector<Vector<T>>& vectors, std::size_t dim) {
  if (vectors.empty()) return {};
  Matrix<T> m(vectors.size(), dim, T(0));
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = vectors[i][j];
  auto pivots = rref_in_place(m);
  std::vector<Vector<T>> out;
  for (std::size_t k = 0; k < pivots.size(); ++k) out.push_back(m.row(k));
  return out;
}

// ---------------------------------------------------------------------------
// Characteristic polynomials
// ---------------------------------------------------------------------------

/// Berkowitz's division-free algorithm. Returns c_0..c_n with
/// det(x I - m) = c_0 x^n + c_1 x^{n-1} + ... + c_n (c_0 = one). Works over
/// any commutative ring, including polynomial rings.
template <class T>
std::vector<T> berkowitz(const Matrix<T>& m, const T& zero, const T& one) {
  if (!m.is_square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<T> c{one};
  for (std::size_t r = 0; r < n; ++r) {
    // q = [1, -a_rr, -R S, -R A S, ..., -R A^{r-1} S]
    std::vector<T> q;
    q.reserve(r + 2);
    q.push_back(one);
    q.push_back(zero - m(r, r));
    std::vector<T> s(r, zero);
    for (std::size_t i = 0; i < r; ++i) s[i] = m(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      T rs = zero;
      for (std::size_t i = 0; i < r; ++i) rs += m(r, i) * s[i];
      q.push_back(zero - rs);
      if (k + 1 < r) {
        std::vector<T> next(r, zero);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) next[i] += m(i, j) * s[j];
        s = std::move(next);
      }
    }
    std::vector<T> nc(r + 2, zero);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) nc[i] += q[i - j] * c[j];
    c = std::move(nc);
  }
  return c;
}

/// Monic det(x I - m).
UPoly char_poly(const Matrix<Rational>& m);

// ---------------------------------------------------------------------------
// Matrices over Q[x]
// ---------------------------------------------------------------------------

struct DeterminantalDivisor {
  std::size_t rank = 0;
  /// Monic gcd of all rank-sized minors (1 when rank is 0).
  UPoly divisor;
};

/// Diagonalizes by unimodular row and column operations over Q[x]; the
/// product of the diagonal is the gcd of the maximal nonvanishing minors.
DeterminantalDivisor determinantal_divisor(Matrix<UPoly> m);

}  // namespace jumploci
