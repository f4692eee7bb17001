#include "jumploci/exactnum/linalg.hpp"

#include <algorithm>

namespace jumploci {

namespace {

// Fraction-free elimination; entries after each step are minors of the
// original matrix, so the division by the previous pivot is exact.
std::size_t bareiss_rank_integer(Matrix<Integer> m) {
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    const Integer pivot = m(r, c);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const Integer lead = m(i, c);
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        Integer v = pivot * m(i, j) - lead * m(r, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(v);
      }
      m(i, c) = 0;
    }
    prev = pivot;
    ++r;
  }
  return r;
}

Matrix<Integer> integerize_rows(const Matrix<Rational>& m) {
  Matrix<Integer> out(m.rows(), m.cols(), Integer(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer den = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) den = lcm(den, m(i, j).get_den());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Integer v = m(i, j).get_num() * (den / m(i, j).get_den());
      out(i, j) = std::move(v);
    }
  }
  return out;
}

UPoly exact_quotient(const UPoly& a, const UPoly& b) {
  UPoly q, r;
  divmod(a, b, q, r);
  if (!r.is_zero()) throw std::logic_error("Bareiss over Q[x]: inexact division");
  return q;
}

}  // namespace

std::size_t rank(const Matrix<Integer>& m) { return bareiss_rank_integer(m); }

std::size_t rank(const Matrix<Rational>& m) { return bareiss_rank_integer(integerize_rows(m)); }

std::size_t rank(const Matrix<QuadScalar>& m) {
  Matrix<QuadScalar> copy = m;
  return rref_in_place(copy).size();
}

std::size_t rank(Matrix<UPoly> const& input) {
  Matrix<UPoly> m = input;
  std::size_t r = 0;
  UPoly prev(1);
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    const UPoly pivot = m(r, c);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const UPoly lead = m(i, c);
      for (std::size_t j = c + 1; j < m.cols(); ++j)
        m(i, j) = exact_quotient(pivot * m(i, j) - lead * m(r, j), prev);
      m(i, c) = UPoly();
    }
    prev = pivot;
    ++r;
  }
  return r;
}

std::vector<Vector<Rational>> kernel_basis(const Matrix<Rational>& m) { return kernel_basis_field(m); }

std::vector<Vector<QuadScalar>> kernel_basis(const Matrix<QuadScalar>& m) { return kernel_basis_field(m); }

Rational determinant(const Matrix<Rational>& input) {
  if (!input.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  Matrix<Integer> m = integerize_rows(input);
  Rational scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer den = 1;
    for (std::size_t j = 0; j < n; ++j) den = lcm(den, input(i, j).get_den());
    scale /= Rational(den);
  }
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      m.swap_rows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(v);
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  Rational det = Rational(m(n - 1, n - 1)) * scale;
  return sign < 0 ? Rational(-det) : det;
}

namespace {

template <class T>
Matrix<T> inverse_field(const Matrix<T>& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<T> aug(n, 2 * n, T(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(1);
  }
  auto pivots = rref_in_place(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw std::domain_error("inverse of a singular matrix");
  Matrix<T> inv(n, n, T(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

}  // namespace

Matrix<Rational> inverse(const Matrix<Rational>& m) { return inverse_field(m); }
Matrix<QuadScalar> inverse(const Matrix<QuadScalar>& m) { return inverse_field(m); }

UPoly char_poly(const Matrix<Rational>& m) {
  auto c = berkowitz<Rational>(m, Rational(0), Rational(1));
  std::vector<Rational> coeffs(c.rbegin(), c.rend());
  return UPoly(std::move(coeffs));
}

DeterminantalDivisor determinantal_divisor(Matrix<UPoly> m) {
  DeterminantalDivisor out;
  out.divisor = UPoly(1);
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Smallest-degree nonzero entry of the trailing block.
    auto pick = [&](bool whole_block, std::size_t& pr, std::size_t& pc) {
      int best = -1;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (!whole_block && i != t && j != t) continue;
          if (m(i, j).is_zero()) continue;
          if (best < 0 || m(i, j).degree() < best) {
            best = m(i, j).degree();
            pr = i;
            pc = j;
          }
        }
      return best >= 0;
    };
    std::size_t pr = 0, pc = 0;
    if (!pick(true, pr, pc)) break;
    m.swap_rows(t, pr);
    m.swap_cols(t, pc);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m(i, t).is_zero()) continue;
        UPoly q = m(i, t) / m(t, t);
        for (std::size_t j = t; j < cols; ++j) m(i, j) -= q * m(t, j);
        if (!m(i, t).is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m(t, j).is_zero()) continue;
        UPoly q = m(t, j) / m(t, t);
        for (std::size_t i = t; i < rows; ++i) m(i, j) -= q * m(i, t);
        if (!m(t, j).is_zero()) clean = false;
      }
      if (clean) break;
      pick(false, pr, pc);
      m.swap_rows(t, pr);
      m.swap_cols(t, pc);
    }
    out.divisor *= m(t, t);
    ++out.rank;
  }
  out.divisor = out.divisor.monic();
  return out;
}

}  // namespace jumploci
