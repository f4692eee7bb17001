#include "jumploci/exactnum/smith.hpp"

#include <algorithm>
#include <stdexcept>

#include "jumploci/exactnum/linalg.hpp"

namespace jumploci {

namespace {

void add_row_multiple(Matrix<Integer>& m, std::size_t dst, std::size_t src, const Integer& f) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += f * m(src, j);
}

void add_col_multiple(Matrix<Integer>& m, std::size_t dst, std::size_t src, const Integer& f) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += f * m(i, src);
}

}  // namespace

SmithForm smith_normal_form(const Matrix<Integer>& input) {
  const std::size_t rows = input.rows(), cols = input.cols();
  SmithForm s{Matrix<Integer>::identity(rows), input, Matrix<Integer>::identity(cols)};
  Matrix<Integer>& D = s.D;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Move the smallest nonzero |entry| of the trailing block to (t, t).
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (D(i, j) != 0 && (pr == rows || abs(D(i, j)) < abs(D(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) break;
      D.swap_rows(t, pr);
      s.U.swap_rows(t, pr);
      D.swap_cols(t, pc);
      s.V.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (D(i, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
        Integer f = -q;
        add_row_multiple(D, i, t, f);
        add_row_multiple(s.U, i, t, f);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (D(t, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
        Integer f = -q;
        add_col_multiple(D, j, t, f);
        add_col_multiple(s.V, j, t, f);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into row t and go again.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      add_row_multiple(D, t, bad, Integer(1));
      add_row_multiple(s.U, t, bad, Integer(1));
    }
    if (D(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) D(t, j) = -D(t, j);
      for (std::size_t j = 0; j < rows; ++j) s.U(t, j) = -s.U(t, j);
    }
  }
  return s;
}

Integer integer_determinant(const Matrix<Integer>& m) {
  Matrix<Rational> q = m.map<Rational>([](const Integer& z) { return Rational(z); });
  Rational d = determinant(q);
  return d.get_num();
}

}  // namespace jumploci
