#include "jumploci/conn/flat.hpp"

#include <stdexcept>

namespace jumploci {

Matrix<Rational> mc_defect(const CDGA& a, const LieAlgebra& g, const GOneForm& omega) {
  if (omega.rows() != a.dim(1) || omega.cols() != g.dim()) throw std::invalid_argument("mc_defect: dimension mismatch");
  const std::size_t n2 = a.dim(2);
  Matrix<Rational> out(n2, g.dim(), Rational(0));
  if (n2 == 0) return out;
  for (std::size_t r = 0; r < omega.rows(); ++r) {
    auto w = omega.row(r);
    for (std::size_t k = 0; k < n2; ++k) {
      Rational dk = a.d(1)(k, r);
      if (dk == 0) continue;
      for (std::size_t j = 0; j < g.dim(); ++j) out(k, j) += dk * w[j];
    }
  }
  for (std::size_t r = 0; r < omega.rows(); ++r)
    for (std::size_t s = r + 1; s < omega.rows(); ++s) {
      auto br = g.bracket(omega.row(r), omega.row(s));
      for (const auto& [k, c] : a.product(1, r, 1, s))
        for (std::size_t j = 0; j < g.dim(); ++j) out(k, j) += c * br[j];
    }
  return out;
}

bool is_flat(const CDGA& a, const LieAlgebra& g, const GOneForm& omega) { return mc_defect(a, g, omega).is_zero(); }

GOneForm segre(const Vector<Rational>& eta, const Vector<Rational>& g) {
  GOneForm m(eta.size(), g.size(), Rational(0));
  for (std::size_t i = 0; i < eta.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) m(i, j) = eta[i] * g[j];
  return m;
}

bool split_rank_one(const GOneForm& omega, Vector<Rational>& eta, Vector<Rational>& g) {
  if (omega.is_zero() || rank(omega) != 1) return false;
  std::size_t col = 0;
  while (omega.col(col) == Vector<Rational>(omega.rows(), Rational(0))) ++col;
  eta = omega.col(col);
  std::size_t row = 0;
  while (eta[row] == 0) ++row;
  g = omega.row(row);
  for (auto& x : g) x /= eta[row];
  return true;
}

bool in_F1(const CDGA& a, const GOneForm& omega) {
  if (omega.is_zero()) return true;
  Vector<Rational> eta, g;
  if (!split_rank_one(omega, eta, g)) return false;
  if (a.top_degree() < 2) return true;
  for (const auto& x : a.d(1).apply(eta))
    if (x != 0) return false;
  return true;
}

}  // namespace jumploci
