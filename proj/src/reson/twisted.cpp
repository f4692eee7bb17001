#include "jumploci/reson/twisted.hpp"

#include "jumploci/exactnum/linalg.hpp"
#include "jumploci/liealg/catalog.hpp"

namespace jumploci {

Matrix<Rational> twisted_differential(const CDGA& a, const std::vector<Matrix<Rational>>& ops, int i) {
  if (ops.size() != a.dim(1)) throw std::invalid_argument("twisted_differential: one operator per basis 1-form expected");
  std::size_t n = ops.empty() ? 0 : ops[0].rows();
  for (const auto& op : ops)
    if (op.rows() != n || op.cols() != n) throw std::invalid_argument("twisted_differential: operator size mismatch");
  if (ops.empty()) throw std::invalid_argument("twisted_differential: A^1 = 0 leaves V undetermined");
  std::size_t src = a.dim(i);
  std::size_t dst = i + 1 <= a.top_degree() ? a.dim(i + 1) : 0;
  Matrix<Rational> m(dst * n, src * n, Rational(0));
  if (dst == 0) return m;
  const Matrix<Rational>& d = a.d(i);
  for (std::size_t p = 0; p < src; ++p)
    for (std::size_t q = 0; q < dst; ++q)
      if (d(q, p) != 0)
        for (std::size_t v = 0; v < n; ++v) m(q * n + v, p * n + v) += d(q, p);
  for (std::size_t r = 0; r < ops.size(); ++r)
    for (std::size_t p = 0; p < src; ++p)
      for (const auto& [q, coeff] : a.product(1, r, i, p))
        for (std::size_t w = 0; w < n; ++w)
          for (std::size_t v = 0; v < n; ++v)
            if (ops[r](w, v) != 0) m(q * n + w, p * n + v) += coeff * ops[r](w, v);
  return m;
}

std::vector<std::size_t> twisted_complex_dims(const CDGA& a, const std::vector<Matrix<Rational>>& ops) {
  int top = a.top_degree();
  std::vector<Matrix<Rational>> d;
  for (int i = 0; i <= top; ++i) d.push_back(twisted_differential(a, ops, i));
  for (int i = 0; i + 1 <= top; ++i)
    if (!(d[static_cast<std::size_t>(i) + 1] * d[static_cast<std::size_t>(i)]).is_zero())
      throw NotFlat("twisted differential does not square to zero in degree " + std::to_string(i));
  std::size_t n = ops[0].rows();
  std::vector<std::size_t> out;
  std::size_t prev = 0;
  for (int i = 0; i <= top; ++i) {
    std::size_t r = rank(d[static_cast<std::size_t>(i)]);
    out.push_back(a.dim(i) * n - r - prev);
    prev = r;
  }
  return out;
}

std::vector<Matrix<Rational>> connection_operators(const Sl2Rep& rep, const GOneForm& omega) {
  if (omega.cols() != 3) throw std::invalid_argument("connection_operators: omega must be sl2-valued");
  std::vector<Matrix<Rational>> ops;
  for (std::size_t r = 0; r < omega.rows(); ++r) ops.push_back(rep.apply(omega.row(r)));
  return ops;
}

std::vector<std::size_t> twisted_dims(const CDGA& a, const Sl2Rep& rep, const GOneForm& omega) {
  if (omega.rows() != a.dim(1)) throw std::invalid_argument("twisted_dims: omega has the wrong number of rows");
  if (!is_flat(a, sl2(), omega)) throw NotFlat("omega does not satisfy the Maurer-Cartan equation");
  auto why = sl2_rep_violation(rep);
  if (!why.empty()) throw std::invalid_argument("twisted_dims: " + why);
  return twisted_complex_dims(a, connection_operators(rep, omega));
}

std::size_t lie_cohomology(const LieAlgebra& h, const std::vector<Matrix<Rational>>& rho, int i) {
  std::size_t n = h.dim();
  if (rho.size() != n) throw NotAModule("one matrix per basis element expected");
  if (n == 0) return i == 0 && !rho.empty() ? rho[0].rows() : 0;
  std::size_t m = rho[0].rows();
  for (const auto& r : rho)
    if (r.rows() != m || r.cols() != m) throw NotAModule("module matrices must be square of a common size");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Matrix<Rational> lhs = rho[a] * rho[b] - rho[b] * rho[a];
      Matrix<Rational> rhs(m, m, Rational(0));
      auto br = h.bracket(a, b);
      for (std::size_t k = 0; k < n; ++k)
        if (br[k] != 0) rhs += rho[k].scaled(br[k]);
      if (lhs != rhs) throw NotAModule("rho does not respect the bracket of " + h.basis()[a] + " and " + h.basis()[b]);
    }
  if (i < 0 || static_cast<std::size_t>(i) > n) return 0;
  // The Maurer-Cartan form of h: xi_r paired with rho(e_r).
  return twisted_complex_dims(chevalley_eilenberg(h), rho)[static_cast<std::size_t>(i)];
}

}  // namespace jumploci
