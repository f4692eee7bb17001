#include "jumploci/reson/sl2rep.hpp"

#include <stdexcept>

#include "jumploci/exactnum/linalg.hpp"

namespace jumploci {

Matrix<Rational> Sl2Rep::apply(const Vector<Rational>& g) const {
  if (g.size() != 3) throw std::invalid_argument("Sl2Rep::apply: expected 3 coordinates");
  return theta[0].scaled(g[0]) + theta[1].scaled(g[1]) + theta[2].scaled(g[2]);
}

Sl2Rep sl2_irrep(std::size_t m) { return sl2_rep({m}); }

Sl2Rep sl2_rep(const std::vector<std::size_t>& dims) {
  std::size_t n = 0;
  for (auto m : dims) {
    if (m == 0) throw std::invalid_argument("sl2_rep: summand of dimension 0");
    n += m;
  }
  if (n == 0) throw std::invalid_argument("sl2_rep: zero representation");
  Sl2Rep rep;
  rep.summands = dims;
  for (auto& t : rep.theta) t = Matrix<Rational>(n, n, Rational(0));
  std::size_t off = 0;
  for (auto m : dims) {
    long ml = static_cast<long>(m);
    for (long k = 0; k < ml; ++k) {
      std::size_t i = off + static_cast<std::size_t>(k);
      rep.theta[0](i, i) = ml - 1 - 2 * k;
      if (k + 1 < ml) rep.theta[2](i + 1, i) = 1;
      if (k > 0) rep.theta[1](i - 1, i) = k * (ml - k);
    }
    off += m;
  }
  return rep;
}

std::string sl2_rep_violation(const Sl2Rep& rep) {
  std::size_t n = rep.theta[0].rows();
  if (n == 0) return "zero representation";
  for (const auto& t : rep.theta)
    if (t.rows() != n || t.cols() != n) return "matrices are not square of a common size";
  const auto& [h, xp, xm] = rep.theta;
  if (xp * xm - xm * xp != h) return "[X+, X-] != H";
  if (h * xp - xp * h != xp.scaled(Rational(2))) return "[H, X+] != 2 X+";
  if (h * xm - xm * h != xm.scaled(Rational(-2))) return "[H, X-] != -2 X-";
  return "";
}

MultiPoly det_theta(const Sl2Rep& rep) {
  auto cp = symbolic_char_poly(rep.theta);
  MultiPoly det = rep.dim() % 2 ? MultiPoly(0) - cp.back() : cp.back();
  return det.with_variables(sl2_coordinate_names());
}

std::vector<Rational> eigen_squares(const Sl2Rep& rep, const Vector<Rational>& g) {
  if (g.size() != 3) throw std::invalid_argument("eigen_squares: expected 3 coordinates");
  Rational mu2 = g[0] * g[0] + g[1] * g[2];
  std::vector<Rational> out;
  for (auto m : rep.summands) {
    long ml = static_cast<long>(m);
    for (long k = 0; k < ml; ++k) {
      long w = ml - 1 - 2 * k;
      out.push_back(Rational(w * w) * mu2);
    }
  }
  return out;
}

MultiPoly build_certificate(const MultiPoly& phi0, const Sl2Rep& rep) { return build_certificate(phi0, rep.theta); }

}  // namespace jumploci
