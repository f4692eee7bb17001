#include "jumploci/liealg/levi.hpp"

#include <stdexcept>

#include "jumploci/liealg/catalog.hpp"

namespace jumploci {

std::string levi_violation(const LeviInput& l) {
  if (auto r = validate(l.s); !r.ok) return "s: " + r.message;
  if (auto r = validate(l.g); !r.ok) return "g: " + r.message;
  if (l.action.size() != l.g.dim()) return "action needs one matrix per basis vector of g";
  for (std::size_t i = 0; i < l.action.size(); ++i) {
    const auto& a = l.action[i];
    if (a.rows() != l.s.dim() || a.cols() != l.s.dim()) return "action matrix has the wrong size";
    if (!is_derivation(l.s, a)) return "action of " + l.g.basis()[i] + " is not a derivation";
  }
  for (std::size_t i = 0; i < l.g.dim(); ++i)
    for (std::size_t j = i + 1; j < l.g.dim(); ++j) {
      Matrix<Rational> lhs(l.s.dim(), l.s.dim(), Rational(0));
      const auto& c = l.g.bracket(i, j);
      for (std::size_t k = 0; k < l.g.dim(); ++k)
        if (c[k] != 0) lhs += l.action[k].scaled(c[k]);
      if (lhs != l.action[i] * l.action[j] - l.action[j] * l.action[i])
        return "action is not a Lie homomorphism on (" + l.g.basis()[i] + ", " + l.g.basis()[j] + ")";
    }
  if (!is_solvable(l.s)) return "s is not solvable";
  return {};
}

LieAlgebra semidirect(const LeviInput& l) {
  const std::size_t m = l.s.dim(), n = l.g.dim();
  std::vector<std::string> names = l.s.basis();
  names.insert(names.end(), l.g.basis().begin(), l.g.basis().end());
  LieAlgebra h(names);
  for (std::size_t i = 0; i < m + n; ++i)
    for (std::size_t j = i + 1; j < m + n; ++j) {
      Vector<Rational> v(m + n, Rational(0));
      if (j < m) {
        const auto& b = l.s.bracket(i, j);
        std::copy(b.begin(), b.end(), v.begin());
      } else if (i >= m) {
        const auto& b = l.g.bracket(i - m, j - m);
        std::copy(b.begin(), b.end(), v.begin() + static_cast<long>(m));
      } else {
        // [x_i, y_j] = -alpha(y_j) x_i
        for (std::size_t k = 0; k < m; ++k) v[k] = -l.action[j - m](k, i);
      }
      h.set_bracket(i, j, v);
    }
  return h;
}

Quotient tilde_quotient(const LeviInput& l) {
  std::vector<Vector<Rational>> gens;
  for (const auto& a : l.action)
    for (std::size_t i = 0; i < l.s.dim(); ++i) gens.push_back(a.col(i));
  return quotient(l.s, ideal_closure(l.s, gens));
}

LeviInput abelian_sl2_module(const std::vector<Matrix<Rational>>& theta) {
  if (theta.size() != 3) throw std::invalid_argument("abelian_sl2_module: three matrices required");
  LeviInput l;
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= theta[0].rows(); ++i) names.push_back("s" + std::to_string(i));
  l.s = LieAlgebra(names);
  l.g = sl2();
  l.action = theta;
  return l;
}

}  // namespace jumploci
