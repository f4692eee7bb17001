#include "jumploci/conn/hom.hpp"

#include <algorithm>
#include <set>

#include "jumploci/exactnum/factor.hpp"

namespace jumploci {

namespace {

// R(x) = prod over the distinct nonzero roots mu of q of (x + mu^2/4).
UPoly shifted_square_poly(const UPoly& char_poly) {
  UPoly q(Rational(1));
  for (const auto& part : squarefree_decomposition(char_poly)) q *= part.poly;
  while (q.degree() > 0 && q.coeff(0) == 0) q = q / UPoly::x();
  const int n = q.degree();
  if (n <= 0) return UPoly(Rational(1));
  // q(y) q(-y) = (-1)^n prod (y^2 - mu^2) is even; E(Y) collects its even part.
  UPoly qm = q.compose(UPoly(std::vector<Rational>{0, -1}));
  UPoly prod = q * qm;
  std::vector<Rational> e;
  for (std::size_t k = 0; k < prod.coeffs().size(); k += 2) e.push_back(prod.coeffs()[k]);
  UPoly E = UPoly(e).monic();
  // R(x) = E(-4x) / (-4)^n.
  return E.compose(UPoly(std::vector<Rational>{0, -4})).monic();
}

MultiPoly compose_with(const UPoly& r, const MultiPoly& x) {
  MultiPoly acc = MultiPoly::constant(x.variables(), 0);
  for (std::size_t k = r.coeffs().size(); k-- > 0;) acc = acc * x + MultiPoly(r.coeffs()[k]);
  return acc;
}

}  // namespace

std::string hom_variable(const LieAlgebra& h, std::size_t i, const LieAlgebra& k, std::size_t j) {
  return h.basis().at(i) + "." + k.basis().at(j);
}

std::vector<std::string> hom_variables(const LieAlgebra& h, const LieAlgebra& k) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = 0; j < k.dim(); ++j) out.push_back(hom_variable(h, i, k, j));
  return out;
}

std::vector<Rational> hom_point(const GOneForm& phi) { return phi.data(); }

Rational eval_on_hom(const MultiPoly& f, const LieAlgebra& h, const LieAlgebra& k, const GOneForm& phi) {
  return f.with_variables(hom_variables(h, k)).eval(hom_point(phi));
}

MultiPoly det_of_image(const LieAlgebra& h, const Vector<Rational>& x) {
  LieAlgebra k = sl2();
  auto vars = hom_variables(h, k);
  std::vector<MultiPoly> abc(3, MultiPoly(vars));
  for (std::size_t i = 0; i < h.dim(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < 3; ++j) abc[j] += MultiPoly::variable(vars, i * 3 + j) * MultiPoly(x[i]);
  }
  return -(abc[0] * abc[0]) - abc[1] * abc[2];
}

GOneForm metabelian_family(const std::vector<JordanBlock>& blocks, const Rational& lambda, int epsilon,
                           const std::vector<Rational>& t) {
  if (epsilon != 1 && epsilon != -1) throw std::invalid_argument("metabelian_family: epsilon must be +1 or -1");
  if (lambda == 0) throw std::invalid_argument("metabelian_family: lambda must be nonzero");
  bool is_eigen = std::any_of(blocks.begin(), blocks.end(), [&](const JordanBlock& b) { return b.lambda == lambda; });
  if (!is_eigen) throw std::invalid_argument("metabelian_family: lambda is not an eigenvalue");
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size;
  if (t.size() != n) throw std::invalid_argument("metabelian_family: t needs one entry per z basis vector");
  bool some_last = false;
  std::size_t start = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.size; ++i) {
      const Rational& ti = t[start + i];
      if (ti == 0) continue;
      if (b.lambda != lambda) throw std::invalid_argument("metabelian_family: t must vanish off the lambda-blocks");
      if (i + 1 < b.size) throw std::invalid_argument("metabelian_family: t_i must vanish for i < r");
      some_last = true;
    }
    start += b.size;
  }
  if (!some_last) throw std::invalid_argument("metabelian_family: some t_r must be nonzero");
  GOneForm phi(n + 1, 3, Rational(0));
  phi(n, 0) = lambda / (2 * epsilon);
  for (std::size_t i = 0; i < n; ++i) phi(i, epsilon == 1 ? 1 : 2) = t[i];
  return phi;
}

MultiPoly metabelian_certificate(const std::vector<JordanBlock>& blocks) {
  std::set<Rational> eig;
  for (const auto& b : blocks)
    if (b.lambda != 0) eig.insert(b.lambda);
  if (eig.empty()) throw NilpotentInput("metabelian_certificate: all eigenvalues vanish");
  std::vector<std::string> vars{"u.H", "u.Xp", "u.Xm"};
  MultiPoly a = MultiPoly::variable(vars, 0), b = MultiPoly::variable(vars, 1), c = MultiPoly::variable(vars, 2);
  MultiPoly det = -(a * a) - b * c;
  MultiPoly f = MultiPoly::constant(vars, 1);
  for (const auto& l : eig) f *= det + MultiPoly(Rational(l * l / 4));
  return f;
}

GOneForm conjugate_sl2(const GOneForm& phi, const Matrix<Rational>& p) {
  Matrix<Rational> pinv = inverse(p);
  GOneForm out(phi.rows(), phi.cols(), Rational(0));
  for (std::size_t r = 0; r < phi.rows(); ++r) {
    auto v = sl2_from_matrix(pinv * sl2_to_matrix(phi.row(r)) * p);
    for (std::size_t j = 0; j < 3; ++j) out(r, j) = v[j];
  }
  return out;
}

MetabelianClassification classify_metabelian_hom(const std::vector<JordanBlock>& blocks, const GOneForm& phi) {
  MetabelianClassification out;
  out.image_rank = image_rank(phi);
  if (out.image_rank <= 1) {
    out.reason = "rank one";
    return out;
  }
  const std::size_t n = phi.rows() - 1;
  auto u = phi.row(n);
  Rational det = sl2_det(u);
  if (det == 0) {
    out.reason = "det phi(u) = 0";
    return out;
  }
  QuadScalar mu = QuadScalar::sqrt_of(-det);
  if (!mu.is_rational()) {
    out.reason = "eigenvalues of phi(u) are irrational";
    return out;
  }
  Rational m = mu.rational_part();
  if (m < 0) m = -m;
  Matrix<Rational> U = sl2_to_matrix(u);
  Matrix<Rational> p(2, 2, Rational(0));
  for (int sgn : {1, -1}) {
    Matrix<Rational> shifted = U - Matrix<Rational>::identity(2).scaled(Rational(sgn * m));
    auto ker = kernel_basis(shifted);
    std::size_t col = sgn == 1 ? 0 : 1;
    p(0, col) = ker.at(0)[0];
    p(1, col) = ker.at(0)[1];
  }
  GOneForm conj = conjugate_sl2(phi, p);
  // Common direction of the images of V.
  int epsilon = 0;
  for (std::size_t i = 0; i < n; ++i) {
    auto z = conj.row(i);
    if (z[0] == 0 && z[1] == 0 && z[2] == 0) continue;
    int e = 0;
    if (z[0] == 0 && z[2] == 0) e = 1;
    else if (z[0] == 0 && z[1] == 0) e = -1;
    if (e == 0 || (epsilon != 0 && e != epsilon)) {
      out.reason = "image of V is not along a single X_eps";
      return out;
    }
    epsilon = e;
  }
  if (epsilon == 0) {
    out.reason = "phi vanishes on V";
    return out;
  }
  out.epsilon = epsilon;
  out.lambda = 2 * epsilon * m;
  for (std::size_t i = 0; i < n; ++i) out.t.push_back(conj(i, epsilon == 1 ? 1 : 2));
  out.conjugator = p;
  try {
    GOneForm fam = metabelian_family(blocks, out.lambda, epsilon, out.t);
    out.in_family = fam == conj;
    if (!out.in_family) out.reason = "normal form differs from the family member";
  } catch (const std::invalid_argument& e) {
    out.reason = e.what();
  }
  return out;
}

bool ClosedSubset::contains(const LieAlgebra& s, const GOneForm& phi) const {
  LieAlgebra k = sl2();
  for (const auto& comp : components) {
    bool all = true;
    for (const auto& f : comp)
      if (eval_on_hom(f, s, k, phi) != 0) {
        all = false;
        break;
      }
    if (all) return true;
  }
  return false;
}

bool ClosedSubset::contains_origin() const {
  for (const auto& comp : components) {
    bool all = true;
    for (const auto& f : comp)
      if (f.constant_term() != 0) all = false;
    if (all) return true;
  }
  return false;
}

ClosedSubset solvable_certificate(const LieAlgebra& s) {
  if (!is_solvable(s)) throw std::invalid_argument("solvable_certificate: algebra is not solvable");
  ClosedSubset out;
  if (is_nilpotent(s)) return out;
  auto series = derived_series(s);
  const auto& v = series[series.size() - 2];
  Quotient q = quotient(s, v);
  LieAlgebra k = sl2();
  auto vars = hom_variables(s, k);

  // p* W': quotient basis names coincide with the complement basis names of s.
  ClosedSubset inner = solvable_certificate(q.algebra);
  std::vector<MultiPoly> vanish_on_v;
  for (const auto& vec : v)
    for (std::size_t j = 0; j < 3; ++j) {
      MultiPoly lin(vars);
      for (std::size_t i = 0; i < s.dim(); ++i)
        if (vec[i] != 0) lin += MultiPoly::variable(vars, i * 3 + j) * MultiPoly(vec[i]);
      vanish_on_v.push_back(lin);
    }
  for (const auto& comp : inner.components) {
    std::vector<MultiPoly> eqs = vanish_on_v;
    for (const auto& f : comp) eqs.push_back(f.with_variables(vars));
    out.components.push_back(eqs);
  }

  // f_i on each non-nilpotent V (x) C u_i.
  Matrix<Rational> vbasis(s.dim(), v.size(), Rational(0));
  for (std::size_t c = 0; c < v.size(); ++c)
    for (std::size_t r = 0; r < s.dim(); ++r) vbasis(r, c) = v[c][r];
  MultiPoly F = MultiPoly::constant(vars, 1);
  bool any = false;
  for (const auto& name : q.algebra.basis()) {
    std::size_t ui = *s.index_of(name);
    Matrix<Rational> alpha(v.size(), v.size(), Rational(0));
    for (std::size_t c = 0; c < v.size(); ++c) {
      auto img = s.bracket(s.unit(ui), v[c]);
      Vector<Rational> coords;
      if (!solve_field(vbasis, img, coords)) throw std::logic_error("derived term is not an ideal");
      for (std::size_t r = 0; r < v.size(); ++r) alpha(r, c) = coords[r];
    }
    UPoly r = shifted_square_poly(char_poly(alpha));
    if (r.degree() <= 0) continue;
    any = true;
    F *= compose_with(r, det_of_image(s, s.unit(ui)));
  }
  if (any) out.components.push_back({F});
  return out;
}

GOneForm q_map(const LeviInput& l, const Quotient& tilde, const GOneForm& phi_tilde) {
  const std::size_t m = l.s.dim(), n = l.g.dim();
  if (phi_tilde.rows() != tilde.algebra.dim()) throw std::invalid_argument("q_map: dimension mismatch");
  GOneForm phi(m + n, phi_tilde.cols(), Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < phi_tilde.cols(); ++j)
      for (std::size_t a = 0; a < tilde.algebra.dim(); ++a) phi(i, j) += tilde.projection(a, i) * phi_tilde(a, j);
  return phi;
}

}  // namespace jumploci
