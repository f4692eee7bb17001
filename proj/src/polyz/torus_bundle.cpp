#include "jumploci/polyz/torus_bundle.hpp"

#include <algorithm>

#include "jumploci/exactnum/linalg.hpp"
#include "jumploci/exactnum/smith.hpp"

namespace jumploci {

namespace {

std::vector<std::vector<std::size_t>> sorted_subsets(std::size_t n, std::size_t q) {
  std::vector<std::vector<std::size_t>> out;
  if (q > n) return out;
  std::vector<std::size_t> cur(q);
  for (std::size_t k = 0; k < q; ++k) cur[k] = k;
  while (true) {
    out.push_back(cur);
    std::size_t k = q;
    while (k > 0 && cur[k - 1] == n - q + k - 1) --k;
    if (k == 0) break;
    ++cur[k - 1];
    for (std::size_t l = k; l < q; ++l) cur[l] = cur[l - 1] + 1;
  }
  return out;
}

Matrix<Rational> to_rational(const Matrix<Integer>& m) {
  Matrix<Rational> r(m.rows(), m.cols(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

void add_value(std::vector<CharPoint>& points, const CharValue& v, std::size_t q) {
  for (auto& p : points)
    if (p.lambda == v) {
      if (std::find(p.provenance.begin(), p.provenance.end(), q) == p.provenance.end()) p.provenance.push_back(q);
      return;
    }
  points.push_back({v, {q}});
}

}  // namespace

TorusBundleGroup torus_bundle(const Matrix<Integer>& a) {
  if (!a.is_square() || a.rows() == 0) throw std::invalid_argument("torus_bundle: A must be a nonempty square matrix");
  Integer det = integer_determinant(a);
  if (det != 1 && det != -1) throw std::invalid_argument("torus_bundle: det A = " + det.get_str() + " is not +-1");
  return {a.rows(), a};
}

std::string CharacterTorus::description() const {
  std::string s = "(C*)^" + std::to_string(dimension());
  for (const auto& t : torsion) s += " x mu_" + t.get_str();
  return s;
}

CharacterTorus character_torus(const TorusBundleGroup& g) {
  Matrix<Integer> m = g.a;
  for (std::size_t i = 0; i < g.n; ++i) m(i, i) -= 1;
  SmithForm sf = smith_normal_form(m);
  CharacterTorus out;
  for (std::size_t i = 0; i < g.n; ++i) {
    Integer d = sf.D(i, i);
    out.smith_diagonal.push_back(d);
    if (d == 0) ++out.free_rank;
    else if (d > 1) out.torsion.push_back(d);
  }
  return out;
}

Matrix<Rational> exterior_power(const Matrix<Rational>& a, std::size_t q) {
  if (!a.is_square()) throw std::invalid_argument("exterior_power: square matrix expected");
  std::size_t n = a.rows();
  if (q > n) throw std::invalid_argument("exterior_power: q exceeds the size");
  auto sets = sorted_subsets(n, q);
  Matrix<Rational> out(sets.size(), sets.size(), Rational(0));
  for (std::size_t r = 0; r < sets.size(); ++r)
    for (std::size_t c = 0; c < sets.size(); ++c) {
      Matrix<Rational> minor(q, q, Rational(0));
      for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) minor(i, j) = a(sets[r][i], sets[c][j]);
      out(r, c) = q == 0 ? Rational(1) : determinant(minor);
    }
  return out;
}

std::string CharValue::to_string() const { return rational ? value.get_str() : "root of " + factor.to_string("x"); }

std::vector<QuadScalar> CharValue::explicit_values() const {
  if (rational) return {QuadScalar(value)};
  if (factor.degree() != 2) return {};
  auto [r1, r2] = quadratic_roots(factor);
  return {r1, r2};
}

bool CharVariety::contains(const QuadScalar& lambda) const {
  for (const auto& p : points) {
    if (p.lambda.rational) {
      if (lambda == QuadScalar(p.lambda.value)) return true;
      continue;
    }
    for (const auto& r : p.lambda.explicit_values())
      if (r == lambda) return true;
  }
  return false;
}

CharVariety charvar(const TorusBundleGroup& g, int i) {
  int n = static_cast<int>(g.n);
  if (i < 0 || i > n + 1)
    throw DegreeOutOfRange("charvar: degree " + std::to_string(i) + " outside 0.." + std::to_string(n + 1));
  CharVariety out;
  out.degree = i;
  Matrix<Rational> a = to_rational(g.a);
  for (int q : {i - 1, i}) {
    if (q < 0 || q > n) continue;
    FactoredPoly f = eigen_factors(exterior_power(a, static_cast<std::size_t>(q)));
    auto uq = static_cast<std::size_t>(q);
    for (const auto& r : f.rational_roots) add_value(out.points, {true, r.value, UPoly()}, uq);
    for (const auto& p : f.quadratics) add_value(out.points, {false, Rational(0), p.poly}, uq);
    for (const auto& p : f.residual) add_value(out.points, {false, Rational(0), p.poly}, uq);
  }
  for (auto& p : out.points) std::sort(p.provenance.begin(), p.provenance.end());
  return out;
}

}  // namespace jumploci
