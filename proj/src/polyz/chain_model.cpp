#include <algorithm>
#include <map>

#include "jumploci/exactnum/linalg.hpp"
#include "jumploci/exactnum/smith.hpp"
#include "jumploci/polyz/torus_bundle.hpp"

namespace jumploci {

namespace {

using QMatrix = Matrix<QuadScalar>;

QMatrix lift(const Matrix<Rational>& m) { return m.map<QuadScalar>([](const Rational& x) { return QuadScalar(x); }); }

Matrix<Rational> to_rational(const Matrix<Integer>& m) {
  Matrix<Rational> r(m.rows(), m.cols(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

std::size_t binomial(std::size_t n, long q) {
  if (q < 0 || static_cast<std::size_t>(q) > n) return 0;
  std::size_t r = 1;
  for (std::size_t k = 1; k <= static_cast<std::size_t>(q); ++k) r = r * (n - k + 1) / k;
  return r;
}

std::vector<std::vector<std::size_t>> sorted_subsets(std::size_t n, std::size_t q) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + static_cast<long>(q), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask[i]) s.push_back(i);
    out.push_back(s);
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

// 2x2 block matrix; empty Matrix arguments stand for zero blocks.
template <class T>
Matrix<T> blocks(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1, const Matrix<T>& a,
                 const Matrix<T>& b, const Matrix<T>& c, const Matrix<T>& d) {
  Matrix<T> m(r0 + r1, c0 + c1, T(0));
  auto put = [&](const Matrix<T>& x, std::size_t ro, std::size_t co) {
    if (x.rows() == 0 || x.cols() == 0) return;
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j) m(ro + i, co + j) = x(i, j);
  };
  put(a, 0, 0);
  put(b, 0, c0);
  put(c, r0, 0);
  put(d, r0, c0);
  return m;
}

template <class T>
std::vector<std::size_t> homology_dims(const std::vector<std::size_t>& sizes, const std::vector<Matrix<T>>& d) {
  // d[i] : C_i -> C_{i-1}; d[0] and d[top+1] are zero.
  std::vector<std::size_t> ranks(sizes.size() + 1, 0);
  for (std::size_t i = 1; i < sizes.size(); ++i) ranks[i] = rank(d[i]);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < sizes.size(); ++i) out.push_back(sizes[i] - ranks[i] - ranks[i + 1]);
  return out;
}

Rational power(const Rational& x, const Integer& e) {
  Rational r = 1;
  Integer k = abs(e);
  for (Integer j = 0; j < k; ++j) r *= x;
  return e < 0 ? Rational(1 / r) : r;
}

// [a]_x with x^a - 1 = [a]_x (x - 1).
Rational quantum(const Rational& x, const Integer& a) {
  Rational s = 0;
  if (a >= 0) {
    for (Integer k = 0; k < a; ++k) s += power(x, k);
  } else {
    for (Integer k = a; k < 0; ++k) s -= power(x, k);
  }
  return s;
}

// Koszul complex of Z^n with coefficients in C_chi and the chain map of A.
struct Koszul {
  std::size_t n = 0;
  std::vector<Matrix<Rational>> boundary;  // boundary[q] : K_q -> K_{q-1}
  std::vector<Matrix<Rational>> map;       // map[q] : K_q -> K_q
  std::size_t size(long q) const { return binomial(n, q); }
};

Koszul koszul(const Matrix<Integer>& a, const std::vector<Rational>& chi) {
  Koszul k;
  k.n = a.rows();
  std::size_t n = k.n;
  if (chi.size() != n) throw std::invalid_argument("chain model: character has the wrong length");
  for (const auto& x : chi)
    if (x == 0) throw std::invalid_argument("chain model: character coordinates must be nonzero");
  for (std::size_t i = 0; i < n; ++i) {
    Rational image = 1;
    for (std::size_t j = 0; j < n; ++j) image *= power(chi[j], a(j, i));
    if (image != chi[i]) throw std::invalid_argument("chain model: character is not A-invariant");
  }
  // Fox derivatives of t^{A e_i} evaluated at chi.
  Matrix<Rational> fox(n, n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    Rational prefix = 1;
    for (std::size_t j = 0; j < n; ++j) {
      fox(j, i) = prefix * quantum(chi[j], a(j, i));
      prefix *= power(chi[j], a(j, i));
    }
  }
  k.boundary.resize(n + 1);
  k.map.resize(n + 1);
  for (std::size_t q = 0; q <= n; ++q) {
    k.map[q] = exterior_power(fox, q);
    if (q == 0) continue;
    auto src = sorted_subsets(n, q);
    auto dst = sorted_subsets(n, q - 1);
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t r = 0; r < dst.size(); ++r) index[dst[r]] = r;
    Matrix<Rational> b(dst.size(), src.size(), Rational(0));
    for (std::size_t c = 0; c < src.size(); ++c)
      for (std::size_t pos = 0; pos < q; ++pos) {
        auto face = src[c];
        std::size_t j = face[pos];
        face.erase(face.begin() + static_cast<long>(pos));
        b(index.at(face), c) += Rational(pos % 2 ? -1 : 1) * (chi[j] - 1);
      }
    k.boundary[q] = b;
    if (!(b * k.map[q] == k.map[q - 1] * b)) throw std::logic_error("chain model: induced map is not a chain map");
  }
  return k;
}

// Mapping cone of (T - lambda) over the Koszul complex: C_i = K_i + K_{i-1},
// D(a, b) = (da + (T - lambda) b, -db).
struct Cone {
  std::vector<std::size_t> sizes;
  std::vector<QMatrix> d;  // d[i] : C_i -> C_{i-1}, i = 0..top+1
};

Cone koszul_cone(const Koszul& k, const QuadScalar& lambda) {
  long n = static_cast<long>(k.n);
  Cone c;
  for (long i = 0; i <= n + 1; ++i) c.sizes.push_back(k.size(i) + k.size(i - 1));
  c.d.resize(static_cast<std::size_t>(n) + 3);
  for (long i = 1; i <= n + 1; ++i) {
    auto ui = static_cast<std::size_t>(i);
    QMatrix del_i = i <= n ? lift(k.boundary[ui]) : QMatrix();
    QMatrix shift = lift(k.map[ui - 1]) - QMatrix::identity(k.size(i - 1)).scaled(lambda);
    QMatrix del_prev = i >= 2 ? lift(k.boundary[ui - 1]).scaled(QuadScalar(-1)) : QMatrix();
    c.d[ui] = blocks(k.size(i - 1), k.size(i - 2), k.size(i), k.size(i - 1), del_i, shift, QMatrix(), del_prev);
  }
  return c;
}

}  // namespace

std::size_t charvar_oracle(const TorusBundleGroup& g, const std::vector<Rational>& chi, const QuadScalar& lambda,
                           int i) {
  if (lambda.is_zero()) throw std::invalid_argument("charvar_oracle: lambda must be nonzero");
  Koszul k = koszul(g.a, chi);
  if (i < 0 || i > static_cast<int>(g.n) + 1) return 0;
  Cone c = koszul_cone(k, lambda);
  return homology_dims(c.sizes, c.d)[static_cast<std::size_t>(i)];
}

void validate_step(const TorusBundleGroup& g, const TowerStep& step) {
  if (step.b.rows() != g.n || step.b.cols() != g.n) throw std::invalid_argument("tower step: B has the wrong size");
  if (step.v0.size() != g.n) throw std::invalid_argument("tower step: v0 has the wrong length");
  if (step.epsilon != 1 && step.epsilon != -1) throw std::invalid_argument("tower step: epsilon must be +-1");
  Integer det = integer_determinant(step.b);
  if (det != 1 && det != -1) throw std::invalid_argument("tower step: det B is not +-1");
  Matrix<Rational> a = to_rational(g.a), b = to_rational(step.b);
  Matrix<Rational> target = step.epsilon == 1 ? a : inverse(a);
  if (!(b * a == target * b)) throw std::invalid_argument("tower step: B A != A^eps B");
}

namespace {

// Chain model of G_A with coefficients (1, lambda) and the chain map of the
// step automorphism. Since chi = 1 the Koszul boundaries vanish.
struct StageModel {
  Cone cone;
  std::vector<Matrix<Rational>> f;  // f[i] : C_i -> C_i
  std::vector<Matrix<Rational>> d;  // rational copy of cone.d
};

Matrix<Rational> wedge_with(std::size_t n, std::size_t q, const std::vector<Integer>& v) {
  // b -> b ^ v from Lambda^q to Lambda^{q+1}.
  auto src = sorted_subsets(n, q);
  auto dst = sorted_subsets(n, q + 1);
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t r = 0; r < dst.size(); ++r) index[dst[r]] = r;
  Matrix<Rational> m(dst.size(), src.size(), Rational(0));
  for (std::size_t c = 0; c < src.size(); ++c)
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j] == 0 || std::find(src[c].begin(), src[c].end(), j) != src[c].end()) continue;
      auto s = src[c];
      // Moving e_j from the end into sorted position passes the larger indices.
      long larger = std::count_if(s.begin(), s.end(), [&](std::size_t x) { return x > j; });
      s.insert(std::upper_bound(s.begin(), s.end(), j), j);
      m(index.at(s), c) += Rational(larger % 2 ? -1 : 1) * Rational(v[j]);
    }
  return m;
}

StageModel stage_model(const TorusBundleGroup& g, const TowerStep& step, const Rational& lambda) {
  validate_step(g, step);
  if (lambda == 0) throw std::invalid_argument("tower: lambda must be nonzero");
  if (step.epsilon == -1 && lambda * lambda != 1)
    throw std::invalid_argument("tower: the character of G_A is not invariant under the step");
  std::size_t n = g.n;
  Koszul k = koszul(g.a, std::vector<Rational>(n, Rational(1)));
  StageModel s;
  s.cone = koszul_cone(k, QuadScalar(lambda));
  Matrix<Rational> b = to_rational(step.b);
  Matrix<Rational> ainv = inverse(to_rational(g.a));
  for (auto& m : s.cone.d) s.d.push_back(m.rows() && m.cols() ? m.map<Rational>([](const QuadScalar& x) {
    return x.rational_part();
  }) : Matrix<Rational>(m.rows(), m.cols(), Rational(0)));
  long ln = static_cast<long>(n);
  for (long i = 0; i <= ln + 1; ++i) {
    auto ui = static_cast<std::size_t>(i);
    Matrix<Rational> top = i <= ln ? exterior_power(b, ui) : Matrix<Rational>();
    Matrix<Rational> w, low;
    if (i >= 1) {
      Matrix<Rational> lb = exterior_power(b, ui - 1);
      low = step.epsilon == 1 ? lb : exterior_power(ainv, ui - 1).scaled(Rational(-1 / lambda)) * lb;
      if (i <= ln) w = wedge_with(n, ui - 1, step.v0) * lb;
    }
    s.f.push_back(blocks(k.size(i), k.size(i - 1), k.size(i), k.size(i - 1), top, w, Matrix<Rational>(), low));
  }
  for (long i = 1; i <= ln + 1; ++i) {
    auto ui = static_cast<std::size_t>(i);
    if (!(s.d[ui] * s.f[ui] == s.f[ui - 1] * s.d[ui])) throw std::logic_error("tower: step map is not a chain map");
  }
  return s;
}

// Matrix of the map induced by f on ker d_i / im d_{i+1}.
Matrix<Rational> induced_on_homology(const Matrix<Rational>& di, const Matrix<Rational>& dnext,
                                     const Matrix<Rational>& f, std::size_t dim) {
  std::vector<Vector<Rational>> cycles =
      di.rows() ? kernel_basis(di) : kernel_basis(Matrix<Rational>(1, dim, Rational(0)));
  std::vector<Vector<Rational>> bounds;
  for (std::size_t c = 0; c < dnext.cols(); ++c) bounds.push_back(dnext.col(c));
  std::vector<Vector<Rational>> basis = span_basis(bounds, dim);
  std::size_t nb = basis.size();
  for (const auto& z : cycles) {
    auto trial = basis;
    trial.push_back(z);
    if (span_basis(trial, dim).size() > basis.size()) basis.push_back(z);
  }
  std::size_t h = basis.size() - nb;
  Matrix<Rational> coords(dim, basis.size(), Rational(0));
  for (std::size_t c = 0; c < basis.size(); ++c)
    for (std::size_t r = 0; r < dim; ++r) coords(r, c) = basis[c][r];
  Matrix<Rational> out(h, h, Rational(0));
  for (std::size_t k = 0; k < h; ++k) {
    Vector<Rational> x;
    if (!solve_field(coords, f.apply(basis[nb + k]), x)) throw std::logic_error("tower: image is not a cycle");
    for (std::size_t r = 0; r < h; ++r) out(r, k) = x[nb + r];
  }
  return out;
}

void add_tower_value(std::vector<TowerPoint>& points, const Rational& lambda, const CharValue& mu, int j) {
  for (auto& p : points)
    if (p.lambda == lambda && p.mu == mu) {
      if (std::find(p.provenance.begin(), p.provenance.end(), j) == p.provenance.end()) p.provenance.push_back(j);
      return;
    }
  points.push_back({lambda, mu, {j}});
}

}  // namespace

TowerCharVariety tower_extend(const TorusBundleGroup& g, const TowerStep& step, int i) {
  validate_step(g, step);
  int n = static_cast<int>(g.n);
  if (i < 0 || i > n + 2)
    throw DegreeOutOfRange("tower_extend: degree " + std::to_string(i) + " outside 0.." + std::to_string(n + 2));
  TowerCharVariety out;
  out.degree = i;
  for (int j : {i, i - 1}) {
    if (j < 0 || j > n + 1) continue;
    for (const auto& p : charvar(g, j).points) {
      if (!p.lambda.rational)
        throw IrrationalIntermediateCharacter("tower_extend: V^" + std::to_string(j) + " of the base has lambda = " +
                                              p.lambda.to_string());
      const Rational& lambda = p.lambda.value;
      if (step.epsilon == -1 && lambda * lambda != 1) continue;
      StageModel s = stage_model(g, step, lambda);
      auto uj = static_cast<std::size_t>(j);
      Matrix<Rational> m = induced_on_homology(s.d[uj], s.d[uj + 1], s.f[uj], s.cone.sizes[uj]);
      if (m.rows() == 0) continue;
      FactoredPoly fp = eigen_factors(m);
      for (const auto& r : fp.rational_roots) add_tower_value(out.points, lambda, {true, r.value, UPoly()}, j);
      for (const auto& q : fp.quadratics) add_tower_value(out.points, lambda, {false, Rational(0), q.poly}, j);
      for (const auto& q : fp.residual) add_tower_value(out.points, lambda, {false, Rational(0), q.poly}, j);
    }
  }
  for (auto& p : out.points) std::sort(p.provenance.begin(), p.provenance.end());
  return out;
}

bool TowerCharVariety::contains(const Rational& lambda, const QuadScalar& mu) const {
  for (const auto& p : points) {
    if (p.lambda != lambda) continue;
    for (const auto& v : p.mu.explicit_values())
      if (v == mu) return true;
  }
  return false;
}

std::size_t tower_oracle(const TorusBundleGroup& g, const TowerStep& step, const Rational& lambda,
                         const QuadScalar& mu, int i) {
  if (mu.is_zero()) throw std::invalid_argument("tower_oracle: mu must be nonzero");
  StageModel s = stage_model(g, step, lambda);
  std::size_t top = s.cone.sizes.size();  // degrees 0..top of the total complex
  if (i < 0 || static_cast<std::size_t>(i) > top) return 0;
  auto size = [&](long j) -> std::size_t {
    return j < 0 || static_cast<std::size_t>(j) >= s.cone.sizes.size() ? 0 : s.cone.sizes[static_cast<std::size_t>(j)];
  };
  std::vector<std::size_t> sizes;
  for (std::size_t j = 0; j <= top; ++j) sizes.push_back(size(static_cast<long>(j)) + size(static_cast<long>(j) - 1));
  std::vector<QMatrix> d(top + 2);
  for (std::size_t j = 1; j <= top; ++j) {
    long lj = static_cast<long>(j);
    QMatrix dj = j < s.cone.sizes.size() ? s.cone.d[j] : QMatrix();
    QMatrix shift = lift(s.f[j - 1]) - QMatrix::identity(size(lj - 1)).scaled(mu);
    QMatrix dprev = j >= 2 ? s.cone.d[j - 1].scaled(QuadScalar(-1)) : QMatrix();
    d[j] = blocks(size(lj - 1), size(lj - 2), size(lj), size(lj - 1), dj, shift, QMatrix(), dprev);
  }
  return homology_dims(sizes, d)[static_cast<std::size_t>(i)];
}

}  // namespace jumploci
