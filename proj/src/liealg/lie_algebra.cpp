#include "jumploci/liealg/lie_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace jumploci {

LieAlgebra::LieAlgebra(std::vector<std::string> basis)
    : basis_(std::move(basis)), table_(basis_.size() * basis_.size(), Vector<Rational>(basis_.size(), Rational(0))) {}

std::optional<std::size_t> LieAlgebra::index_of(const std::string& name) const {
  auto it = std::find(basis_.begin(), basis_.end(), name);
  if (it == basis_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - basis_.begin());
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const Vector<Rational>& value) {
  if (i >= dim() || j >= dim() || value.size() != dim()) throw std::invalid_argument("set_bracket: index out of range");
  if (i == j) {
    if (std::any_of(value.begin(), value.end(), [](const Rational& c) { return c != 0; }))
      throw std::invalid_argument("set_bracket: [e_i, e_i] must vanish");
    return;
  }
  table_[i * dim() + j] = value;
  Vector<Rational> neg(dim());
  for (std::size_t k = 0; k < dim(); ++k) neg[k] = -value[k];
  table_[j * dim() + i] = neg;
}

Vector<Rational> LieAlgebra::bracket(const Vector<Rational>& x, const Vector<Rational>& y) const {
  Vector<Rational> out(dim(), Rational(0));
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (y[j] == 0 || i == j) continue;
      Rational s = x[i] * y[j];
      const auto& b = bracket(i, j);
      for (std::size_t k = 0; k < dim(); ++k)
        if (b[k] != 0) out[k] += s * b[k];
    }
  }
  return out;
}

Matrix<Rational> LieAlgebra::ad(const Vector<Rational>& x) const {
  Matrix<Rational> m(dim(), dim(), Rational(0));
  for (std::size_t j = 0; j < dim(); ++j) {
    auto col = bracket(x, unit(j));
    for (std::size_t k = 0; k < dim(); ++k) m(k, j) = col[k];
  }
  return m;
}

Matrix<Rational> LieAlgebra::ad(std::size_t i) const { return ad(unit(i)); }

Vector<Rational> LieAlgebra::unit(std::size_t i) const {
  Vector<Rational> v(dim(), Rational(0));
  v.at(i) = 1;
  return v;
}

ValidationReport validate(const LieAlgebra& h) {
  ValidationReport r;
  const std::size_t n = h.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (h.bracket(i, j)[k] != -h.bracket(j, i)[k]) {
          r.ok = false;
          r.failing_triple = std::array<std::size_t, 3>{i, j, j};
          r.message = "antisymmetry fails for (" + h.basis()[i] + ", " + h.basis()[j] + ")";
          return r;
        }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        auto ei = h.unit(i), ej = h.unit(j), ek = h.unit(k);
        auto a = h.bracket(ei, h.bracket(ej, ek));
        auto b = h.bracket(ej, h.bracket(ek, ei));
        auto c = h.bracket(ek, h.bracket(ei, ej));
        for (std::size_t t = 0; t < n; ++t)
          if (a[t] + b[t] + c[t] != 0) {
            r.ok = false;
            r.failing_triple = std::array<std::size_t, 3>{i, j, k};
            r.message = "Jacobi identity fails for (" + h.basis()[i] + ", " + h.basis()[j] + ", " + h.basis()[k] + ")";
            return r;
          }
      }
  return r;
}

std::vector<Vector<Rational>> full_space(std::size_t dim) {
  std::vector<Vector<Rational>> out;
  for (std::size_t i = 0; i < dim; ++i) {
    Vector<Rational> v(dim, Rational(0));
    v[i] = 1;
    out.push_back(v);
  }
  return out;
}

std::vector<Vector<Rational>> bracket_span(const LieAlgebra& h, const std::vector<Vector<Rational>>& a,
                                           const std::vector<Vector<Rational>>& b) {
  std::vector<Vector<Rational>> gens;
  for (const auto& x : a)
    for (const auto& y : b) gens.push_back(h.bracket(x, y));
  return span_basis(gens, h.dim());
}

std::vector<std::vector<Vector<Rational>>> derived_series(const LieAlgebra& h) {
  std::vector<std::vector<Vector<Rational>>> series{full_space(h.dim())};
  while (true) {
    auto next = bracket_span(h, series.back(), series.back());
    if (next.size() == series.back().size()) return series;
    series.push_back(std::move(next));
  }
}

std::vector<std::vector<Vector<Rational>>> lower_central_series(const LieAlgebra& h) {
  auto all = full_space(h.dim());
  std::vector<std::vector<Vector<Rational>>> series{all};
  while (true) {
    auto next = bracket_span(h, all, series.back());
    if (next.size() == series.back().size()) return series;
    series.push_back(std::move(next));
  }
}

bool is_solvable(const LieAlgebra& h) { return derived_series(h).back().empty(); }
bool is_nilpotent(const LieAlgebra& h) { return lower_central_series(h).back().empty(); }

H1Data h1(const LieAlgebra& h) {
  auto derived = bracket_span(h, full_space(h.dim()), full_space(h.dim()));
  H1Data out;
  if (derived.empty()) {
    out.dual_basis = full_space(h.dim());
  } else {
    Matrix<Rational> m(derived.size(), h.dim(), Rational(0));
    for (std::size_t i = 0; i < derived.size(); ++i)
      for (std::size_t j = 0; j < h.dim(); ++j) m(i, j) = derived[i][j];
    out.dual_basis = kernel_basis(m);
  }
  out.dim = out.dual_basis.size();
  return out;
}

bool is_derivation(const LieAlgebra& h, const Matrix<Rational>& d) {
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = i + 1; j < h.dim(); ++j) {
      auto lhs = d.apply(h.bracket(i, j));
      auto r1 = h.bracket(d.apply(h.unit(i)), h.unit(j));
      auto r2 = h.bracket(h.unit(i), d.apply(h.unit(j)));
      for (std::size_t k = 0; k < h.dim(); ++k)
        if (lhs[k] != r1[k] + r2[k]) return false;
    }
  return true;
}

std::vector<Vector<Rational>> ideal_closure(const LieAlgebra& h, std::vector<Vector<Rational>> gens) {
  auto all = full_space(h.dim());
  auto span = span_basis(gens, h.dim());
  while (true) {
    auto more = span;
    for (const auto& v : bracket_span(h, all, span)) more.push_back(v);
    auto next = span_basis(more, h.dim());
    if (next.size() == span.size()) return span;
    span = std::move(next);
  }
}

Quotient quotient(const LieAlgebra& h, const std::vector<Vector<Rational>>& ideal) {
  const std::size_t n = h.dim();
  auto basis = span_basis(ideal, n);
  Matrix<Rational> m(basis.size(), n, Rational(0));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = basis[i][j];
  auto pivots = rref_in_place(m);
  std::vector<std::size_t> complement;
  for (std::size_t j = 0; j < n; ++j)
    if (std::find(pivots.begin(), pivots.end(), j) == pivots.end()) complement.push_back(j);

  // Columns of `full`: ideal basis followed by complement unit vectors.
  Matrix<Rational> full(n, n, Rational(0));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t r = 0; r < n; ++r) full(r, i) = basis[i][r];
  for (std::size_t c = 0; c < complement.size(); ++c) full(complement[c], basis.size() + c) = 1;
  Matrix<Rational> inv = inverse(full);

  Quotient q;
  q.projection = Matrix<Rational>(complement.size(), n, Rational(0));
  for (std::size_t c = 0; c < complement.size(); ++c)
    for (std::size_t j = 0; j < n; ++j) q.projection(c, j) = inv(basis.size() + c, j);
  std::vector<std::string> names;
  for (auto c : complement) names.push_back(h.basis()[c]);
  q.algebra = LieAlgebra(names);
  for (std::size_t a = 0; a < complement.size(); ++a)
    for (std::size_t b = a + 1; b < complement.size(); ++b)
      q.algebra.set_bracket(a, b, q.projection.apply(h.bracket(complement[a], complement[b])));
  return q;
}

bool is_homomorphism(const LieAlgebra& source, const LieAlgebra& target, const Matrix<Rational>& phi) {
  for (std::size_t i = 0; i < source.dim(); ++i)
    for (std::size_t j = i + 1; j < source.dim(); ++j) {
      auto lhs = phi.apply(source.bracket(i, j));
      auto rhs = target.bracket(phi.col(i), phi.col(j));
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace jumploci
