#include "jumploci/cdga/cdga.hpp"

#include <algorithm>
#include <stdexcept>

namespace jumploci {

namespace {

Vector<Rational> densify(const SparseVec& v, std::size_t n) {
  Vector<Rational> out(n, Rational(0));
  for (const auto& [k, c] : v) out.at(k) += c;
  return out;
}

SparseVec sparsify(const Vector<Rational>& v) {
  SparseVec out;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0) out.emplace_back(k, v[k]);
  return out;
}

}  // namespace

CDGA::CDGA(std::vector<std::vector<std::string>> basis) : basis_(std::move(basis)) {
  if (basis_.empty() || basis_[0].size() != 1) throw std::invalid_argument("CDGA: degree 0 must be spanned by the unit");
  const std::size_t nd = basis_.size();
  products_.resize(nd * nd);
  for (int i = 0; i <= top_degree(); ++i)
    for (int j = 0; i + j <= top_degree(); ++j) products_[block(i, j)].resize(dim(i) * dim(j));
  for (int j = 0; j <= top_degree(); ++j)
    for (std::size_t b = 0; b < dim(j); ++b) {
      products_[block(0, j)][b] = {{b, Rational(1)}};
      products_[block(j, 0)][b] = {{b, Rational(1)}};
    }
  for (int i = 0; i <= top_degree(); ++i) d_.emplace_back(dim(i + 1), dim(i), Rational(0));
}

std::size_t CDGA::dim(int degree) const {
  if (degree < 0 || degree > top_degree()) return 0;
  return basis_[static_cast<std::size_t>(degree)].size();
}

std::size_t CDGA::total_dim() const {
  std::size_t n = 0;
  for (const auto& b : basis_) n += b.size();
  return n;
}

std::pair<int, std::size_t> CDGA::locate(const std::string& name) const {
  for (int i = 0; i <= top_degree(); ++i) {
    const auto& b = basis(i);
    auto it = std::find(b.begin(), b.end(), name);
    if (it != b.end()) return {i, static_cast<std::size_t>(it - b.begin())};
  }
  throw std::invalid_argument("unknown CDGA basis element '" + name + "'");
}

void CDGA::set_product(int i, std::size_t a, int j, std::size_t b, SparseVec value) {
  if (i + j > top_degree()) {
    if (!value.empty()) throw std::invalid_argument("product lands above the top degree");
    return;
  }
  if (a >= dim(i) || b >= dim(j)) throw std::invalid_argument("set_product: index out of range");
  for (const auto& [k, c] : value)
    if (k >= dim(i + j)) throw std::invalid_argument("set_product: value index out of range");
  if (i > 0 && j > 0 && !(a == b && i == j)) {
    SparseVec rev = value;
    if ((i * j) % 2)
      for (auto& [k, c] : rev) c = -c;
    products_[block(j, i)][b * dim(i) + a] = std::move(rev);
  }
  products_[block(i, j)][a * dim(j) + b] = std::move(value);
}

const SparseVec& CDGA::product(int i, std::size_t a, int j, std::size_t b) const {
  static const SparseVec zero;
  if (i + j > top_degree()) return zero;
  return products_[block(i, j)][a * dim(j) + b];
}

Vector<Rational> CDGA::multiply(int i, const Vector<Rational>& x, int j, const Vector<Rational>& y) const {
  Vector<Rational> out(dim(i + j), Rational(0));
  if (i + j > top_degree()) return out;
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (x[a] == 0) continue;
    for (std::size_t b = 0; b < y.size(); ++b) {
      if (y[b] == 0) continue;
      Rational s = x[a] * y[b];
      for (const auto& [k, c] : product(i, a, j, b)) out[k] += s * c;
    }
  }
  return out;
}

Matrix<Rational> CDGA::left_multiplication(int i, const Vector<Rational>& x, int j) const {
  Matrix<Rational> m(dim(i + j), dim(j), Rational(0));
  if (i + j > top_degree()) return m;
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (x[a] == 0) continue;
    for (std::size_t b = 0; b < dim(j); ++b)
      for (const auto& [k, c] : product(i, a, j, b)) m(k, b) += x[a] * c;
  }
  return m;
}

void CDGA::set_differential(int i, Matrix<Rational> d) {
  if (i < 0 || i > top_degree()) throw std::invalid_argument("set_differential: degree out of range");
  if (d.rows() != dim(i + 1) || d.cols() != dim(i)) throw std::invalid_argument("set_differential: wrong shape");
  d_[static_cast<std::size_t>(i)] = std::move(d);
}

const Matrix<Rational>& CDGA::d(int i) const {
  if (i < 0 || i > top_degree()) {
    return empty_;
  }
  return d_[static_cast<std::size_t>(i)];
}

std::string cdga_violation(const CDGA& a) {
  const int top = a.top_degree();
  if (top < 0 || a.dim(0) != 1) return "not connected: degree 0 must be one-dimensional";
  if (!a.d(0).is_zero()) return "the unit is not closed";
  for (int i = 0; i + 1 <= top; ++i)
    if (!(a.d(i + 1) * a.d(i)).is_zero()) return "d^2 != 0 in degree " + std::to_string(i);

  for (int i = 1; i <= top; ++i)
    for (int j = 1; i + j <= top; ++j)
      for (std::size_t x = 0; x < a.dim(i); ++x)
        for (std::size_t y = 0; y < a.dim(j); ++y) {
          auto xy = densify(a.product(i, x, j, y), a.dim(i + j));
          auto yx = densify(a.product(j, y, i, x), a.dim(i + j));
          for (std::size_t k = 0; k < xy.size(); ++k) {
            Rational expect = (i * j) % 2 ? Rational(-yx[k]) : yx[k];
            if (xy[k] != expect)
              return "graded commutativity fails for (" + a.basis(i)[x] + ", " + a.basis(j)[y] + ")";
          }
        }

  for (int i = 0; i <= top; ++i)
    for (int j = 0; i + j <= top; ++j)
      for (std::size_t x = 0; x < a.dim(i); ++x)
        for (std::size_t y = 0; y < a.dim(j); ++y) {
          Vector<Rational> ex(a.dim(i), Rational(0)), ey(a.dim(j), Rational(0));
          ex[x] = 1;
          ey[y] = 1;
          Vector<Rational> lhs = a.d(i + j).apply(densify(a.product(i, x, j, y), a.dim(i + j)));
          if (i + j + 1 > top) continue;
          Vector<Rational> t1 = a.multiply(i + 1, a.d(i).apply(ex), j, ey);
          Vector<Rational> t2 = a.multiply(i, ex, j + 1, a.d(j).apply(ey));
          for (std::size_t k = 0; k < lhs.size(); ++k) {
            Rational rhs = i % 2 ? Rational(t1[k] - t2[k]) : Rational(t1[k] + t2[k]);
            if (lhs[k] != rhs) return "Leibniz rule fails for (" + a.basis(i)[x] + ", " + a.basis(j)[y] + ")";
          }
        }

  if (a.total_dim() <= 64) {
    for (int i = 1; i <= top; ++i)
      for (int j = 1; i + j <= top; ++j)
        for (int k = 1; i + j + k <= top; ++k)
          for (std::size_t x = 0; x < a.dim(i); ++x)
            for (std::size_t y = 0; y < a.dim(j); ++y)
              for (std::size_t z = 0; z < a.dim(k); ++z) {
                Vector<Rational> ex(a.dim(i), Rational(0)), ey(a.dim(j), Rational(0)), ez(a.dim(k), Rational(0));
                ex[x] = ey[y] = ez[z] = 1;
                auto l = a.multiply(i + j, a.multiply(i, ex, j, ey), k, ez);
                auto r = a.multiply(i, ex, j + k, a.multiply(j, ey, k, ez));
                if (l != r)
                  return "associativity fails for (" + a.basis(i)[x] + ", " + a.basis(j)[y] + ", " + a.basis(k)[z] + ")";
              }
  }
  return {};
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t p) {
  std::vector<std::vector<std::size_t>> out;
  if (p > n) return out;
  std::vector<std::size_t> cur(p);
  for (std::size_t i = 0; i < p; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = p;
    while (i > 0 && cur[i - 1] == n - p + i - 1) --i;
    if (i == 0) return out;
    ++cur[i - 1];
    for (std::size_t k = i; k < p; ++k) cur[k] = cur[k - 1] + 1;
  }
}

CDGA chevalley_eilenberg(const LieAlgebra& h) {
  const std::size_t n = h.dim();
  std::vector<std::vector<std::vector<std::size_t>>> sets(n + 1);
  std::vector<std::size_t> index_of_mask(std::size_t{1} << n, 0);
  std::vector<std::vector<std::string>> names(n + 1);
  for (std::size_t p = 0; p <= n; ++p) {
    sets[p] = subsets(n, p);
    for (std::size_t k = 0; k < sets[p].size(); ++k) {
      std::size_t mask = 0;
      std::string name;
      for (auto i : sets[p][k]) {
        mask |= std::size_t{1} << i;
        if (!name.empty()) name += "^";
        name += h.basis()[i] + "*";
      }
      index_of_mask[mask] = k;
      names[p].push_back(p == 0 ? "1" : name);
    }
  }
  CDGA a(names);
  for (std::size_t p = 1; p <= n; ++p)
    for (std::size_t q = 1; p + q <= n; ++q)
      for (std::size_t x = 0; x < sets[p].size(); ++x)
        for (std::size_t y = 0; y < sets[q].size(); ++y) {
          const auto& s = sets[p][x];
          const auto& t = sets[q][y];
          std::size_t ms = 0, mt = 0;
          for (auto i : s) ms |= std::size_t{1} << i;
          for (auto i : t) mt |= std::size_t{1} << i;
          if (ms & mt) continue;
          // Sign of sorting the concatenation s ++ t.
          std::size_t inversions = 0;
          for (auto i : s)
            for (auto j : t)
              if (i > j) ++inversions;
          Rational sign = inversions % 2 ? -1 : 1;
          a.set_product(static_cast<int>(p), x, static_cast<int>(q), y, {{index_of_mask[ms | mt], sign}});
        }
  if (n == 0) return a;

  // d xi_k = -sum_{i<j} c^k_ij xi_i ^ xi_j.
  std::vector<Vector<Rational>> dxi(n, Vector<Rational>(a.dim(2), Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Rational c = h.structure_constant(i, j, k);
        if (c != 0) dxi[k][index_of_mask[(std::size_t{1} << i) | (std::size_t{1} << j)]] -= c;
      }
  // Extend as a derivation: d(xi_S) = sum_r (-1)^r xi_{s_0..s_{r-1}} dxi_{s_r} xi_{s_{r+1}..}.
  for (std::size_t p = 1; p < n; ++p) {
    Matrix<Rational> d(a.dim(static_cast<int>(p + 1)), a.dim(static_cast<int>(p)), Rational(0));
    for (std::size_t x = 0; x < sets[p].size(); ++x) {
      const auto& s = sets[p][x];
      for (std::size_t r = 0; r < p; ++r) {
        std::size_t before = 0, after = 0;
        for (std::size_t t = 0; t < r; ++t) before |= std::size_t{1} << s[t];
        for (std::size_t t = r + 1; t < p; ++t) after |= std::size_t{1} << s[t];
        Vector<Rational> left(a.dim(static_cast<int>(r)), Rational(0));
        left[index_of_mask[before]] = r % 2 ? -1 : 1;
        Vector<Rational> right(a.dim(static_cast<int>(p - r - 1)), Rational(0));
        right[index_of_mask[after]] = 1;
        auto term = a.multiply(static_cast<int>(r + 2), a.multiply(static_cast<int>(r), left, 2, dxi[s[r]]),
                               static_cast<int>(p - r - 1), right);
        for (std::size_t k = 0; k < term.size(); ++k) d(k, x) += term[k];
      }
    }
    a.set_differential(static_cast<int>(p), std::move(d));
  }
  return a;
}

CDGA free_model(std::size_t n) {
  if (n == 0) throw std::invalid_argument("free_model: n must be positive");
  std::vector<std::string> gens;
  for (std::size_t i = 1; i <= n; ++i) gens.push_back("a" + std::to_string(i));
  return CDGA({{"1"}, gens});
}

std::vector<std::size_t> betti(const CDGA& a) {
  std::vector<std::size_t> out;
  for (int i = 0; i <= a.top_degree(); ++i) {
    std::size_t r_in = i > 0 ? rank(a.d(i - 1)) : 0;
    std::size_t r_out = i < a.top_degree() ? rank(a.d(i)) : 0;
    out.push_back(a.dim(i) - r_out - r_in);
  }
  return out;
}

std::vector<Vector<Rational>> closed_one_forms(const CDGA& a) {
  if (a.top_degree() < 1) return {};
  if (a.top_degree() == 1) return full_space(a.dim(1));
  return kernel_basis(a.d(1));
}

}  // namespace jumploci
