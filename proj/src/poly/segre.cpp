#include "jumploci/poly/segre.hpp"

#include <algorithm>

#include "jumploci/exactnum/linalg.hpp"

namespace jumploci {

namespace {

enum class Block { none, x, y };

std::vector<Block> classify(const MultiPoly& f, const std::vector<std::string>& x_block,
                            const std::vector<std::string>& y_block, std::vector<std::size_t>& pos) {
  std::vector<Block> out(f.nvars(), Block::none);
  pos.assign(f.nvars(), 0);
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    const auto& v = f.variables()[i];
    auto ix = std::find(x_block.begin(), x_block.end(), v);
    auto iy = std::find(y_block.begin(), y_block.end(), v);
    if (ix != x_block.end() && iy != y_block.end())
      throw std::invalid_argument("variable '" + v + "' assigned to both blocks");
    if (ix != x_block.end()) {
      out[i] = Block::x;
      pos[i] = static_cast<std::size_t>(ix - x_block.begin());
    } else if (iy != y_block.end()) {
      out[i] = Block::y;
      pos[i] = static_cast<std::size_t>(iy - y_block.begin());
    }
  }
  return out;
}

}  // namespace

std::string segre_variable(std::size_t i, std::size_t j) {
  return "z" + std::to_string(i) + "_" + std::to_string(j);
}

std::vector<std::string> segre_variables(std::size_t m, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= n; ++j) out.push_back(segre_variable(i, j));
  return out;
}

bool is_torus_invariant(const MultiPoly& f, const std::vector<std::string>& x_block,
                        const std::vector<std::string>& y_block) {
  std::vector<std::size_t> pos;
  auto blocks = classify(f, x_block, y_block, pos);
  for (const auto& [e, c] : f.terms()) {
    long balance = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (blocks[i] == Block::none)
        throw std::invalid_argument("variable '" + f.variables()[i] + "' is not assigned to a block");
      balance += blocks[i] == Block::x ? static_cast<long>(e[i]) : -static_cast<long>(e[i]);
    }
    if (balance != 0) return false;
  }
  return true;
}

MultiPoly factor_through_segre(const MultiPoly& f, const std::vector<std::string>& x_block,
                               const std::vector<std::string>& y_block) {
  if (!is_torus_invariant(f, x_block, y_block)) throw NotInvariant("polynomial is not torus invariant");
  std::vector<std::size_t> pos;
  auto blocks = classify(f, x_block, y_block, pos);
  const std::size_t n = y_block.size();
  MultiPoly out(segre_variables(x_block.size(), n));
  for (const auto& [e, c] : f.terms()) {
    std::vector<std::size_t> xs, ys;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k) (blocks[i] == Block::x ? xs : ys).push_back(pos[i]);
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    Exponents z(out.nvars(), 0);
    for (std::size_t k = 0; k < xs.size(); ++k) ++z[xs[k] * n + ys[k]];
    out.add_term(z, c);
  }
  return out;
}

MultiPoly segre_pullback(const MultiPoly& F, const std::vector<std::string>& x_block,
                         const std::vector<std::string>& y_block) {
  std::vector<std::string> xy = merge_variables(x_block, y_block);
  std::map<std::string, MultiPoly> images;
  for (std::size_t i = 0; i < x_block.size(); ++i)
    for (std::size_t j = 0; j < y_block.size(); ++j)
      images[segre_variable(i + 1, j + 1)] =
          MultiPoly::variable(xy, i) * MultiPoly::variable(xy, x_block.size() + j);
  return F.substitute(images).with_variables(xy);
}

MultiPoly elementary_symmetric(const std::vector<std::string>& vars, std::size_t k) {
  // Coefficient of T^k in prod (1 + v_i T), built incrementally.
  std::vector<MultiPoly> e(k + 1, MultiPoly(vars));
  e[0] = MultiPoly::constant(vars, 1);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    MultiPoly v = MultiPoly::variable(vars, i);
    for (std::size_t j = std::min(k, i + 1); j >= 1; --j) e[j] += e[j - 1] * v;
  }
  return e[k];
}

std::vector<std::string> elementary_names(std::size_t m) {
  std::vector<std::string> out;
  for (std::size_t k = 1; k <= m; ++k) out.push_back("e" + std::to_string(k));
  return out;
}

MultiPoly symmetric_reduce(const MultiPoly& f, const std::vector<std::string>& lambda) {
  const std::size_t m = lambda.size();
  std::vector<std::string> others;
  for (const auto& v : f.variables())
    if (std::find(lambda.begin(), lambda.end(), v) == lambda.end()) others.push_back(v);
  std::vector<std::string> vars = others;
  vars.insert(vars.end(), lambda.begin(), lambda.end());
  MultiPoly g = f.with_variables(vars);
  const std::size_t off = others.size();

  for (std::size_t i = 0; i + 1 < m; ++i) {
    std::map<std::string, std::string> swap{{lambda[i], lambda[i + 1]}, {lambda[i + 1], lambda[i]}};
    if (g.renamed(swap).with_variables(vars) != g)
      throw NotSymmetric("polynomial is not symmetric in " + lambda[i] + ", " + lambda[i + 1]);
  }

  std::vector<MultiPoly> e_lambda;
  for (std::size_t k = 1; k <= m; ++k) e_lambda.push_back(elementary_symmetric(lambda, k).with_variables(vars));
  std::vector<std::string> out_vars = others;
  for (const auto& n : elementary_names(m)) out_vars.push_back(n);
  MultiPoly out(out_vars);

  auto lambda_part = [&](const Exponents& e) { return Exponents(e.begin() + static_cast<long>(off), e.end()); };
  while (!g.is_zero()) {
    Exponents lead;
    for (const auto& [e, c] : g.terms()) lead = std::max(lead, lambda_part(e));
    // Symmetric: the leading exponent is non-increasing.
    for (std::size_t i = 0; i + 1 < m; ++i)
      if (lead[i] < lead[i + 1]) throw NotSymmetric("leading exponent is not a partition");
    MultiPoly coeff(vars);
    for (const auto& [e, c] : g.terms()) {
      if (lambda_part(e) != lead) continue;
      Exponents ce = e;
      std::fill(ce.begin() + static_cast<long>(off), ce.end(), 0u);
      coeff.add_term(ce, c);
    }
    MultiPoly prod = coeff;
    Exponents ee(out_vars.size(), 0);
    for (std::size_t k = 0; k < m; ++k) {
      unsigned power = lead[k] - (k + 1 < m ? lead[k + 1] : 0u);
      ee[off + k] = power;
      if (power) prod *= e_lambda[k].pow(power);
    }
    g -= prod;
    g = g.with_variables(vars);
    for (const auto& [e, c] : coeff.terms()) {
      Exponents oe = ee;
      for (std::size_t i = 0; i < off; ++i) oe[i] = e[i];
      out.add_term(oe, c);
    }
  }
  return out;
}

std::vector<MultiPoly> symbolic_char_poly(const Sl2Matrices& theta) {
  const auto& names = sl2_coordinate_names();
  const std::size_t n = theta[0].rows();
  for (const auto& t : theta)
    if (t.rows() != n || t.cols() != n) throw std::invalid_argument("sl2 matrices must be square of equal size");
  MultiPoly zero(names);
  Matrix<MultiPoly> g(n, n, zero);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t k = 0; k < 3; ++k)
        if (theta[k](r, c) != 0) g(r, c) += MultiPoly::variable(names, k) * MultiPoly(theta[k](r, c));
  return berkowitz(g, zero, MultiPoly::constant(names, 1));
}

MultiPoly certificate_product(const MultiPoly& phi0, std::size_t m) {
  std::vector<std::string> lambda;
  for (std::size_t i = 1; i <= m; ++i) lambda.push_back("l" + std::to_string(i));
  for (const auto& v : phi0.variables())
    if (std::find(lambda.begin(), lambda.end(), v) != lambda.end())
      throw std::invalid_argument("phi0 uses reserved variable name '" + v + "'");
  std::vector<std::string> vars = merge_variables(phi0.variables(), lambda);
  MultiPoly prod = MultiPoly::constant(vars, 1);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<MultiPoly> images;
    MultiPoly li = MultiPoly::variable(vars, phi0.nvars() + i);
    for (std::size_t k = 0; k < phi0.nvars(); ++k) images.push_back(li * MultiPoly::variable(vars, k));
    prod *= phi0.substitute(images).with_variables(vars);
  }
  return prod.with_variables(vars);
}

MultiPoly build_certificate(const MultiPoly& phi0, const Sl2Matrices& theta) {
  if (phi0.constant_term() == 0) throw std::domain_error("build_certificate: phi0(0) must be nonzero");
  const std::size_t m = theta[0].rows();
  const auto& abc = sl2_coordinate_names();
  auto enames = elementary_names(m);
  for (const auto& v : phi0.variables())
    if (std::find(abc.begin(), abc.end(), v) != abc.end() || std::find(enames.begin(), enames.end(), v) != enames.end())
      throw std::invalid_argument("phi0 uses reserved variable name '" + v + "'");

  MultiPoly ftilde = certificate_product(phi0, m);
  std::vector<std::string> lambda(ftilde.variables().begin() + static_cast<long>(phi0.nvars()),
                                  ftilde.variables().end());
  MultiPoly reduced = symmetric_reduce(ftilde, lambda);

  // e_k(eigenvalues of theta(g)) = (-1)^k c_k.
  auto cp = symbolic_char_poly(theta);
  std::map<std::string, MultiPoly> images;
  for (std::size_t k = 1; k <= m; ++k) images[enames[k - 1]] = k % 2 ? -cp[k] : cp[k];
  MultiPoly f = reduced.substitute(images);
  std::vector<std::string> xy = merge_variables(phi0.variables(), abc);
  f = f.with_variables(xy);

  if (!is_torus_invariant(f, phi0.variables(), abc)) throw NotInvariant("certificate is not torus invariant");
  MultiPoly F = factor_through_segre(f, phi0.variables(), abc);
  if (segre_pullback(F, phi0.variables(), abc) != f)
    throw std::logic_error("build_certificate: Segre factorization does not pull back");
  return F;
}

}  // namespace jumploci
