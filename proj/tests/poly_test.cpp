#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "jumploci/exactnum/quad_scalar.hpp"
#include "jumploci/exactnum/sampler.hpp"
#include "jumploci/poly/bivariate.hpp"
#include "jumploci/poly/segre.hpp"

using namespace jumploci;

namespace {

MultiPoly var(const std::string& n) { return MultiPoly::variable(n); }

const std::vector<std::string> kX{"x1", "x2"};
const std::vector<std::string> kY{"y1", "y2"};

Sl2Matrices defining_rep() {
  Matrix<Rational> h(2, 2, Rational(0)), xp(2, 2, Rational(0)), xm(2, 2, Rational(0));
  h(0, 0) = 1;
  h(1, 1) = -1;
  xp(0, 1) = 1;
  xm(1, 0) = 1;
  return {h, xp, xm};
}

}  // namespace

TEST(MultiPoly, ArithmeticAcrossContexts) {
  MultiPoly p = var("x") * var("y") + MultiPoly(3);
  EXPECT_EQ(p.variables(), (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(p.to_string(), "1*x*y + 3");
  MultiPoly q = (var("x") + var("y")).pow(2) - var("x").pow(2) - var("y").pow(2);
  EXPECT_EQ(q, MultiPoly(2) * var("x") * var("y"));
  EXPECT_EQ((var("x") - var("x")).to_string(), "0");
  EXPECT_EQ((MultiPoly(Rational(-3, 2)) * var("a").pow(3)).to_string(), "-3/2*a^3");
  EXPECT_EQ(p.eval<Rational>({2, 5}), 13);
}

TEST(MultiPoly, Substitution) {
  MultiPoly p = var("x").pow(2) + var("y");
  MultiPoly r = p.substitute(std::map<std::string, MultiPoly>{{"x", var("t") + MultiPoly(1)}});
  EXPECT_EQ(r, var("t").pow(2) + MultiPoly(2) * var("t") + MultiPoly(1) + var("y"));
  EXPECT_THROW(p.with_variables({"x"}), std::invalid_argument);
  EXPECT_EQ(var("t").pow(2).to_upoly(0).degree(), 2);
}

TEST(TorusInvariant, Examples) {
  MultiPoly x1 = var("x1"), x2 = var("x2"), y1 = var("y1"), y2 = var("y2");
  EXPECT_TRUE(is_torus_invariant(x1 * y1 + x2 * y2, kX, kY));
  EXPECT_FALSE(is_torus_invariant(x1, kX, kY));
  EXPECT_TRUE(is_torus_invariant(x1.pow(2) * y1 * y2, kX, kY));
  EXPECT_THROW(is_torus_invariant(var("w") * x1, kX, kY), std::invalid_argument);
}

TEST(FactorThroughSegre, Examples) {
  MultiPoly x1 = var("x1"), x2 = var("x2"), y1 = var("y1"), y2 = var("y2");
  EXPECT_EQ(factor_through_segre(x1 * y2 - x2 * y1, kX, kY).to_string(), "1*z1_2 - 1*z2_1");
  EXPECT_EQ(factor_through_segre(x1.pow(2) * y1 * y2, kX, kY).to_string(), "1*z1_1*z1_2");
  EXPECT_EQ(factor_through_segre(x1 * y1 + MultiPoly(3), kX, kY).to_string(), "1*z1_1 + 3");
  EXPECT_THROW(factor_through_segre(x1, kX, kY), NotInvariant);
}

TEST(FactorThroughSegre, RandomRoundTrip) {
  Sampler s(8);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t m = static_cast<std::size_t>(s.integer(1, 4)), n = static_cast<std::size_t>(s.integer(1, 4));
    std::vector<std::string> xs, ys;
    for (std::size_t i = 0; i < m; ++i) xs.push_back("x" + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) ys.push_back("y" + std::to_string(j));
    std::vector<std::string> vars = merge_variables(xs, ys);
    MultiPoly f(vars);
    int terms = static_cast<int>(s.integer(1, 6));
    for (int t = 0; t < terms; ++t) {
      unsigned half = static_cast<unsigned>(s.integer(0, 3));
      Exponents e(vars.size(), 0);
      for (unsigned k = 0; k < half; ++k) {
        ++e[static_cast<std::size_t>(s.integer(0, static_cast<long>(m) - 1))];
        ++e[m + static_cast<std::size_t>(s.integer(0, static_cast<long>(n) - 1))];
      }
      f.add_term(e, s.nonzero_rational());
    }
    ASSERT_TRUE(is_torus_invariant(f, xs, ys));
    MultiPoly F = factor_through_segre(f, xs, ys);
    // Oracle: pointwise evaluation with z_ij = x_i y_j.
    for (int pt = 0; pt < 3; ++pt) {
      auto x = s.vector(m), y = s.vector(n);
      std::vector<Rational> point = x;
      point.insert(point.end(), y.begin(), y.end());
      std::vector<Rational> z;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) z.push_back(x[i] * y[j]);
      EXPECT_EQ(F.with_variables(segre_variables(m, n)).eval(z), f.eval(point));
    }
    EXPECT_EQ(segre_pullback(F, xs, ys), f);
  }
}

TEST(SymmetricReduce, Examples) {
  std::vector<std::string> l{"l1", "l2"};
  MultiPoly l1 = var("l1"), l2 = var("l2"), e1 = var("e1"), e2 = var("e2");
  EXPECT_EQ(symmetric_reduce(l1 + l2, l), e1);
  EXPECT_EQ(symmetric_reduce(l1.pow(2) + l2.pow(2), l), e1.pow(2) - MultiPoly(2) * e2);
  EXPECT_EQ(symmetric_reduce(l1 * l2, l), e2);
  EXPECT_THROW(symmetric_reduce(l1, l), NotSymmetric);
}

TEST(SymmetricReduce, RandomRoundTrip) {
  Sampler s(99);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t m = static_cast<std::size_t>(s.integer(1, 4));
    std::vector<std::string> lam;
    for (std::size_t i = 1; i <= m; ++i) lam.push_back("l" + std::to_string(i));
    std::vector<std::string> vars = lam;
    vars.push_back("t");
    MultiPoly seed(vars);
    for (int t = 0; t < 3; ++t) {
      Exponents e(vars.size(), 0);
      for (auto& x : e) x = static_cast<unsigned>(s.integer(0, 2));
      seed.add_term(e, s.nonzero_rational());
    }
    // Symmetrize over all permutations of the lambda block.
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    MultiPoly f(vars);
    do {
      std::vector<MultiPoly> images;
      for (std::size_t i = 0; i < m; ++i) images.push_back(MultiPoly::variable(vars, perm[i]));
      images.push_back(MultiPoly::variable(vars, m));
      f += seed.substitute(images);
    } while (std::next_permutation(perm.begin(), perm.end()));
    MultiPoly r = symmetric_reduce(f, lam);
    std::map<std::string, MultiPoly> back;
    auto names = elementary_names(m);
    for (std::size_t k = 1; k <= m; ++k) back[names[k - 1]] = elementary_symmetric(lam, k);
    EXPECT_EQ(r.substitute(back), f);
  }
}

TEST(Certificate, ConstantPhiGivesOne) {
  MultiPoly phi0 = MultiPoly::constant({"eta1"}, 1);
  EXPECT_EQ(build_certificate(phi0, defining_rep()), MultiPoly(1));
  EXPECT_THROW(build_certificate(var("eta1"), defining_rep()), std::domain_error);
}

TEST(Certificate, DefiningRepLinearPhi) {
  MultiPoly phi0 = MultiPoly(1) + var("eta1");
  MultiPoly F = build_certificate(phi0, defining_rep());
  EXPECT_EQ(F.to_string(), "-1*z1_1^2 - 1*z1_2*z1_3 + 1");
  EXPECT_EQ(F.constant_term(), 1);
  // F(eta (x) g) against prod (1 + lambda_i eta) with lambda = +-sqrt(a^2 + bc).
  Sampler s(3);
  auto vars = segre_variables(1, 3);
  for (int i = 0; i < 20; ++i) {
    Rational eta = s.rational(), a = s.rational(), b = s.rational(), c = s.rational();
    Rational lhs = F.with_variables(vars).eval<Rational>({eta * a, eta * b, eta * c});
    QuadScalar mu = QuadScalar::sqrt_of(a * a + b * c);
    QuadScalar rhs = (QuadScalar(1) + mu * QuadScalar(eta)) * (QuadScalar(1) - mu * QuadScalar(eta));
    EXPECT_EQ(QuadScalar(lhs), rhs);
  }
}

TEST(Certificate, SymbolicCharPolyOfDefiningRep) {
  auto cp = symbolic_char_poly(defining_rep());
  ASSERT_EQ(cp.size(), 3u);
  EXPECT_TRUE(cp[1].is_zero());
  EXPECT_EQ(cp[2], -(var("a").pow(2) + var("b") * var("c")));
}

TEST(Bivariate, GcdDivisionResultant) {
  MultiPoly s = var("s"), w = var("w");
  MultiPoly g = s * w - MultiPoly(1);
  MultiPoly a = g * (s + w), b = g * (s - MultiPoly(2)) * w;
  MultiPoly d = gcd2(a, b, "s", "w");
  EXPECT_EQ(d, g);
  auto q = divide_exact(to_recursive(a, "s", "w"), to_recursive(g, "s", "w"));
  EXPECT_EQ(from_recursive(q, "s", "w"), (s + w).with_variables({"s", "w"}));
  EXPECT_THROW(divide_exact(to_recursive(a, "s", "w"), to_recursive(s - w, "s", "w")), std::domain_error);
  // Res_w(w^2 - s, w - 1) = 1 - s.
  UPoly r = resultant_w(to_recursive(w.pow(2) - s, "s", "w"), to_recursive(w - MultiPoly(1), "s", "w"));
  EXPECT_EQ(r, UPoly(std::vector<Rational>{1, -1}));
  // Coprime: gcd is 1.
  EXPECT_EQ(gcd2(s, w, "s", "w"), MultiPoly(1));
}

TEST(Bivariate, ResultantVanishesOnCommonRoots) {
  Sampler smp(4);
  for (int t = 0; t < 20; ++t) {
    Rational s0 = smp.rational(), w0 = smp.rational();
    MultiPoly s = var("s"), w = var("w");
    MultiPoly a = (w - MultiPoly(w0)) * (s + MultiPoly(smp.rational())) + (s - MultiPoly(s0)) * w;
    MultiPoly b = (w - MultiPoly(w0)) * w + (s - MultiPoly(s0)) * MultiPoly(smp.nonzero_rational());
    UPoly r = resultant_w(to_recursive(a, "s", "w"), to_recursive(b, "s", "w"));
    EXPECT_EQ(r.eval(s0), 0);
  }
}
