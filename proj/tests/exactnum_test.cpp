#include <gtest/gtest.h>

#include "jumploci/exactnum/factor.hpp"
#include "jumploci/exactnum/linalg.hpp"
#include "jumploci/exactnum/quad_scalar.hpp"
#include "jumploci/exactnum/sampler.hpp"
#include "jumploci/exactnum/smith.hpp"

using namespace jumploci;

namespace {

Matrix<Rational> qmat(std::initializer_list<std::initializer_list<long>> rows) {
  Matrix<Rational> m(rows.size(), rows.size() ? rows.begin()->size() : 0, Rational(0));
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

Matrix<Integer> zmat(std::initializer_list<std::initializer_list<long>> rows) {
  return qmat(rows).map<Integer>([](const Rational& q) { return q.get_num(); });
}

// Cofactor expansion along the first row: independent of Bareiss/Berkowitz.
Rational cofactor_det(const Matrix<Rational>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational d = 0;
  for (std::size_t j = 0; j < n; ++j) {
    Matrix<Rational> minor(n - 1, n - 1, Rational(0));
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    Rational term = m(0, j) * cofactor_det(minor);
    if (j % 2) d -= term;
    else d += term;
  }
  return d;
}

Matrix<Rational> random_integer_matrix(Sampler& s, std::size_t rows, std::size_t cols) {
  Matrix<Rational> m(rows, cols, Rational(0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = s.integer(-5, 5);
  return m;
}

}  // namespace

TEST(Rational, ParseAndReduce) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  Rational a(7, 3);
  EXPECT_EQ(Rational(a * (1 / a)), Rational(1));
}

TEST(QuadScalar, ArithmeticAndConjugation) {
  QuadScalar s5 = QuadScalar::sqrt_of(5);
  EXPECT_EQ(s5 * s5, QuadScalar(5));
  QuadScalar phi = (QuadScalar(1) + s5) / QuadScalar(2);
  EXPECT_EQ(phi * phi - phi - QuadScalar(1), QuadScalar(0));
  // Conjugation is a ring involution.
  QuadScalar x(Rational(2, 3), Rational(-1, 7), 5), y(Rational(-4), Rational(5, 2), 5);
  EXPECT_EQ((x * y).conjugate(), x.conjugate() * y.conjugate());
  EXPECT_EQ((x + y).conjugate(), x.conjugate() + y.conjugate());
  EXPECT_EQ(x.conjugate().conjugate(), x);
  EXPECT_EQ(x / x, QuadScalar(1));
  EXPECT_EQ(QuadScalar::sqrt_of(Rational(9, 4)), QuadScalar(Rational(3, 2)));
  EXPECT_EQ(QuadScalar::sqrt_of(Rational(8)).radicand(), Integer(2));
  EXPECT_THROW(QuadScalar::sqrt_of(2) + QuadScalar::sqrt_of(3), std::domain_error);
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(Matrix<Rational>(3, 3, Rational(0))), 0u);
  EXPECT_EQ(rank(Matrix<Rational>::identity(4)), 4u);
  EXPECT_EQ(rank(qmat({{1, 2}, {2, 4}})), 1u);
  Matrix<Rational> frac(2, 2, Rational(0));
  frac(0, 0) = Rational(1, 3);
  frac(0, 1) = Rational(1, 2);
  frac(1, 0) = Rational(2, 9);
  frac(1, 1) = Rational(1, 3);
  EXPECT_EQ(rank(frac), 1u);
}

TEST(Kernel, Examples) {
  EXPECT_TRUE(kernel_basis(Matrix<Rational>::identity(3)).empty());
  auto k0 = kernel_basis(Matrix<Rational>(2, 2, Rational(0)));
  ASSERT_EQ(k0.size(), 2u);
  EXPECT_EQ(k0[0], (Vector<Rational>{1, 0}));
  EXPECT_EQ(k0[1], (Vector<Rational>{0, 1}));
  auto k1 = kernel_basis(qmat({{1, 1}}));
  ASSERT_EQ(k1.size(), 1u);
  EXPECT_EQ(k1[0], (Vector<Rational>{-1, 1}));
}

TEST(Kernel, RankNullityProperty) {
  Sampler s(101);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = static_cast<std::size_t>(s.integer(1, 6)), c = static_cast<std::size_t>(s.integer(1, 6));
    Matrix<Rational> m = random_integer_matrix(s, r, c);
    // Force some rank deficiency.
    if (r > 1 && s.coin())
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 2;
    auto ker = kernel_basis(m);
    EXPECT_EQ(rank(m) + ker.size(), c);
    for (const auto& v : ker)
      for (const auto& x : m.apply(v)) EXPECT_EQ(x, 0);
  }
}

TEST(CharPoly, Examples) {
  EXPECT_EQ(char_poly(qmat({{2, 1}, {1, 1}})), UPoly(std::vector<Rational>{1, -3, 1}));
  EXPECT_EQ(char_poly(Matrix<Rational>::identity(2)), UPoly(std::vector<Rational>{1, -2, 1}));
  EXPECT_EQ(char_poly(qmat({{1, 0}, {0, -1}})), UPoly(std::vector<Rational>{-1, 0, 1}));
  EXPECT_THROW(char_poly(qmat({{1, 2}})), std::invalid_argument);
}

TEST(CharPoly, AgreesWithCofactorDeterminant) {
  Sampler s(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = static_cast<std::size_t>(s.integer(1, 4));
    Matrix<Rational> m = random_integer_matrix(s, n, n);
    UPoly p = char_poly(m);
    for (long x : {-2, 0, 3}) {
      Matrix<Rational> shifted = Matrix<Rational>::identity(n).scaled(Rational(x)) - m;
      EXPECT_EQ(p.eval(Rational(x)), cofactor_det(shifted));
    }
    EXPECT_EQ(determinant(m), cofactor_det(m));
  }
}

TEST(CharPoly, CayleyHamilton) {
  Sampler s(2024);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = static_cast<std::size_t>(s.integer(1, 5));
    Matrix<Rational> m = random_integer_matrix(s, n, n);
    UPoly p = char_poly(m);
    Matrix<Rational> acc(n, n, Rational(0));
    for (std::size_t k = static_cast<std::size_t>(p.degree()) + 1; k-- > 0;)
      acc = acc * m + Matrix<Rational>::identity(n).scaled(p.coeff(k));
    EXPECT_TRUE(acc.is_zero());
  }
}

TEST(EigenFactors, Examples) {
  auto sol = eigen_factors(qmat({{2, 1}, {1, 1}}));
  EXPECT_TRUE(sol.rational_roots.empty());
  ASSERT_EQ(sol.quadratics.size(), 1u);
  EXPECT_EQ(sol.quadratics[0].poly, UPoly(std::vector<Rational>{1, -3, 1}));
  auto roots = sol.explicit_roots();
  ASSERT_EQ(roots.size(), 2u);
  for (const auto& r : roots) EXPECT_EQ(r * r - QuadScalar(3) * r + QuadScalar(1), QuadScalar(0));
  EXPECT_EQ(roots[0].radicand(), Integer(5));

  auto d33 = eigen_factors(qmat({{3, 0}, {0, 3}}));
  ASSERT_EQ(d33.rational_roots.size(), 1u);
  EXPECT_EQ(d33.rational_roots[0].value, 3);
  EXPECT_EQ(d33.rational_roots[0].multiplicity, 2u);

  auto jordan = eigen_factors(qmat({{0, 1}, {0, 0}}));
  ASSERT_EQ(jordan.rational_roots.size(), 1u);
  EXPECT_EQ(jordan.rational_roots[0].value, 0);
  EXPECT_EQ(jordan.rational_roots[0].multiplicity, 2u);
}

TEST(Factor, RoundTripAndResidual) {
  // (x - 1/2)^2 (x + 3) (x^2 - 2) (x^3 - 2)
  UPoly p = UPoly(std::vector<Rational>{Rational(-1, 2), 1}).pow(2) * UPoly(std::vector<Rational>{3, 1}) *
            UPoly(std::vector<Rational>{-2, 0, 1}) * UPoly(std::vector<Rational>{-2, 0, 0, 1}) * UPoly(Rational(5));
  auto f = factor(p);
  EXPECT_EQ(f.expand(), p);
  EXPECT_EQ(f.rational_roots.size(), 2u);
  EXPECT_EQ(f.quadratics.size(), 1u);
  ASSERT_EQ(f.residual.size(), 1u);
  EXPECT_EQ(f.residual[0].poly.degree(), 3);
  EXPECT_TRUE(f.has_rational_root(Rational(1, 2)));
}

TEST(Smith, Examples) {
  auto s1 = smith_normal_form(zmat({{1, 1}, {1, 0}}));
  EXPECT_EQ(s1.D, zmat({{1, 0}, {0, 1}}));
  auto s2 = smith_normal_form(zmat({{2, 0}, {0, 4}}));
  EXPECT_EQ(s2.D, zmat({{2, 0}, {0, 4}}));
  auto s3 = smith_normal_form(zmat({{0, 0}, {0, 0}}));
  EXPECT_EQ(s3.D, zmat({{0, 0}, {0, 0}}));
  auto s4 = smith_normal_form(zmat({{2, 0}, {0, 3}}));
  EXPECT_EQ(s4.D, zmat({{1, 0}, {0, 6}}));
}

TEST(Smith, InvariantsOnRandomMatrices) {
  Sampler s(55);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t r = static_cast<std::size_t>(s.integer(1, 5)), c = static_cast<std::size_t>(s.integer(1, 5));
    Matrix<Integer> m(r, c, Integer(0));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = s.integer(-6, 6);
    auto sm = smith_normal_form(m);
    EXPECT_EQ(sm.U * m * sm.V, sm.D);
    EXPECT_EQ(abs(integer_determinant(sm.U)), 1);
    EXPECT_EQ(abs(integer_determinant(sm.V)), 1);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) EXPECT_EQ(sm.D(i, j), 0);
    for (std::size_t k = 0; k + 1 < std::min(r, c); ++k) {
      EXPECT_GE(sm.D(k, k), 0);
      if (sm.D(k, k) == 0) EXPECT_EQ(sm.D(k + 1, k + 1), 0);
      else EXPECT_TRUE(mpz_divisible_p(sm.D(k + 1, k + 1).get_mpz_t(), sm.D(k, k).get_mpz_t()));
    }
  }
}

TEST(DeterminantalDivisor, LinearPencil) {
  // [[x, 0], [0, x - 1]]: rank 2, gcd of 2x2 minors = x(x-1).
  Matrix<UPoly> m(2, 2, UPoly());
  m(0, 0) = UPoly::x();
  m(1, 1) = UPoly(std::vector<Rational>{-1, 1});
  auto dd = determinantal_divisor(m);
  EXPECT_EQ(dd.rank, 2u);
  EXPECT_EQ(dd.divisor, UPoly(std::vector<Rational>{0, -1, 1}));
  // [[x, x-1]]: 1x1 minors have gcd 1, so the rank never drops.
  Matrix<UPoly> row(1, 2, UPoly());
  row(0, 0) = UPoly::x();
  row(0, 1) = UPoly(std::vector<Rational>{-1, 1});
  auto dr = determinantal_divisor(row);
  EXPECT_EQ(dr.rank, 1u);
  EXPECT_EQ(dr.divisor, UPoly(1));
  EXPECT_EQ(rank(m), 2u);
}

TEST(QuadRank, SingularOverExtension) {
  // [[phi, 1], [1, phi - 1]] is singular since phi^2 - phi - 1 = 0.
  QuadScalar phi = (QuadScalar(1) + QuadScalar::sqrt_of(5)) / QuadScalar(2);
  Matrix<QuadScalar> m(2, 2, QuadScalar());
  m(0, 0) = phi;
  m(0, 1) = QuadScalar(1);
  m(1, 0) = QuadScalar(1);
  m(1, 1) = phi - QuadScalar(1);
  EXPECT_EQ(rank(m), 1u);
}

TEST(Factor, SplitsProductOfQuadratics) {
  // (x^2 - 3x + 1)(x^2 + 1)(x^3 + x + 1)
  UPoly q1(std::vector<Rational>{1, -3, 1}), q2(std::vector<Rational>{1, 0, 1}), c(std::vector<Rational>{1, 1, 0, 1});
  auto f = factor(q1 * q2 * c);
  EXPECT_EQ(f.quadratics.size(), 2u);
  ASSERT_EQ(f.residual.size(), 1u);
  EXPECT_EQ(f.residual[0].poly, c);
  EXPECT_EQ(f.expand(), q1 * q2 * c);
}

TEST(RationalRoots, LargeCompositeCoefficients) {
  // 2147483647 and 2147483629 are primes; their product defeats trial division.
  Integer lead = Integer("2147483647") * Integer("2147483629");
  UPoly f = UPoly(std::vector<Rational>{-3, Rational(lead)}) * UPoly(std::vector<Rational>{5, 1}) *
            UPoly(std::vector<Rational>{1, 0, 1});
  auto roots = rational_roots(f);
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_EQ(roots[0], -5);
  EXPECT_EQ(roots[1], Rational(Integer(3), lead));
  auto twice = rational_roots(f * f);
  EXPECT_EQ(twice, roots);
}

TEST(RationalRoots, RandomProductsOfLinearFactors) {
  Sampler s(99);
  for (int i = 0; i < 40; ++i) {
    std::vector<Rational> expected;
    UPoly f(Rational(s.nonzero_rational()));
    for (int k = 0; k < 3; ++k) {
      Rational r(Integer(s.integer(-5000, 5000)), Integer(s.integer(1, 3000)));
      r.canonicalize();
      expected.push_back(r);
      f *= UPoly(std::vector<Rational>{-r, 1});
    }
    f *= UPoly(std::vector<Rational>{Rational(s.integer(1, 50)), 0, 1});
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    EXPECT_EQ(rational_roots(f), expected);
  }
}
