#include <gtest/gtest.h>

#include <algorithm>

#include "jumploci/exactnum/linalg.hpp"
#include "jumploci/exactnum/sampler.hpp"
#include "jumploci/exactnum/smith.hpp"
#include "jumploci/polyz/torus_bundle.hpp"

using namespace jumploci;

namespace {

Matrix<Integer> imat(std::initializer_list<std::initializer_list<long>> rows) {
  Matrix<Integer> m(rows.size(), rows.begin()->size(), Integer(0));
  std::size_t r = 0;
  for (const auto& row : rows) {
    std::size_t c = 0;
    for (long x : row) m(r, c++) = x;
    ++r;
  }
  return m;
}

Matrix<Rational> qmat(const Matrix<Integer>& m) {
  return m.map<Rational>([](const Integer& x) { return Rational(x); });
}

TorusBundleGroup sol() { return torus_bundle(imat({{2, 1}, {1, 1}})); }
TorusBundleGroup nil() { return torus_bundle(imat({{1, 1}, {0, 1}})); }

// Independent H_1 from the presentation <x_1..x_n, t | [x_i, x_j], t x_i t^-1 = x^{A e_i}>
// via Fox calculus.
using Word = std::vector<std::pair<std::size_t, int>>;

std::size_t fox_h1(const Matrix<Integer>& a, const std::vector<QuadScalar>& rho) {
  std::size_t n = a.rows(), gens = n + 1, t = n;
  std::vector<Word> relators;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) relators.push_back({{i, 1}, {j, 1}, {i, -1}, {j, -1}});
  for (std::size_t i = 0; i < n; ++i) {
    Word w{{t, 1}, {i, 1}, {t, -1}};
    // (x_1^{a_1} ... x_n^{a_n})^{-1} = x_n^{-a_n} ... x_1^{-a_1}
    for (std::size_t j = n; j-- > 0;) {
      long e = a(j, i).get_si();
      for (long k = 0; k < std::abs(e); ++k) w.push_back({j, e > 0 ? -1 : 1});
    }
    relators.push_back(w);
  }
  Matrix<QuadScalar> jac(relators.size(), gens, QuadScalar(0));
  for (std::size_t r = 0; r < relators.size(); ++r) {
    QuadScalar prefix(1);
    for (const auto& [g, e] : relators[r]) {
      if (e > 0) {
        jac(r, g) += prefix;
        prefix *= rho[g];
      } else {
        prefix /= rho[g];
        jac(r, g) -= prefix;
      }
    }
  }
  Matrix<QuadScalar> d1(1, gens, QuadScalar(0));
  for (std::size_t g = 0; g < gens; ++g) d1(0, g) = rho[g] - QuadScalar(1);
  return gens - rank(jac) - rank(d1);
}

}  // namespace

TEST(TorusBundle, Validation) {
  EXPECT_THROW(torus_bundle(imat({{2, 0}, {0, 1}})), std::invalid_argument);
  EXPECT_NO_THROW(torus_bundle(imat({{0, 1}, {1, 0}})));
}

TEST(CharacterTorus, Examples) {
  auto s = character_torus(sol());
  EXPECT_EQ(s.smith_diagonal, (std::vector<Integer>{1, 1}));
  EXPECT_EQ(s.dimension(), 1u);
  EXPECT_EQ(s.description(), "(C*)^1");
  auto id = character_torus(torus_bundle(imat({{1}})));
  EXPECT_EQ(id.free_rank, 1u);
  EXPECT_EQ(id.dimension(), 2u);
  auto h = character_torus(nil());
  EXPECT_EQ(h.smith_diagonal, (std::vector<Integer>{1, 0}));
  EXPECT_EQ(h.free_rank, 1u);
  auto minus = character_torus(torus_bundle(imat({{-1, 0}, {0, -1}})));
  EXPECT_EQ(minus.torsion, (std::vector<Integer>{2, 2}));
  EXPECT_EQ(minus.description(), "(C*)^1 x mu_2 x mu_2");
}

TEST(ExteriorPower, Examples) {
  Matrix<Rational> a = qmat(imat({{2, 1}, {1, 1}}));
  EXPECT_EQ(exterior_power(a, 0), (Matrix<Rational>{{1}}));
  EXPECT_EQ(exterior_power(a, 1), a);
  EXPECT_EQ(exterior_power(a, 2), (Matrix<Rational>{{1}}));
}

TEST(ExteriorPower, CauchyBinetAndDeterminant) {
  Sampler s(6);
  for (int k = 0; k < 10; ++k) {
    Matrix<Rational> a(4, 4, Rational(0)), b(4, 4, Rational(0));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        a(i, j) = s.rational();
        b(i, j) = s.rational();
      }
    for (std::size_t q = 0; q <= 4; ++q) EXPECT_EQ(exterior_power(a * b, q), exterior_power(a, q) * exterior_power(b, q));
    EXPECT_EQ(exterior_power(a, 4)(0, 0), determinant(a));
    EXPECT_EQ(exterior_power(a, 1), a);
  }
}

TEST(Charvar, SolExamples) {
  auto v1 = charvar(sol(), 1);
  ASSERT_EQ(v1.points.size(), 2u);
  EXPECT_TRUE(v1.points[0].lambda.rational);
  EXPECT_EQ(v1.points[0].lambda.value, 1);
  EXPECT_EQ(v1.points[0].provenance, (std::vector<std::size_t>{0}));
  EXPECT_FALSE(v1.points[1].lambda.rational);
  EXPECT_EQ(v1.points[1].lambda.factor.to_string("x"), "x^2 - 3*x + 1");
  EXPECT_EQ(v1.points[1].provenance, (std::vector<std::size_t>{1}));
  auto v0 = charvar(sol(), 0);
  ASSERT_EQ(v0.points.size(), 1u);
  EXPECT_EQ(v0.points[0].lambda.value, 1);
  // Top degree: H_3 only sees H_2(Z^2) = Lambda^2, so the points are {det A}.
  auto v3 = charvar(sol(), 3);
  ASSERT_EQ(v3.points.size(), 1u);
  EXPECT_EQ(v3.points[0].lambda.value, 1);
  EXPECT_EQ(v3.points[0].provenance, (std::vector<std::size_t>{2}));
  for (const auto& lambda : charvar(sol(), 1).points[1].lambda.explicit_values())
    EXPECT_EQ(charvar_oracle(sol(), {1, 1}, lambda, 3), 0u);
  EXPECT_THROW(charvar(sol(), 5), DegreeOutOfRange);
  EXPECT_THROW(charvar(sol(), -1), DegreeOutOfRange);
}

TEST(Charvar, NilpotentIsTrivial) {
  for (int i = 0; i <= 3; ++i) {
    auto v = charvar(nil(), i);
    ASSERT_EQ(v.points.size(), 1u);
    EXPECT_EQ(v.points[0].lambda.value, 1);
  }
}

TEST(Charvar, StructuralProperties) {
  std::vector<TorusBundleGroup> groups{sol(), nil(), torus_bundle(imat({{1, 1}, {1, 0}})),
                                      torus_bundle(imat({{0, 1, 0}, {0, 0, 1}, {1, -1, 3}})),
                                      torus_bundle(imat({{-1, 0, 0}, {0, 2, 1}, {0, 1, 1}}))};
  for (const auto& g : groups) {
    EXPECT_TRUE(charvar(g, 0).contains(QuadScalar(1)));
    Integer det = integer_determinant(g.a);
    if (det == 1) EXPECT_TRUE(charvar(g, static_cast<int>(g.n) + 1).contains(QuadScalar(1)));
    for (int i = 0; i <= static_cast<int>(g.n) + 1; ++i) {
      auto v = charvar(g, i);
      EXPECT_FALSE(v.points.empty());
      // Shift structure: every point is tagged by Lambda^i or Lambda^{i-1},
      // and the tags agree with the exterior-power eigenvalues.
      for (const auto& p : v.points)
        for (auto q : p.provenance) {
          EXPECT_TRUE(static_cast<int>(q) == i || static_cast<int>(q) == i - 1);
          UPoly cp = char_poly(exterior_power(qmat(g.a), q));
          UPoly lin = p.lambda.rational ? UPoly(std::vector<Rational>{-p.lambda.value, 1}) : p.lambda.factor;
          EXPECT_TRUE((cp % lin).is_zero());
        }
    }
  }
}

TEST(CharvarOracle, Examples) {
  EXPECT_EQ(charvar_oracle(sol(), {1, 1}, QuadScalar(1), 0), 1u);
  EXPECT_EQ(charvar_oracle(nil(), {1, 1}, QuadScalar(1), 0), 1u);
  EXPECT_EQ(charvar_oracle(sol(), {1, 1}, QuadScalar(2), 1), 0u);
  EXPECT_GE(charvar_oracle(sol(), {1, 1}, QuadScalar(1), 1), 1u);
  EXPECT_THROW(charvar_oracle(nil(), {2, 1}, QuadScalar(1), 1), std::invalid_argument);
}

TEST(CharvarOracle, AgreesWithCharvar) {
  Sampler s(19);
  std::vector<TorusBundleGroup> groups{sol(), nil(), torus_bundle(imat({{1, 1}, {1, 0}})),
                                      torus_bundle(imat({{-1, 0}, {0, -1}})), torus_bundle(imat({{1}})),
                                      torus_bundle(imat({{-1, 0, 0}, {0, 2, 1}, {0, 1, 1}}))};
  for (const auto& g : groups) {
    std::vector<Rational> one(g.n, Rational(1));
    for (int i = 0; i <= static_cast<int>(g.n) + 1; ++i) {
      auto v = charvar(g, i);
      for (const auto& p : v.points)
        for (const auto& lambda : p.lambda.explicit_values()) EXPECT_GE(charvar_oracle(g, one, lambda, i), 1u);
      int non_members = 0;
      while (non_members < 20) {
        QuadScalar lambda(s.nonzero_rational());
        if (v.contains(lambda)) continue;
        EXPECT_EQ(charvar_oracle(g, one, lambda, i), 0u);
        ++non_members;
      }
    }
  }
}

TEST(CharvarOracle, NontrivialCharactersAreAcyclic) {
  Sampler s(23);
  auto id2 = torus_bundle(imat({{1, 0}, {0, 1}}));
  for (int k = 0; k < 10; ++k) {
    std::vector<Rational> chi{s.nonzero_rational(), s.nonzero_rational()};
    if (chi[0] == 1 && chi[1] == 1) continue;
    for (int i = 0; i <= 3; ++i) EXPECT_EQ(charvar_oracle(id2, chi, QuadScalar(1), i), 0u);
  }
  // Nil: chi(A e_2) = chi_1 chi_2 forces chi_1 = 1; chi = (1, x) is invariant.
  for (long x : {2, -1, 3})
    for (int i = 0; i <= 3; ++i) EXPECT_EQ(charvar_oracle(nil(), {1, Rational(x)}, QuadScalar(1), i), 0u);
  // -I: chi = (-1, -1) is invariant.
  auto minus = torus_bundle(imat({{-1, 0}, {0, -1}}));
  for (int i = 0; i <= 3; ++i) EXPECT_EQ(charvar_oracle(minus, {-1, -1}, QuadScalar(-1), i), 0u);
}

TEST(CharvarOracle, MatchesFoxCalculusInDegreeOne) {
  // A = [[1,1],[1,0]] has eigenvalues phi, -1/phi; their inverses 1/phi, -phi
  // are not eigenvalues, so this pins the orientation convention.
  auto g = torus_bundle(imat({{1, 1}, {1, 0}}));
  auto v = charvar(g, 1);
  QuadScalar sqrt5 = QuadScalar::sqrt_of(5);
  QuadScalar phi = (QuadScalar(1) + sqrt5) / QuadScalar(2);
  std::vector<QuadScalar> probes{phi, QuadScalar(-1) / phi, QuadScalar(1) / phi, -phi, QuadScalar(1), QuadScalar(2),
                                 QuadScalar(-1)};
  for (const auto& lambda : probes) {
    std::size_t fox = fox_h1(g.a, {QuadScalar(1), QuadScalar(1), lambda});
    EXPECT_EQ(charvar_oracle(g, {1, 1}, lambda, 1), fox) << lambda.to_string();
    EXPECT_EQ(v.contains(lambda), fox >= 1) << lambda.to_string();
  }
  EXPECT_TRUE(v.contains(phi));
  EXPECT_FALSE(v.contains(-phi));
  // Sol and a 3x3 bundle with rational probes, including nontrivial characters.
  Sampler s(31);
  for (const auto& h : {sol(), nil(), torus_bundle(imat({{-1, 0, 0}, {0, 2, 1}, {0, 1, 1}}))}) {
    auto vh = charvar(h, 1);
    for (int k = 0; k < 10; ++k) {
      QuadScalar lambda = k < 3 ? QuadScalar(k - 1 == 0 ? 1 : k - 1) : QuadScalar(s.nonzero_rational());
      std::vector<QuadScalar> rho(h.n, QuadScalar(1));
      rho.push_back(lambda);
      std::size_t fox = fox_h1(h.a, rho);
      EXPECT_EQ(charvar_oracle(h, std::vector<Rational>(h.n, Rational(1)), lambda, 1), fox);
      EXPECT_EQ(vh.contains(lambda), fox >= 1);
    }
  }
  for (long x : {2, -3}) {
    QuadScalar lambda(5);
    EXPECT_EQ(charvar_oracle(nil(), {1, Rational(x)}, lambda, 1), fox_h1(nil().a, {QuadScalar(1), QuadScalar(x), lambda}));
  }
}

TEST(Tower, TrivialExtension) {
  auto z2 = torus_bundle(imat({{1}}));
  TowerStep id{imat({{1}}), 1, {0}};
  for (int i = 0; i <= 3; ++i) {
    auto v = tower_extend(z2, id, i);
    ASSERT_EQ(v.points.size(), 1u);
    EXPECT_EQ(v.points[0].lambda, 1);
    EXPECT_EQ(v.points[0].mu.value, 1);
    std::size_t binom[] = {1, 3, 3, 1};
    EXPECT_EQ(tower_oracle(z2, id, 1, QuadScalar(1), i), binom[i]);
  }
}

TEST(Tower, HeisenbergIsTrivial) {
  // Z^2 = Z x Z extended by e -> e, t -> e t: the integral Heisenberg group.
  auto z2 = torus_bundle(imat({{1}}));
  TowerStep heis{imat({{1}}), 1, {1}};
  std::size_t betti[] = {1, 2, 2, 1};
  for (int i = 0; i <= 3; ++i) {
    auto v = tower_extend(z2, heis, i);
    ASSERT_EQ(v.points.size(), 1u);
    EXPECT_EQ(v.points[0].lambda, 1);
    EXPECT_TRUE(v.points[0].mu.rational);
    EXPECT_EQ(v.points[0].mu.value, 1);
    EXPECT_EQ(tower_oracle(z2, heis, 1, QuadScalar(1), i), betti[i]);
  }
  // Stage two over the unipotent bundle itself.
  TowerStep id2{imat({{1, 0}, {0, 1}}), 1, {0, 0}};
  for (int i = 0; i <= 4; ++i) {
    auto v = tower_extend(nil(), id2, i);
    for (const auto& p : v.points) {
      EXPECT_EQ(p.lambda, 1);
      EXPECT_TRUE(p.mu.rational);
      EXPECT_EQ(p.mu.value, 1);
    }
  }
}

TEST(Tower, OrientationReversingStep) {
  auto z2 = torus_bundle(imat({{1}}));
  TowerStep flip{imat({{-1}}), -1, {0}};
  auto v1 = tower_extend(z2, flip, 1);
  EXPECT_TRUE(v1.contains(1, QuadScalar(1)));
  EXPECT_TRUE(v1.contains(1, QuadScalar(-1)));
  EXPECT_EQ(v1.points.size(), 2u);
  EXPECT_THROW(tower_oracle(z2, flip, 2, QuadScalar(1), 1), std::invalid_argument);
  EXPECT_THROW(tower_extend(nil(), TowerStep{imat({{1, 0}, {0, 1}}), -1, {0, 0}}, 1), std::invalid_argument);
}

TEST(Tower, IrrationalIntermediateCharacter) {
  TowerStep id2{imat({{1, 0}, {0, 1}}), 1, {0, 0}};
  EXPECT_THROW(tower_extend(sol(), id2, 1), IrrationalIntermediateCharacter);
  EXPECT_NO_THROW(tower_extend(sol(), id2, 0));
}

TEST(Tower, OracleAgreement) {
  Sampler s(41);
  struct Case {
    TorusBundleGroup g;
    TowerStep step;
  };
  std::vector<Case> cases{
      {torus_bundle(imat({{1}})), {imat({{1}}), 1, {1}}},
      {torus_bundle(imat({{1}})), {imat({{-1}}), -1, {0}}},
      {torus_bundle(imat({{1}})), {imat({{-1}}), 1, {2}}},
      {nil(), {imat({{1, 0}, {0, 1}}), 1, {1, 0}}},
      {nil(), {imat({{1, 1}, {0, 1}}), 1, {0, 1}}},
      {torus_bundle(imat({{1, 0}, {0, 1}})), {imat({{2, 1}, {1, 1}}), 1, {0, 0}}},
      {torus_bundle(imat({{-1, 0}, {0, -1}})), {imat({{0, 1}, {1, 0}}), 1, {1, 0}}},
  };
  for (const auto& c : cases) {
    for (int i = 0; i <= static_cast<int>(c.g.n) + 2; ++i) {
      auto v = tower_extend(c.g, c.step, i);
      for (const auto& p : v.points)
        for (const auto& mu : p.mu.explicit_values()) EXPECT_GE(tower_oracle(c.g, c.step, p.lambda, mu, i), 1u);
      for (int k = 0; k < 20; ++k) {
        Rational lambda = c.step.epsilon == -1 ? Rational(s.coin() ? 1 : -1) : (k % 2 ? Rational(1) : s.nonzero_rational());
        QuadScalar mu(k % 3 ? s.nonzero_rational() : Rational(1));
        bool member = v.contains(lambda, mu);
        EXPECT_EQ(tower_oracle(c.g, c.step, lambda, mu, i) >= 1, member);
      }
    }
  }
}
