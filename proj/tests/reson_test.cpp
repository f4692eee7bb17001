#include <gtest/gtest.h>

#include <algorithm>

#include "jumploci/exactnum/sampler.hpp"
#include "jumploci/liealg/catalog.hpp"
#include "jumploci/reson/resonance.hpp"
#include "jumploci/reson/twisted.hpp"

using namespace jumploci;

namespace {

const Vector<Rational> kH{1, 0, 0};
const Vector<Rational> kXp{0, 1, 0};

std::vector<CDGA> sample_algebras() {
  std::vector<CDGA> out;
  for (const auto& name : catalog_names()) out.push_back(chevalley_eilenberg(catalog_algebra(name)));
  out.push_back(chevalley_eilenberg(metabelian({{1, 1}, {2, 1}})));
  out.push_back(chevalley_eilenberg(metabelian({{-1, 1}, {1, 1}})));
  out.push_back(free_model(2));
  return out;
}

Vector<Rational> random_closed(const CDGA& a, Sampler& s) {
  auto h1 = closed_one_forms(a);
  Vector<Rational> eta(a.dim(1), Rational(0));
  if (h1.empty()) return eta;
  while (std::all_of(eta.begin(), eta.end(), [](const Rational& x) { return x == 0; }))
    for (const auto& c : h1) {
      Rational k = s.rational();
      for (std::size_t j = 0; j < eta.size(); ++j) eta[j] += k * c[j];
    }
  return eta;
}

Vector<Rational> scaled(const Vector<Rational>& v, const Rational& t) {
  Vector<Rational> out = v;
  for (auto& x : out) x *= t;
  return out;
}

}  // namespace

TEST(Sl2Irrep, Examples) {
  Sl2Rep t1 = sl2_irrep(1);
  for (const auto& m : t1.theta) EXPECT_TRUE(m.is_zero());
  Sl2Rep t2 = sl2_irrep(2);
  EXPECT_EQ(t2.theta[0], (Matrix<Rational>{{1, 0}, {0, -1}}));
  EXPECT_EQ(t2.theta[1], (Matrix<Rational>{{0, 1}, {0, 0}}));
  EXPECT_EQ(t2.theta[2], (Matrix<Rational>{{0, 0}, {1, 0}}));
  EXPECT_THROW(sl2_irrep(0), std::invalid_argument);
}

TEST(Sl2Irrep, RelationsHoldUpToEight) {
  for (std::size_t m = 1; m <= 8; ++m) EXPECT_EQ(sl2_rep_violation(sl2_irrep(m)), "") << m;
  EXPECT_EQ(sl2_rep_violation(sl2_rep({2, 3, 1})), "");
  Sl2Rep bad = sl2_irrep(3);
  bad.theta[1](0, 1) = 5;
  EXPECT_NE(sl2_rep_violation(bad), "");
}

TEST(DetTheta, Examples) {
  EXPECT_EQ(det_theta(sl2_irrep(2)).to_string(), "-1*a^2 - 1*b*c");
  EXPECT_TRUE(det_theta(sl2_irrep(3)).is_zero());
  MultiPoly cone = MultiPoly::variable("a").pow(2) + MultiPoly::variable("b") * MultiPoly::variable("c");
  EXPECT_EQ(det_theta(sl2_rep({2, 2})), cone * cone);
}

TEST(DetTheta, AgreesWithNumericDeterminant) {
  Sampler s(3);
  for (const auto& dims : std::vector<std::vector<std::size_t>>{{2}, {3}, {4}, {2, 2}, {2, 4}, {5}}) {
    Sl2Rep rep = sl2_rep(dims);
    MultiPoly det = det_theta(rep);
    for (int k = 0; k < 10; ++k) {
      auto g = s.vector(3);
      EXPECT_EQ(det.eval<Rational>(g), determinant(rep.apply(g)));
    }
  }
}

TEST(EigenSquares, Examples) {
  auto sorted = [](std::vector<Rational> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  EXPECT_EQ(sorted(eigen_squares(sl2_irrep(2), kH)), (std::vector<Rational>{1, 1}));
  EXPECT_EQ(sorted(eigen_squares(sl2_irrep(3), kH)), (std::vector<Rational>{0, 4, 4}));
  EXPECT_EQ(sorted(eigen_squares(sl2_irrep(2), kXp)), (std::vector<Rational>{0, 0}));
}

TEST(EigenSquares, MatchCharacteristicPolynomialOfSquare) {
  Sampler s(8);
  for (const auto& dims : std::vector<std::vector<std::size_t>>{{2}, {3}, {4}, {2, 3}}) {
    Sl2Rep rep = sl2_rep(dims);
    for (int k = 0; k < 10; ++k) {
      auto g = s.vector(3);
      Matrix<Rational> t = rep.apply(g);
      UPoly expected(1);
      for (const auto& sq : eigen_squares(rep, g)) expected *= UPoly(std::vector<Rational>{-sq, 1});
      EXPECT_EQ(char_poly(t * t), expected);
    }
  }
}

TEST(TwistedDims, Examples) {
  CDGA aff = chevalley_eilenberg(aff1());
  Sl2Rep t2 = sl2_irrep(2);
  auto b = betti(aff);
  auto zero = twisted_dims(aff, t2, GOneForm(2, 3, Rational(0)));
  for (std::size_t i = 0; i < b.size(); ++i) EXPECT_EQ(zero[i], 2 * b[i]);
  EXPECT_EQ(twisted_dims(aff, t2, segre({1, 0}, kH))[1], 1u);
  EXPECT_EQ(twisted_dims(aff, t2, segre({1, 0}, scaled(kH, Rational(1, 2))))[1], 0u);
  EXPECT_THROW(twisted_dims(aff, t2, segre({0, 1}, kH)), NotFlat);
}

TEST(TwistedDims, EulerCharacteristicIsConstant) {
  Sampler s(11);
  for (const auto& a : sample_algebras()) {
    long chi = 0;
    for (int i = 0; i <= a.top_degree(); ++i) chi += (i % 2 ? -1 : 1) * static_cast<long>(a.dim(i));
    for (std::size_t m : {2, 3}) {
      Sl2Rep rep = sl2_irrep(m);
      for (int k = 0; k < 5; ++k) {
        GOneForm w = segre(random_closed(a, s), s.vector(3));
        auto dims = twisted_dims(a, rep, w);
        long tchi = 0;
        for (std::size_t i = 0; i < dims.size(); ++i) tchi += (i % 2 ? -1 : 1) * static_cast<long>(dims[i]);
        EXPECT_EQ(tchi, static_cast<long>(m) * chi);
      }
    }
  }
}

TEST(TwistedDims, WeightSplitting) {
  Sampler s(12);
  for (const auto& a : sample_algebras()) {
    if (closed_one_forms(a).empty()) continue;
    for (std::size_t m : {2, 3, 4}) {
      auto eta = random_closed(a, s);
      // Include a resonant weight on purpose: scale eta onto a rational point.
      auto line = rank1_resonance_on_line(a, eta, 1);
      if (!line.entire)
        for (const auto& c : line.factored.rational_roots)
          if (c.value != 0) {
            eta = scaled(eta, c.value / Rational(static_cast<long>(m) - 1));
            break;
          }
      auto dims = twisted_dims(a, sl2_irrep(m), segre(eta, kH));
      for (int i = 0; i <= a.top_degree(); ++i) {
        std::size_t sum = 0;
        for (long k = 0; k < static_cast<long>(m); ++k)
          sum += rank_one_twisted_dim(a, scaled(eta, Rational(static_cast<long>(m) - 1 - 2 * k)), i);
        EXPECT_EQ(dims[static_cast<std::size_t>(i)], sum);
      }
    }
  }
}

TEST(LieCohomology, Examples) {
  LieAlgebra g = sl2();
  std::vector<Matrix<Rational>> ad{g.ad(0), g.ad(1), g.ad(2)};
  EXPECT_EQ(lie_cohomology(g, ad, 1), 0u);
  EXPECT_EQ(lie_cohomology(aff1(), {Matrix<Rational>{{1}}, Matrix<Rational>{{0}}}, 1), 1u);
  EXPECT_EQ(lie_cohomology(aff1(), {Matrix<Rational>{{1}}, Matrix<Rational>{{0}}}, 1),
            twisted_dims(chevalley_eilenberg(aff1()), sl2_irrep(2), segre({1, 0}, kH))[1]);
  for (const auto& name : catalog_names()) {
    LieAlgebra h = catalog_algebra(name);
    std::vector<Matrix<Rational>> triv(h.dim(), Matrix<Rational>(1, 1, Rational(0)));
    auto b = betti(chevalley_eilenberg(h));
    for (std::size_t i = 0; i < b.size(); ++i) EXPECT_EQ(lie_cohomology(h, triv, static_cast<int>(i)), b[i]) << name;
  }
  EXPECT_THROW(lie_cohomology(aff1(), {Matrix<Rational>{{0}}, Matrix<Rational>{{1}}}, 1), NotAModule);
}

TEST(LieCohomology, WhiteheadForIrreps) {
  LieAlgebra g = sl2();
  for (std::size_t m = 1; m <= 5; ++m) {
    Sl2Rep rep = sl2_irrep(m);
    std::vector<Matrix<Rational>> rho(rep.theta.begin(), rep.theta.end());
    EXPECT_EQ(lie_cohomology(g, rho, 1), 0u);
    EXPECT_EQ(lie_cohomology(g, rho, 2), 0u);
  }
}

TEST(LineResonance, Examples) {
  CDGA aff = chevalley_eilenberg(aff1());
  auto line = rank1_resonance_on_line(aff, {1, 0}, 1);
  ASSERT_FALSE(line.entire);
  ASSERT_EQ(line.points.size(), 2u);
  EXPECT_EQ(line.points[0], QuadScalar(0));
  EXPECT_EQ(line.points[1], QuadScalar(1));
  for (long c : {-1, 0, 1, 2})
    EXPECT_EQ(line.contains(Rational(c)), rank_one_twisted_dim(aff, {Rational(c), 0}, 1) >= 1);
  Sampler s(4);
  CDGA h3 = chevalley_eilenberg(heisenberg(1));
  for (int k = 0; k < 5; ++k) {
    auto l = rank1_resonance_on_line(h3, random_closed(h3, s), 1);
    ASSERT_EQ(l.points.size(), 1u);
    EXPECT_EQ(l.points[0], QuadScalar(0));
  }
  EXPECT_TRUE(rank1_resonance_on_line(free_model(2), {1, 2}, 1).entire);
  EXPECT_THROW(rank1_resonance_on_line(aff, {0, 1}, 1), std::invalid_argument);
}

TEST(LineResonance, AgreesWithRankOneDims) {
  Sampler s(5);
  for (const auto& a : sample_algebras()) {
    if (closed_one_forms(a).empty()) continue;
    for (int k = 0; k < 3; ++k) {
      auto eta = random_closed(a, s);
      for (int i = 0; i <= a.top_degree(); ++i) {
        auto line = rank1_resonance_on_line(a, eta, i);
        std::vector<Rational> probes{0, 1, -1, 2, Rational(1, 2)};
        for (const auto& r : line.factored.rational_roots) probes.push_back(r.value);
        for (const auto& c : probes)
          EXPECT_EQ(line.contains(c), rank_one_twisted_dim(a, scaled(eta, c), i) >= 1);
      }
    }
  }
}

TEST(TrivialResonance, Examples) {
  auto aff = trivial_resonance(chevalley_eilenberg(aff1()), 1, 1);
  EXPECT_EQ(aff.verdict, ResonanceVerdict::CertifiedTrivial);
  ASSERT_EQ(aff.points.size(), 2u);
  EXPECT_EQ(aff.points[1], (std::vector<QuadScalar>{QuadScalar(1), QuadScalar(0)}));
  EXPECT_EQ(trivial_resonance(free_model(2), 1, 1).verdict, ResonanceVerdict::CertifiedNontrivial);
  auto h3 = trivial_resonance(chevalley_eilenberg(heisenberg(1)), 1, 1, 50);
  EXPECT_EQ(h3.verdict, ResonanceVerdict::ProbabilisticallyTrivial);
  EXPECT_EQ(h3.lines_probed, 50u);
  EXPECT_EQ(h3.points.size(), 1u);
}

TEST(EigenvalueCriterion, Examples) {
  CDGA aff = chevalley_eilenberg(aff1());
  Sl2Rep t2 = sl2_irrep(2);
  EXPECT_TRUE(eigenvalue_criterion(aff, t2, {1, 0}, kH, 1));
  EXPECT_FALSE(eigenvalue_criterion(aff, t2, {1, 0}, scaled(kH, Rational(1, 2)), 1));
  EXPECT_TRUE(eigenvalue_criterion(aff, t2, {3, 0}, kXp, 1));
}

TEST(EigenvalueCriterion, AgreesWithTwistedOracle) {
  Sampler s(2024);
  std::size_t positives = 0, total = 0;
  for (const auto& a : sample_algebras()) {
    if (closed_one_forms(a).empty()) continue;
    for (const auto& dims : std::vector<std::vector<std::size_t>>{{2}, {3}, {2, 1}, {4}}) {
      Sl2Rep rep = sl2_rep(dims);
      for (int k = 0; k < 8; ++k) {
        auto eta = random_closed(a, s);
        Vector<Rational> g;
        switch (k % 4) {
          case 0: g = s.vector(3); break;
          case 1: g = scaled(kH, s.nonzero_rational()); break;
          case 2: {
            Rational x = s.rational(), y = s.nonzero_rational();
            g = {x, y, Rational(-x * x / y)};
            break;
          }
          default: {
            // Hyperbolic g = diag-like with rational eigenvalues, aimed at a
            // rational resonant point of the line through eta.
            Rational x = s.rational(), y = s.nonzero_rational(), mu = s.nonzero_rational();
            g = {x, y, Rational((mu * mu - x * x) / y)};
            auto line = rank1_resonance_on_line(a, eta, 1);
            if (!line.entire)
              for (const auto& r : line.factored.rational_roots)
                if (r.value != 0) eta = scaled(eta, r.value / mu);
          }
        }
        for (int i = 0; i <= a.top_degree(); ++i) {
          bool crit = eigenvalue_criterion(a, rep, eta, g, i);
          bool oracle = twisted_dims(a, rep, segre(eta, g))[static_cast<std::size_t>(i)] >= 1;
          EXPECT_EQ(crit, oracle);
          positives += oracle;
          ++total;
        }
      }
    }
  }
  EXPECT_GT(positives, total / 10);
  EXPECT_LT(positives, total);
}

TEST(PiMembership, Examples) {
  CDGA aff = chevalley_eilenberg(aff1());
  Sl2Rep t2 = sl2_irrep(2);
  EXPECT_TRUE(pi_membership(aff, t2, GOneForm(2, 3, Rational(0))));
  EXPECT_TRUE(pi_membership(aff, t2, segre({1, 0}, kXp)));
  EXPECT_FALSE(pi_membership(aff, t2, segre({1, 0}, kH)));
}

TEST(Germs, OriginResonatesIffCohomology) {
  for (const auto& a : sample_algebras()) {
    auto b = betti(a);
    for (std::size_t m : {2, 3}) {
      auto dims = twisted_dims(a, sl2_irrep(m), GOneForm(a.dim(1), 3, Rational(0)));
      for (std::size_t i = 0; i < b.size(); ++i) EXPECT_EQ(dims[i] >= 1, b[i] >= 1);
    }
  }
}

TEST(Germs, PiPointsResonate) {
  Sampler s(77);
  for (const auto& a : sample_algebras()) {
    auto b = betti(a);
    if (closed_one_forms(a).empty()) continue;
    for (std::size_t m : {2, 3}) {
      Sl2Rep rep = sl2_irrep(m);
      for (int k = 0; k < 10; ++k) {
        Rational x = s.rational(), y = s.nonzero_rational();
        GOneForm w = segre(random_closed(a, s), {x, y, Rational(-x * x / y)});
        ASSERT_TRUE(pi_membership(a, rep, w));
        auto dims = twisted_dims(a, rep, w);
        for (std::size_t i = 0; i < b.size(); ++i)
          if (b[i] >= 1) EXPECT_GE(dims[i], 1u);
      }
    }
  }
}

TEST(GermReport, Examples) {
  Sl2Rep t2 = sl2_irrep(2);
  CDGA s = chevalley_eilenberg(sl2());
  EXPECT_EQ(germ_report(s, t2, 0, 1).kind, GermKind::OriginOnly);
  EXPECT_EQ(germ_report(s, t2, 3, 1).kind, GermKind::OriginOnly);
  EXPECT_EQ(germ_report(s, t2, 1, 1).kind, GermKind::Empty);
  EXPECT_EQ(germ_report(s, t2, 2, 1).kind, GermKind::Empty);
  CDGA aff = chevalley_eilenberg(aff1());
  EXPECT_EQ(germ_report(aff, t2, 2, 1).kind, GermKind::Empty);
  auto r = germ_report(aff, t2, 1, 7, 30);
  EXPECT_EQ(r.kind, GermKind::Cone);
  EXPECT_EQ(r.h1_dim, 1u);
  EXPECT_NE(r.det_locus.find("nilpotent cone"), std::string::npos);
  EXPECT_EQ(r.evidence.size(), 30u);
  EXPECT_EQ(r.exceptions, 0u);
  std::size_t nilpotent = 0;
  for (const auto& e : r.evidence) nilpotent += e.det_theta == 0;
  EXPECT_GT(nilpotent, 0u);
  EXPECT_LT(nilpotent, 30u);
  auto j = to_json(r);
  for (const char* key : {"degree", "betti", "h1_dim", "verdict", "resonance_points", "evidence"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["evidence"][0].size(), 5u);
  auto h3 = germ_report(chevalley_eilenberg(heisenberg(1)), sl2_irrep(3), 1, 7, 10);
  EXPECT_EQ(h3.kind, GermKind::Cone);
  EXPECT_NE(h3.det_locus.find("sl2"), std::string::npos);
  EXPECT_EQ(h3.exceptions, 0u);
  EXPECT_EQ(germ_report(free_model(2), t2, 1, 1).kind, GermKind::NotIsolated);
}
