#include <gtest/gtest.h>

#include <set>

#include "jumploci/cdga/cdga.hpp"
#include "jumploci/conn/flat.hpp"
#include "jumploci/conn/hom.hpp"
#include "jumploci/conn/section.hpp"
#include "jumploci/exactnum/sampler.hpp"
#include "jumploci/liealg/catalog.hpp"

using namespace jumploci;

namespace {

Vector<Rational> H() { return {1, 0, 0}; }
Vector<Rational> Xp() { return {0, 1, 0}; }
Vector<Rational> Xm() { return {0, 0, 1}; }

GOneForm rows(const std::vector<Vector<Rational>>& r) {
  GOneForm m(r.size(), r.empty() ? 0 : r[0].size(), Rational(0));
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r[i].size(); ++j) m(i, j) = r[i][j];
  return m;
}

Matrix<Rational> random_invertible(Sampler& s) {
  while (true) {
    Matrix<Rational> p{{s.rational(), s.rational()}, {s.rational(), s.rational()}};
    if (determinant(p) != 0) return p;
  }
}

}  // namespace

TEST(McDefect, Examples) {
  CDGA aff = chevalley_eilenberg(aff1());
  LieAlgebra g = sl2();
  EXPECT_TRUE(mc_defect(aff, g, GOneForm(2, 3, Rational(0))).is_zero());
  // omega = x* (x) H: defect = d x* (x) H = -u*^x* (x) H.
  GOneForm omega = rows({{0, 0, 0}, H()});
  EXPECT_EQ(mc_defect(aff, g, omega), (Matrix<Rational>{{-1, 0, 0}}));
  // Free model: every omega is flat.
  Sampler s(5);
  CDGA fm = free_model(2);
  for (int i = 0; i < 10; ++i) {
    GOneForm w = rows({s.vector(3), s.vector(3)});
    EXPECT_TRUE(is_flat(fm, g, w));
  }
}

TEST(McDefect, RankOneClosedFormsAreFlat) {
  Sampler s(17);
  LieAlgebra g = sl2();
  for (const auto& h : {aff1(), heisenberg(1), metabelian({{2, 2}}), heisenberg(2)}) {
    CDGA a = chevalley_eilenberg(h);
    auto closed = closed_one_forms(a);
    for (int t = 0; t < 10; ++t) {
      Vector<Rational> eta(a.dim(1), Rational(0));
      for (const auto& c : closed) {
        Rational k = s.rational();
        for (std::size_t i = 0; i < eta.size(); ++i) eta[i] += k * c[i];
      }
      GOneForm w = segre(eta, s.vector(3));
      EXPECT_TRUE(is_flat(a, g, w));
      EXPECT_TRUE(in_F1(a, w));
    }
  }
}

TEST(Segre, Examples) {
  EXPECT_TRUE(segre({0, 0}, {1, 2, 3}).is_zero());
  EXPECT_EQ(segre({1, 0}, H()), rows({H(), {0, 0, 0}}));
  Vector<Rational> eta{2, -3}, g{1, Rational(1, 2), 5};
  Rational t(3, 7);
  Vector<Rational> eta_t{eta[0] / t, eta[1] / t}, g_t{g[0] * t, g[1] * t, g[2] * t};
  EXPECT_EQ(segre(eta_t, g_t), segre(eta, g));
}

TEST(Segre, FibersAreTorusOrbits) {
  Sampler s(21);
  for (int i = 0; i < 30; ++i) {
    auto eta = s.nonzero_vector(3);
    auto g = s.nonzero_vector(3);
    GOneForm w = segre(eta, g);
    Vector<Rational> eta2, g2;
    ASSERT_TRUE(split_rank_one(w, eta2, g2));
    // Recover t from the first nonzero coordinate and check the whole vectors.
    std::size_t k = 0;
    while (g[k] == 0) ++k;
    Rational t = g2[k] / g[k];
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(g2[j], t * g[j]);
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(eta2[j] * t, eta[j]);
  }
}

TEST(InF1, Examples) {
  CDGA aff = chevalley_eilenberg(aff1());
  EXPECT_TRUE(in_F1(aff, GOneForm(2, 3, Rational(0))));
  EXPECT_TRUE(in_F1(aff, segre({1, 0}, H())));
  EXPECT_FALSE(in_F1(aff, segre({0, 1}, H())));
  EXPECT_FALSE(in_F1(aff, rows({H(), Xp()})));
}

TEST(HomDefect, Examples) {
  LieAlgebra k = sl2();
  EXPECT_TRUE(hom_defect(aff1(), k, GOneForm(2, 3, Rational(0))).is_zero());
  EXPECT_TRUE(is_lie_hom(k, k, Matrix<Rational>::identity(3)));
  // metabelian [(2,1)]: basis (z1, u); phi u = H, phi z = Xp.
  EXPECT_TRUE(is_lie_hom(metabelian({{2, 1}}), k, rows({Xp(), H()})));
  EXPECT_FALSE(is_lie_hom(metabelian({{2, 1}}), k, rows({Xp(), H().size() ? Vector<Rational>{2, 0, 0} : H()})));
}

TEST(MetabelianFamily, Examples) {
  EXPECT_EQ(metabelian_family({{2, 1}}, 2, 1, {1}), rows({Xp(), H()}));
  EXPECT_EQ(metabelian_family({{2, 2}}, 2, 1, {0, 1}), rows({{0, 0, 0}, Xp(), H()}));
  EXPECT_EQ(metabelian_family({{2, 1}}, 2, -1, {1}), rows({Xm(), {-1, 0, 0}}));
  EXPECT_THROW(metabelian_family({{2, 1}}, 3, 1, {1}), std::invalid_argument);
  EXPECT_THROW(metabelian_family({{2, 2}}, 2, 1, {1, 1}), std::invalid_argument);
  EXPECT_THROW(metabelian_family({{2, 1}}, 2, 1, {0}), std::invalid_argument);
  EXPECT_THROW(metabelian_family({{2, 1}, {3, 1}}, 2, 1, {1, 1}), std::invalid_argument);
  EXPECT_THROW(metabelian_family({{0, 2}}, 0, 1, {0, 1}), std::invalid_argument);
}

TEST(MetabelianFamily, OutputsAreHomomorphismsOfRankTwo) {
  Sampler s(31);
  std::vector<std::vector<JordanBlock>> data{{{2, 1}}, {{2, 2}}, {{2, 1}, {0, 1}}, {{2, 1}, {3, 1}}, {{-1, 2}, {-1, 1}}};
  for (const auto& blocks : data) {
    LieAlgebra h = metabelian(blocks);
    std::set<Rational> eig;
    for (const auto& b : blocks)
      if (b.lambda != 0) eig.insert(b.lambda);
    for (const auto& l : eig)
      for (int eps : {1, -1}) {
        std::vector<Rational> t;
        for (const auto& b : blocks)
          for (std::size_t i = 0; i < b.size; ++i) t.push_back(b.lambda == l && i + 1 == b.size ? s.nonzero_rational() : Rational(0));
        GOneForm phi = metabelian_family(blocks, l, eps, t);
        EXPECT_TRUE(is_lie_hom(h, sl2(), phi));
        EXPECT_EQ(image_rank(phi), 2u);
        // Conjugates are recognized.
        GOneForm conj = conjugate_sl2(phi, random_invertible(s));
        EXPECT_TRUE(is_lie_hom(h, sl2(), conj));
        auto cls = classify_metabelian_hom(blocks, conj);
        EXPECT_TRUE(cls.in_family) << cls.reason;
      }
  }
}

TEST(MetabelianCertificate, Examples) {
  MultiPoly f = metabelian_certificate({{2, 1}});
  EXPECT_EQ(f.to_string(), "-1*u.H^2 - 1*u.Xp*u.Xm + 1");
  LieAlgebra h = metabelian({{2, 1}});
  EXPECT_EQ(eval_on_hom(f, h, sl2(), rows({Xp(), H()})), 0);
  EXPECT_EQ(f.constant_term(), 1);
  MultiPoly f2 = metabelian_certificate({{2, 1}, {3, 1}});
  MultiPoly d = -(MultiPoly::variable("u.H").pow(2)) - MultiPoly::variable("u.Xp") * MultiPoly::variable("u.Xm");
  EXPECT_EQ(f2, (d + MultiPoly(1)) * (d + MultiPoly(Rational(9, 4))));
  EXPECT_THROW(metabelian_certificate({{0, 2}}), NilpotentInput);
}

TEST(NilpotencyDichotomy, FamilyConstructorRejectsNilpotentData) {
  for (const auto& blocks : std::vector<std::vector<JordanBlock>>{{{0, 2}}, {{0, 1}, {0, 1}}, {{0, 3}}}) {
    ASSERT_TRUE(is_nilpotent(metabelian(blocks)));
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.size;
    std::vector<Rational> t(n, Rational(0));
    t.back() = 1;
    for (int eps : {1, -1}) EXPECT_THROW(metabelian_family(blocks, 0, eps, t), std::invalid_argument);
  }
}

TEST(RepOnSection, Aff1Line) {
  // s * (phi u = H/2, phi x = Xp): [sH/2, sXp] = s^2 Xp must equal s Xp.
  AffineSection sec{GOneForm(2, 3, Rational(0)), {rows({{Rational(1, 2), 0, 0}, Xp()})}};
  auto sol = rep_on_section(aff1(), sl2(), sec);
  ASSERT_FALSE(sol.whole_section);
  ASSERT_EQ(sol.points.size(), 2u);
  EXPECT_EQ(sol.points[0][0], QuadScalar(0));
  EXPECT_EQ(sol.points[1][0], QuadScalar(1));
  EXPECT_TRUE(is_lie_hom(aff1(), sl2(), section_point(sec, {1})));
}

TEST(RepOnSection, HeisenbergRankTwoLines) {
  Sampler s(41);
  LieAlgebra h = heisenberg(1);
  for (int i = 0; i < 20; ++i) {
    GOneForm d(3, 3, Rational(0));
    auto a = s.nonzero_vector(3), b = s.nonzero_vector(3);
    for (std::size_t j = 0; j < 3; ++j) {
      d(0, j) = a[j];
      d(1, j) = b[j];
      d(2, j) = s.rational();
    }
    if (rank(d) < 2) continue;
    auto sol = rep_on_section(h, sl2(), {GOneForm(3, 3, Rational(0)), {d}});
    ASSERT_FALSE(sol.whole_section);
    ASSERT_EQ(sol.points.size(), 1u);
    EXPECT_EQ(sol.points[0][0], QuadScalar(0));
  }
}

TEST(RepOnSection, Sl2ScalingLine) {
  auto sol = rep_on_section(sl2(), sl2(), {GOneForm(3, 3, Rational(0)), {Matrix<Rational>::identity(3)}});
  ASSERT_EQ(sol.points.size(), 2u);
  EXPECT_EQ(sol.points[1][0], QuadScalar(1));
}

TEST(RepOnSection, PlaneWithCurveComponent) {
  // phi u = s H, phi z = w Xp for [(2,1)]: 2w = 2sw, so {w = 0} and {s = 1}.
  AffineSection sec{GOneForm(2, 3, Rational(0)), {rows({{0, 0, 0}, H()}), rows({Xp(), {0, 0, 0}})}};
  auto sol = rep_on_section(metabelian({{2, 1}}), sl2(), sec, 3);
  EXPECT_FALSE(sol.whole_section);
  EXPECT_EQ(sol.curve.total_degree(), 2);
  EXPECT_TRUE(sol.points.empty());
  EXPECT_FALSE(sol.curve_samples.empty());
  for (const auto& p : sol.curve_samples) EXPECT_TRUE(is_lie_hom(metabelian({{2, 1}}), sl2(), section_point(sec, p)));
  EXPECT_THROW(rep_on_section(aff1(), sl2(), {GOneForm(2, 3, Rational(0)), {sec.base, sec.base, sec.base}}),
               std::invalid_argument);
}

TEST(RepOnSection, IsolatedPointsInPlane) {
  // aff(1): phi u = H/2 + s Xp, phi x = w Xp... plus a base point; all found
  // points must be homomorphisms.
  Sampler s(77);
  LieAlgebra h = aff1();
  for (int i = 0; i < 10; ++i) {
    AffineSection sec{rows({s.vector(3), s.vector(3)}), {rows({s.vector(3), s.vector(3)}), rows({s.vector(3), s.vector(3)})}};
    auto sol = rep_on_section(h, sl2(), sec, 9);
    for (const auto& p : sol.points) {
      if (!p[0].is_rational() || !p[1].is_rational()) continue;
      EXPECT_TRUE(is_lie_hom(h, sl2(), section_point(sec, {p[0].rational_part(), p[1].rational_part()})));
    }
    for (const auto& p : sol.curve_samples) EXPECT_TRUE(is_lie_hom(h, sl2(), section_point(sec, p)));
  }
}

TEST(SolvableCertificate, Aff1AndNilpotent) {
  auto w = solvable_certificate(aff1());
  ASSERT_EQ(w.components.size(), 1u);
  EXPECT_FALSE(w.contains_origin());
  // Rank-two homomorphisms u -> H/2, x -> Xp lie in W.
  EXPECT_TRUE(w.contains(aff1(), rows({{Rational(1, 2), 0, 0}, Xp()})));
  EXPECT_TRUE(solvable_certificate(heisenberg(1)).components.empty());
  EXPECT_THROW(solvable_certificate(sl2()), std::invalid_argument);
}

TEST(SolvableCertificate, ContainsRankTwoSolutionsOnSections) {
  Sampler s(123);
  std::vector<LieAlgebra> algebras{aff1(), borel(), metabelian({{2, 1}, {3, 1}}), metabelian({{1, 2}})};
  // A 2-step solvable algebra that is not metabelian of the form V x C: aff1 (+) aff1.
  LieAlgebra two({"u1", "x1", "u2", "x2"});
  two.set_bracket(0, 1, two.unit(1));
  two.set_bracket(2, 3, two.unit(3));
  algebras.push_back(two);
  for (const auto& h : algebras) {
    auto w = solvable_certificate(h);
    EXPECT_FALSE(w.contains_origin());
    std::size_t found = 0;
    for (int i = 0; i < 30; ++i) {
      // Coordinate planes through random rank-two family-like base points.
      std::size_t n = h.dim() * 3;
      std::size_t p = static_cast<std::size_t>(s.integer(0, static_cast<long>(n) - 1));
      std::size_t q = static_cast<std::size_t>(s.integer(0, static_cast<long>(n) - 1));
      if (p == q) continue;
      GOneForm dp(h.dim(), 3, Rational(0)), dq(h.dim(), 3, Rational(0));
      dp(p / 3, p % 3) = 1;
      dq(q / 3, q % 3) = 1;
      auto sol = rep_on_section(h, sl2(), {GOneForm(h.dim(), 3, Rational(0)), {dp, dq}}, 5);
      std::vector<std::vector<Rational>> pts = sol.curve_samples;
      for (const auto& x : sol.points)
        if (x[0].is_rational() && x[1].is_rational()) pts.push_back({x[0].rational_part(), x[1].rational_part()});
      for (const auto& x : pts) {
        GOneForm phi = section_point({GOneForm(h.dim(), 3, Rational(0)), {dp, dq}}, x);
        ASSERT_TRUE(is_lie_hom(h, sl2(), phi));
        if (image_rank(phi) >= 2) {
          ++found;
          EXPECT_TRUE(w.contains(h, phi));
        }
      }
    }
    (void)found;
  }
}
