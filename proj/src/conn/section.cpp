#include "jumploci/conn/section.hpp"

#include <algorithm>
#include <set>

#include "jumploci/exactnum/sampler.hpp"
#include "jumploci/poly/bivariate.hpp"

namespace jumploci {

namespace {

const std::vector<std::string>& param_names() {
  static const std::vector<std::string> names{"s", "w"};
  return names;
}

void add_point(std::vector<std::vector<QuadScalar>>& pts, std::vector<QuadScalar> p) {
  if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(std::move(p));
}

bool all_vanish(const std::vector<RecPoly>& qs, const QuadScalar& s0, const QuadScalar& w0) {
  for (const auto& q : qs) {
    MultiPoly m = from_recursive(q, "s", "w");
    try {
      if (m.eval<QuadScalar>({s0, w0}) != QuadScalar(0)) return false;
    } catch (const std::domain_error&) {
      return false;
    }
  }
  return true;
}

// Common zeros of q_i(s0, w) in w, for a fixed s0.
UPoly common_w(const std::vector<RecPoly>& qs, const Rational& s0) {
  UPoly g;
  for (const auto& q : qs) g = gcd(g, eval_s(q, s0));
  return g;
}

UPoly common_s(const std::vector<RecPoly>& qs, const Rational& w0) {
  UPoly g;
  for (const auto& q : qs) g = gcd(g, eval_w(q, w0));
  return g;
}

// Swaps the roles of s and w.
RecPoly swap_vars(const RecPoly& p) {
  return to_recursive(from_recursive(p, "s", "w").renamed({{"s", "w"}, {"w", "s"}}), "s", "w");
}

UPoly eliminate(const std::vector<RecPoly>& qs, Sampler& rng) {
  for (int attempt = 0; attempt < 16; ++attempt) {
    RecPoly a, b;
    for (const auto& q : qs) {
      Rational ca = rng.integer(-9, 9), cb = rng.integer(-9, 9);
      if (a.size() < q.size()) a.resize(q.size());
      if (b.size() < q.size()) b.resize(q.size());
      for (std::size_t k = 0; k < q.size(); ++k) {
        a[k] += q[k] * UPoly(ca);
        b[k] += q[k] * UPoly(cb);
      }
    }
    while (!a.empty() && a.back().is_zero()) a.pop_back();
    while (!b.empty() && b.back().is_zero()) b.pop_back();
    if (a.empty() || b.empty()) continue;
    UPoly r = resultant_w(a, b);
    if (!r.is_zero()) return r;
  }
  throw std::runtime_error("rep_on_section: elimination failed to separate the system");
}

void solve_finite(const std::vector<RecPoly>& qs, Sampler& rng, SectionSolution& out) {
  // A nonzero constant among the q_i means no finite solutions.
  for (const auto& q : qs)
    if (degree_w(q) == 0 && q[0].degree() == 0) return;

  std::vector<RecPoly> swapped;
  for (const auto& q : qs) swapped.push_back(swap_vars(q));
  FactoredPoly rs = factor(eliminate(qs, rng));
  FactoredPoly rw = factor(eliminate(swapped, rng));
  if (!rs.residual.empty() || !rw.residual.empty()) {
    out.complete = false;
    for (const auto& f : rs.residual) out.unrepresented.push_back("s root of " + f.poly.to_string("s"));
    for (const auto& f : rw.residual) out.unrepresented.push_back("w root of " + f.poly.to_string("w"));
  }
  std::vector<std::vector<QuadScalar>> pts;
  auto handle_line = [&](const Rational& fixed, bool fixed_is_s) {
    UPoly g = fixed_is_s ? common_w(qs, fixed) : common_s(qs, fixed);
    if (g.is_zero()) throw std::logic_error("rep_on_section: gcd-free system vanishes on a line");
    FactoredPoly f = factor(g);
    for (const auto& r : f.explicit_roots())
      add_point(pts, fixed_is_s ? std::vector<QuadScalar>{QuadScalar(fixed), r}
                                : std::vector<QuadScalar>{r, QuadScalar(fixed)});
    for (const auto& res : f.residual) {
      out.complete = false;
      out.unrepresented.push_back((fixed_is_s ? "s = " : "w = ") + fixed.get_str() + ", root of " +
                                  res.poly.to_string(fixed_is_s ? "w" : "s"));
    }
  };
  for (const auto& r : rs.rational_roots) handle_line(r.value, true);
  for (const auto& r : rw.rational_roots) handle_line(r.value, false);
  // Both coordinates irrational: pair quadratic roots with a common radicand.
  std::vector<QuadScalar> sq, wq;
  for (const auto& q : rs.quadratics) {
    auto [x, y] = quadratic_roots(q.poly);
    sq.push_back(x);
    sq.push_back(y);
  }
  for (const auto& q : rw.quadratics) {
    auto [x, y] = quadratic_roots(q.poly);
    wq.push_back(x);
    wq.push_back(y);
  }
  for (const auto& s0 : sq)
    for (const auto& w0 : wq)
      if (all_vanish(qs, s0, w0)) add_point(pts, {s0, w0});
  // Every irrational root of an eliminant must be the coordinate of some point.
  for (const auto& s0 : sq)
    if (std::none_of(pts.begin(), pts.end(), [&](const auto& p) { return p[0] == s0; })) {
      out.complete = false;
      out.unrepresented.push_back("s = " + s0.to_string() + " (no matching w found)");
    }
  for (const auto& w0 : wq)
    if (std::none_of(pts.begin(), pts.end(), [&](const auto& p) { return p[1] == w0; })) {
      out.complete = false;
      out.unrepresented.push_back("w = " + w0.to_string() + " (no matching s found)");
    }
  out.points = std::move(pts);
}

void sample_curve(const RecPoly& g, Sampler& rng, SectionSolution& out) {
  std::set<std::vector<Rational>> seen;
  for (int k = 0; k < 12; ++k) {
    Rational v = rng.rational();
    for (bool fix_s : {true, false}) {
      UPoly line = fix_s ? eval_s(g, v) : eval_w(g, v);
      if (line.is_zero()) {
        // The whole line lies on the curve; take one point of it.
        seen.insert(fix_s ? std::vector<Rational>{v, 0} : std::vector<Rational>{0, v});
        continue;
      }
      if (line.degree() <= 0) continue;
      for (const auto& r : rational_roots(line)) seen.insert(fix_s ? std::vector<Rational>{v, r} : std::vector<Rational>{r, v});
    }
  }
  out.curve_samples.assign(seen.begin(), seen.end());
}

}  // namespace

GOneForm section_point(const AffineSection& section, const std::vector<Rational>& params) {
  GOneForm phi = section.base;
  for (std::size_t i = 0; i < section.directions.size(); ++i) phi += section.directions[i].scaled(params.at(i));
  return phi;
}

std::vector<MultiPoly> section_equations(const LieAlgebra& h, const LieAlgebra& k, const AffineSection& section) {
  const std::size_t np = section.directions.size();
  if (np == 0 || np > 2) throw std::invalid_argument("rep_on_section: sections must have one or two parameters");
  std::vector<std::string> vars(param_names().begin(), param_names().begin() + static_cast<long>(np));
  MultiPoly zero(vars);
  Matrix<MultiPoly> phi(section.base.rows(), section.base.cols(), zero);
  for (std::size_t r = 0; r < phi.rows(); ++r)
    for (std::size_t c = 0; c < phi.cols(); ++c) {
      MultiPoly e = MultiPoly::constant(vars, section.base(r, c));
      for (std::size_t i = 0; i < np; ++i)
        if (section.directions[i](r, c) != 0) e += MultiPoly::variable(vars, i) * MultiPoly(section.directions[i](r, c));
      phi(r, c) = e;
    }
  Matrix<MultiPoly> d = hom_defect<MultiPoly>(h, k, phi, zero);
  std::vector<MultiPoly> out;
  for (const auto& e : d.data())
    if (!e.is_zero()) out.push_back(e.with_variables(vars));
  return out;
}

SectionSolution rep_on_section(const LieAlgebra& h, const LieAlgebra& k, const AffineSection& section,
                               std::uint64_t seed) {
  auto eqs = section_equations(h, k, section);
  SectionSolution out;
  out.parameters = section.directions.size();
  out.curve = MultiPoly(1);
  if (eqs.empty()) {
    out.whole_section = true;
    return out;
  }
  if (out.parameters == 1) {
    UPoly g;
    for (const auto& e : eqs) g = gcd(g, e.to_upoly(0));
    out.line_condition = factor(g);
    for (const auto& r : out.line_condition.explicit_roots()) out.points.push_back({r});
    for (const auto& res : out.line_condition.residual) {
      out.complete = false;
      out.unrepresented.push_back("s root of " + res.poly.to_string("s"));
    }
    return out;
  }
  Sampler rng(seed);
  std::vector<RecPoly> ps;
  for (const auto& e : eqs) ps.push_back(to_recursive(e, "s", "w"));
  RecPoly g;
  for (const auto& p : ps) g = gcd(g, p);
  std::vector<RecPoly> qs;
  for (const auto& p : ps) qs.push_back(divide_exact(p, g));
  if (degree_w(g) > 0 || g[0].degree() > 0) {
    out.curve = from_recursive(g, "s", "w");
    sample_curve(g, rng, out);
  }
  solve_finite(qs, rng, out);
  return out;
}

}  // namespace jumploci
