#include "jumploci/reson/resonance.hpp"

#include <algorithm>
#include <stdexcept>

#include "jumploci/exactnum/linalg.hpp"
#include "jumploci/exactnum/parallel.hpp"
#include "jumploci/exactnum/sampler.hpp"
#include "jumploci/liealg/catalog.hpp"
#include "jumploci/reson/twisted.hpp"

namespace jumploci {

namespace {

// d^i + c L_eta : A^i -> A^{i+1} over Q[c]; empty shapes outside 0..top.
Matrix<UPoly> line_differential(const CDGA& a, const Vector<Rational>& eta, int i) {
  std::size_t src = a.dim(i), dst = a.dim(i + 1);
  Matrix<UPoly> m(dst, src, UPoly());
  if (i < 0 || src == 0 || dst == 0) return m;
  const Matrix<Rational>& d = a.d(i);
  Matrix<Rational> l = a.left_multiplication(1, eta, i);
  for (std::size_t r = 0; r < dst; ++r)
    for (std::size_t c = 0; c < src; ++c) m(r, c) = UPoly(std::vector<Rational>{d(r, c), l(r, c)});
  return m;
}

Matrix<Rational> rank_one_differential(const CDGA& a, const Vector<Rational>& eta, int i) {
  std::size_t src = a.dim(i), dst = a.dim(i + 1);
  if (i < 0 || src == 0 || dst == 0) return Matrix<Rational>(dst, src, Rational(0));
  return a.d(i) + a.left_multiplication(1, eta, i);
}

void check_line(const CDGA& a, const Vector<Rational>& eta) {
  if (eta.size() != a.dim(1)) throw std::invalid_argument("resonance: eta has the wrong length");
  if (a.top_degree() >= 2 && !a.d(1).apply(eta).empty()) {
    auto de = a.d(1).apply(eta);
    if (std::any_of(de.begin(), de.end(), [](const Rational& x) { return x != 0; }))
      throw std::invalid_argument("resonance: eta is not closed");
  }
}

bool is_zero_vector(const Vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

std::vector<QuadScalar> scale(const Vector<Rational>& eta, const QuadScalar& c) {
  std::vector<QuadScalar> out;
  for (const auto& x : eta) out.push_back(c * QuadScalar(x));
  return out;
}

Vector<Rational> combine(const std::vector<Vector<Rational>>& basis, const Vector<Rational>& coeffs, std::size_t n) {
  Vector<Rational> out(n, Rational(0));
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t j = 0; j < n; ++j) out[j] += coeffs[k] * basis[k][j];
  return out;
}

// Lower bound on |c| over the nonzero complex roots of p (Cauchy bound of the
// reversed polynomial), or 0 when p has no nonzero roots.
Rational nonzero_root_lower_bound(UPoly p) {
  while (p.degree() > 0 && p.coeff(0) == 0) p = p / UPoly::x();
  if (p.degree() <= 0) return 0;
  Rational a0 = abs(p.coeff(0));
  Rational worst = 0;
  for (int k = 1; k <= p.degree(); ++k) worst = std::max(worst, Rational(abs(p.coeff(k)) / a0));
  return 1 / (1 + worst);
}

}  // namespace

bool LineResonance::contains(const Rational& c) const { return entire || condition.eval(c) == 0; }

std::size_t rank_one_twisted_dim(const CDGA& a, const Vector<Rational>& eta, int i) {
  check_line(a, eta);
  if (i < 0 || i > a.top_degree()) return 0;
  return a.dim(i) - rank(rank_one_differential(a, eta, i)) - rank(rank_one_differential(a, eta, i - 1));
}

LineResonance rank1_resonance_on_line(const CDGA& a, const Vector<Rational>& eta, int i) {
  check_line(a, eta);
  if (is_zero_vector(eta)) throw std::invalid_argument("rank1_resonance_on_line: eta = 0");
  LineResonance out;
  if (i < 0 || i > a.top_degree()) {
    out.condition = UPoly(1);
    out.factored = factor(out.condition);
    return out;
  }
  auto cur = determinantal_divisor(line_differential(a, eta, i));
  auto prev = determinantal_divisor(line_differential(a, eta, i - 1));
  if (cur.rank + prev.rank < a.dim(i)) {
    out.entire = true;
    out.condition = UPoly();
    out.complete = true;
    return out;
  }
  out.condition = cur.divisor * prev.divisor;
  out.factored = factor(out.condition);
  out.points = out.factored.explicit_roots();
  std::sort(out.points.begin(), out.points.end(), [](const QuadScalar& x, const QuadScalar& y) {
    return x.to_string() < y.to_string();
  });
  out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
  // Rational roots first, in increasing order.
  std::vector<QuadScalar> ordered;
  for (const auto& r : out.factored.rational_roots) ordered.emplace_back(r.value);
  for (const auto& p : out.points)
    if (!p.is_rational()) ordered.push_back(p);
  out.points = std::move(ordered);
  out.complete = out.factored.residual.empty();
  return out;
}

std::string to_string(ResonanceVerdict v) {
  switch (v) {
    case ResonanceVerdict::CertifiedTrivial: return "certified_trivial";
    case ResonanceVerdict::CertifiedNontrivial: return "certified_nontrivial";
    case ResonanceVerdict::ProbabilisticallyTrivial: return "probabilistically_trivial";
  }
  return "";
}

ResonanceSet trivial_resonance(const CDGA& a, int i, std::uint64_t seed, std::size_t n_lines) {
  ResonanceSet out;
  out.degree = i;
  out.seed = seed;
  auto h1 = closed_one_forms(a);
  out.h1_dim = h1.size();
  auto b = betti(a);
  bool origin = i >= 0 && i <= a.top_degree() && b[static_cast<std::size_t>(i)] > 0;
  if (origin) out.points.push_back(std::vector<QuadScalar>(a.dim(1), QuadScalar(0)));
  auto record = [&](const Vector<Rational>& eta, const LineResonance& line) {
    for (const auto& c : line.points)
      if (c != QuadScalar(0)) out.points.push_back(scale(eta, c));
  };
  if (h1.empty()) return out;
  if (h1.size() == 1) {
    auto line = rank1_resonance_on_line(a, h1[0], i);
    out.lines_probed = 1;
    if (line.entire) {
      out.verdict = ResonanceVerdict::CertifiedNontrivial;
      return out;
    }
    record(h1[0], line);
    return out;
  }
  Sampler s(seed);
  out.verdict = ResonanceVerdict::ProbabilisticallyTrivial;
  for (std::size_t k = 0; k < n_lines; ++k) {
    Vector<Rational> eta = combine(h1, s.nonzero_vector(h1.size()), a.dim(1));
    if (is_zero_vector(eta)) continue;
    auto line = rank1_resonance_on_line(a, eta, i);
    ++out.lines_probed;
    if (line.entire) {
      out.verdict = ResonanceVerdict::CertifiedNontrivial;
      return out;
    }
    record(eta, line);
  }
  return out;
}

bool eigenvalue_criterion(const CDGA& a, const Sl2Rep& rep, const Vector<Rational>& eta, const Vector<Rational>& g,
                          int i) {
  if (is_zero_vector(eta) || is_zero_vector(g)) {
    check_line(a, eta);
    auto b = betti(a);
    return i >= 0 && i <= a.top_degree() && b[static_cast<std::size_t>(i)] > 0;
  }
  auto line = rank1_resonance_on_line(a, eta, i);
  if (line.entire) return true;
  auto squares = eigen_squares(rep, g);
  std::sort(squares.begin(), squares.end());
  squares.erase(std::unique(squares.begin(), squares.end()), squares.end());
  for (const auto& sq : squares) {
    if (sq == 0) {
      if (line.condition.eval(Rational(0)) == 0) return true;
      continue;
    }
    // c^2 = sq for a root c of the condition.
    UPoly target(std::vector<Rational>{-sq, 0, 1});
    if (gcd(line.condition, target).degree() > 0) return true;
  }
  return false;
}

bool pi_membership(const CDGA& a, const Sl2Rep& rep, const GOneForm& omega) {
  if (omega.is_zero()) return true;
  if (!in_F1(a, omega)) return false;
  Vector<Rational> eta, g;
  if (!split_rank_one(omega, eta, g)) return false;
  return det_theta(rep).eval<Rational>(g) == 0;
}

std::string to_string(GermKind k) {
  switch (k) {
    case GermKind::Empty: return "empty";
    case GermKind::OriginOnly: return "origin-only";
    case GermKind::Cone: return "cone";
    case GermKind::NotIsolated: return "not-isolated";
  }
  return "";
}

const std::vector<Rational>& germ_t_values() {
  static const std::vector<Rational> t{Rational(1, 8), Rational(-1, 8), Rational(1, 16), Rational(-1, 16)};
  return t;
}

std::string det_locus_description(const Sl2Rep& rep) {
  MultiPoly det = det_theta(rep);
  if (det.is_zero()) return "sl2 (det theta vanishes identically)";
  MultiPoly cone = MultiPoly::variable("a").pow(2) + MultiPoly::variable("b") * MultiPoly::variable("c");
  std::size_t k = rep.dim() / 2;
  MultiPoly power = cone.pow(static_cast<unsigned>(k));
  Rational lead = det.coeff({2 * static_cast<unsigned>(k), 0, 0});
  if (rep.dim() % 2 == 0 && lead != 0 && det == power * MultiPoly(lead))
    return "nilpotent cone {a^2 + b*c = 0}, det theta = " + det.to_string();
  return "V(" + det.to_string() + ")";
}

GermReport germ_report(const CDGA& a, const Sl2Rep& rep, int i, std::uint64_t seed, std::size_t samples) {
  GermReport out;
  out.degree = i;
  out.betti = betti(a);
  out.resonance = trivial_resonance(a, i, seed);
  out.h1_dim = out.resonance.h1_dim;
  out.det_locus = det_locus_description(rep);
  bool hi = i >= 0 && i <= a.top_degree() && out.betti[static_cast<std::size_t>(i)] > 0;
  if (!hi) {
    out.kind = GermKind::Empty;
    return out;
  }
  if (out.h1_dim == 0) {
    out.kind = GermKind::OriginOnly;
    return out;
  }
  if (out.resonance.verdict == ResonanceVerdict::CertifiedNontrivial) {
    out.kind = GermKind::NotIsolated;
    return out;
  }
  out.kind = GermKind::Cone;
  // Draw all samples first so the report does not depend on the thread count.
  Sampler s(seed ^ 0x9e3779b97f4a7c15ULL);
  auto h1 = closed_one_forms(a);
  MultiPoly det = det_theta(rep);
  long max_weight = 0;
  for (auto m : rep.summands) max_weight = std::max(max_weight, static_cast<long>(m) - 1);
  out.evidence.resize(samples);
  for (auto& ev : out.evidence) {
    ev.eta = combine(h1, s.nonzero_vector(h1.size()), a.dim(1));
    while (is_zero_vector(ev.eta)) ev.eta = combine(h1, s.nonzero_vector(h1.size()), a.dim(1));
    if (s.coin()) {
      // Nilpotent direction: b != 0, c = -a^2 / b.
      Rational x = s.rational(), y = s.nonzero_rational();
      ev.g = {x, y, Rational(-x * x / y)};
    } else {
      ev.g = s.nonzero_vector(3);
    }
    ev.t_values = germ_t_values();
  }
  parallel_for(samples, [&](std::size_t k) {
    GermEvidence& ev = out.evidence[k];
    // Shrink g until |t lambda| stays below every nonzero resonant c on the
    // line through eta, so that only c = 0 can be hit.
    Rational bound = nonzero_root_lower_bound(rank1_resonance_on_line(a, ev.eta, i).condition);
    if (bound > 0) {
      Rational mu2 = abs(Rational(ev.g[0] * ev.g[0] + ev.g[1] * ev.g[2]));
      Rational t2 = ev.t_values[0] * ev.t_values[0];
      while (Rational(max_weight * max_weight) * mu2 * t2 >= bound * bound) {
        for (auto& x : ev.g) x /= 2;
        mu2 /= 4;
      }
    }
    ev.det_theta = det.eval<Rational>(ev.g);
    for (const auto& t : ev.t_values) {
      Vector<Rational> tg{t * ev.g[0], t * ev.g[1], t * ev.g[2]};
      bool res = twisted_dims(a, rep, segre(ev.eta, tg))[static_cast<std::size_t>(i)] >= 1;
      ev.resonant.push_back(res);
      if (res != (ev.det_theta == 0)) ev.consistent = false;
    }
  });
  for (const auto& ev : out.evidence)
    if (!ev.consistent) ++out.exceptions;
  return out;
}

namespace {

nlohmann::ordered_json point_json(const std::vector<QuadScalar>& p) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& x : p) arr.push_back(x.to_string());
  return arr;
}

nlohmann::ordered_json rational_vec_json(const Vector<Rational>& v) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& x : v) arr.push_back(x.get_str());
  return arr;
}

}  // namespace

nlohmann::ordered_json to_json(const ResonanceSet& r) {
  nlohmann::ordered_json j;
  j["degree"] = r.degree;
  j["h1_dim"] = r.h1_dim;
  j["verdict"] = to_string(r.verdict);
  auto pts = nlohmann::ordered_json::array();
  for (const auto& p : r.points) pts.push_back(point_json(p));
  j["resonance_points"] = pts;
  j["lines_probed"] = r.lines_probed;
  j["seed"] = r.seed;
  return j;
}

nlohmann::ordered_json to_json(const GermReport& r) {
  nlohmann::ordered_json j;
  j["degree"] = r.degree;
  j["betti"] = r.betti;
  j["h1_dim"] = r.h1_dim;
  j["verdict"] = to_string(r.resonance.verdict);
  j["germ"] = to_string(r.kind);
  j["det_locus"] = r.det_locus;
  j["resonance_points"] = to_json(r.resonance)["resonance_points"];
  j["lines_probed"] = r.resonance.lines_probed;
  j["seed"] = r.resonance.seed;
  auto ev = nlohmann::ordered_json::array();
  for (const auto& e : r.evidence) {
    nlohmann::ordered_json x;
    x["eta"] = rational_vec_json(e.eta);
    x["g"] = rational_vec_json(e.g);
    x["t_values"] = rational_vec_json(e.t_values);
    x["resonant"] = e.resonant;
    x["det_theta"] = e.det_theta.get_str();
    ev.push_back(x);
  }
  j["evidence"] = ev;
  j["exceptions"] = r.exceptions;
  return j;
}

}  // namespace jumploci
