#include "jumploci/exactnum/factor.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "jumploci/exactnum/linalg.hpp"

namespace jumploci {

namespace {

constexpr unsigned long kTrialLimit = 1ul << 20;

// All positive divisors of n, or nullopt when n has a composite cofactor beyond
// the trial-division limit.
std::optional<std::vector<Integer>> divisors(const Integer& n) {
  Integer rest = abs(n);
  std::vector<std::pair<Integer, unsigned>> primes;
  for (Integer p = 2; p * p <= rest; ++p) {
    if (p > kTrialLimit) {
      if (mpz_probab_prime_p(rest.get_mpz_t(), 30) == 0) return std::nullopt;
      break;
    }
    unsigned e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      ++e;
    }
    if (e) primes.emplace_back(p, e);
  }
  if (rest > 1) primes.emplace_back(rest, 1);
  std::vector<Integer> out{1};
  for (const auto& [p, e] : primes) {
    std::size_t n0 = out.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < n0; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

// Integer primitive polynomial proportional to p.
std::vector<Integer> primitive_integer_coeffs(const UPoly& p) {
  Integer den = 1;
  for (const auto& c : p.coeffs()) den = lcm(den, c.get_den());
  std::vector<Integer> out;
  Integer content = 0;
  for (const auto& c : p.coeffs()) {
    Integer v = c.get_num() * (den / c.get_den());
    content = gcd(content, v);
    out.push_back(v);
  }
  for (auto& v : out) v /= content;
  return out;
}

// Lagrange interpolation through (xs[i], ys[i]).
UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  UPoly acc;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    UPoly basis(Rational(1));
    Rational denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis *= UPoly(std::vector<Rational>{-xs[j], 1});
      denom *= xs[i] - xs[j];
    }
    acc += basis * UPoly(Rational(ys[i] / denom));
  }
  return acc;
}

bool has_integer_coeffs(const UPoly& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const Rational& c) { return c.get_den() == 1; });
}

constexpr std::size_t kKroneckerBudget = 20000;

// Kronecker search for an integer factor of degree k of a squarefree polynomial
// without rational roots. Returns the zero polynomial if none is found.
UPoly kronecker_factor(const UPoly& f, int k) {
  std::vector<Rational> xs;
  std::vector<std::vector<Integer>> divs;
  std::size_t combos = 1;
  for (int t = 0; static_cast<int>(xs.size()) <= k; ++t) {
    Rational x = (t % 2 ? 1 : -1) * ((t + 1) / 2);
    Rational v = f.eval(x);
    auto dv = divisors(v.get_num());
    if (!dv) return UPoly();
    std::vector<Integer> d = std::move(*dv);
    xs.push_back(x);
    combos *= d.size() * (xs.size() == 1 ? 1 : 2);
    divs.push_back(std::move(d));
    if (combos > kKroneckerBudget) return UPoly();
  }
  // Odometer over divisor choices; positions after the first also range over sign.
  std::vector<std::size_t> ctr(xs.size(), 0);
  std::vector<Rational> ys(xs.size());
  while (true) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      std::size_t n = divs[i].size();
      Integer d = divs[i][ctr[i] % n];
      ys[i] = Rational(ctr[i] < n ? d : Integer(-d));
    }
    UPoly q = interpolate(xs, ys);
    if (q.degree() == k && has_integer_coeffs(q) && (f % q).is_zero()) return q;
    std::size_t i = 0;
    for (; i < xs.size(); ++i) {
      std::size_t limit = divs[i].size() * (i == 0 ? 1 : 2);
      if (++ctr[i] < limit) break;
      ctr[i] = 0;
    }
    if (i == xs.size()) return UPoly();
  }
}

// Splits a squarefree polynomial without rational roots into irreducible factors.
void split_irreducible(const UPoly& f, std::vector<UPoly>& out) {
  for (int k = 2; 2 * k <= f.degree(); ++k) {
    std::vector<Rational> ic;
    for (const auto& c : primitive_integer_coeffs(f)) ic.emplace_back(c);
    UPoly q = kronecker_factor(UPoly(ic), k);
    if (!q.is_zero()) {
      split_irreducible(q.monic(), out);
      split_irreducible((f / q).monic(), out);
      return;
    }
  }
  out.push_back(f.monic());
}

int sign_of(const Rational& x) { return sgn(x); }

// Sign changes of a Sturm sequence at x.
int sign_changes(const std::vector<UPoly>& seq, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& p : seq) {
    int s = sign_of(p.eval(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

Rational floor_of(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return Rational(q);
}

// Rational with the smallest denominator in the open interval (a, b); b may be
// +infinity.
Rational simplest_between(const Rational& a, const std::optional<Rational>& b) {
  Rational fl = floor_of(a);
  Rational n = fl + 1;
  if (!b || n < *b) return n;
  Rational lo = *b - fl;
  Rational hi_inv = a - fl;
  std::optional<Rational> hi;
  if (hi_inv != 0) hi = Rational(1 / hi_inv);
  return fl + 1 / simplest_between(Rational(1 / lo), hi);
}

// Rational roots of a squarefree integer polynomial by exact real-root
// isolation: once an isolating interval is narrower than 1/L^2 (L the leading
// coefficient) it contains at most one rational with denominator dividing L,
// and that one is the simplest rational in the interval.
std::vector<Rational> rational_roots_by_isolation(const UPoly& f, const Integer& lead) {
  std::vector<UPoly> seq{f, f.derivative()};
  while (seq.back().degree() > 0) {
    UPoly r = seq[seq.size() - 2] % seq.back();
    if (r.is_zero()) break;
    seq.push_back(UPoly() - r);
  }
  Rational bound = 1;
  for (int i = 0; i < f.degree(); ++i) bound = std::max(bound, Rational(abs(f.coeff(i) / f.leading())));
  bound += 1;
  Rational width(Integer(1), Integer(lead * lead));
  width /= 2;
  std::vector<Rational> out;
  std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    int count = sign_changes(seq, a) - sign_changes(seq, b);
    if (count == 0) continue;
    if (count == 1 && b - a < width) {
      Rational c = simplest_between(a, b);
      if (f.eval(c) == 0) out.push_back(c);
      continue;
    }
    Rational m = (a + b) / 2;
    Rational step = (b - a) / 7;
    while (f.eval(m) == 0) {
      out.push_back(m);
      m += step;
      step /= 3;
    }
    // m is not a root; keep the recorded roots out of both halves by testing
    // the endpoints of the children only through the Sturm counts below.
    stack.emplace_back(a, m);
    stack.emplace_back(m, b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<PolyFactor> squarefree_decomposition(const UPoly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree decomposition of zero");
  std::vector<PolyFactor> out;
  UPoly f = p.monic();
  if (f.degree() == 0) return out;
  UPoly fp = f.derivative();
  UPoly c = gcd(f, fp);
  UPoly w = f / c;
  UPoly y = fp / c;
  UPoly z = y - w.derivative();
  unsigned i = 1;
  while (w.degree() > 0) {
    UPoly g = gcd(w, z);
    if (g.degree() > 0) out.push_back({g, i});
    w = w / g;
    y = z / g;
    z = y - w.derivative();
    ++i;
  }
  return out;
}

std::vector<Rational> rational_roots(const UPoly& p) {
  if (p.is_zero()) throw std::domain_error("rational roots of the zero polynomial");
  std::vector<Rational> roots;
  UPoly f = p;
  // Strip x^k first so the constant term is nonzero.
  if (f.coeff(0) == 0) {
    roots.emplace_back(0);
    while (f.degree() > 0 && f.coeff(0) == 0) f = f / UPoly::x();
  }
  if (f.degree() > 0) {
    auto ints = primitive_integer_coeffs(f);
    auto num = divisors(ints.front());
    auto den = divisors(ints.back());
    if (!num || !den || num->size() * den->size() > 512) {
      UPoly sq = f / gcd(f, f.derivative());
      std::vector<Rational> ic;
      for (const auto& c : primitive_integer_coeffs(sq)) ic.emplace_back(c);
      for (const auto& r : rational_roots_by_isolation(UPoly(ic), ic.back().get_num())) roots.push_back(r);
      std::sort(roots.begin(), roots.end());
      return roots;
    }
    for (const auto& a : *num)
      for (const auto& b : *den)
        for (int s : {1, -1}) {
          Rational cand(Integer(a * s), b);
          cand.canonicalize();
          if (f.eval(cand) == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end())
            roots.push_back(cand);
        }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::pair<QuadScalar, QuadScalar> quadratic_roots(const UPoly& q) {
  if (q.degree() != 2) throw std::invalid_argument("quadratic_roots: degree is not 2");
  UPoly m = q.monic();
  Rational b = m.coeff(1), c = m.coeff(0);
  Rational disc = b * b - 4 * c;
  QuadScalar s = QuadScalar::sqrt_of(disc);
  QuadScalar half_b(Rational(-b / 2));
  QuadScalar half_s = s * QuadScalar(Rational(1, 2));
  return {half_b + half_s, half_b - half_s};
}

FactoredPoly factor(const UPoly& p) {
  FactoredPoly out;
  if (p.is_zero()) return out;
  out.leading = p.leading();
  for (const auto& [part, mult] : squarefree_decomposition(p)) {
    UPoly rest = part;
    for (const auto& r : rational_roots(part)) {
      out.rational_roots.push_back({r, mult});
      rest = rest / UPoly(std::vector<Rational>{-r, 1});
    }
    if (rest.degree() < 2) continue;
    std::vector<UPoly> pieces;
    split_irreducible(rest, pieces);
    for (const auto& q : pieces) {
      if (q.degree() == 2) out.quadratics.push_back({q, mult});
      else out.residual.push_back({q, mult});
    }
  }
  std::sort(out.rational_roots.begin(), out.rational_roots.end(),
            [](const RationalRoot& a, const RationalRoot& b) { return a.value < b.value; });
  return out;
}

UPoly FactoredPoly::expand() const {
  UPoly acc(leading);
  for (const auto& r : rational_roots) acc *= UPoly(std::vector<Rational>{-r.value, 1}).pow(r.multiplicity);
  for (const auto& q : quadratics) acc *= q.poly.pow(q.multiplicity);
  for (const auto& q : residual) acc *= q.poly.pow(q.multiplicity);
  return acc;
}

bool FactoredPoly::has_rational_root(const Rational& x) const {
  return std::any_of(rational_roots.begin(), rational_roots.end(),
                     [&](const RationalRoot& r) { return r.value == x; });
}

std::vector<QuadScalar> FactoredPoly::explicit_roots() const {
  std::vector<QuadScalar> out;
  for (const auto& r : rational_roots) out.emplace_back(r.value);
  for (const auto& q : quadratics) {
    auto [a, b] = quadratic_roots(q.poly);
    out.push_back(a);
    out.push_back(b);
  }
  return out;
}

std::string FactoredPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s = leading == 1 ? "" : leading.get_str();
  auto append = [&](const std::string& f, unsigned mult) {
    if (!s.empty()) s += "*";
    s += "(" + f + ")";
    if (mult > 1) s += "^" + std::to_string(mult);
  };
  for (const auto& r : rational_roots) append(UPoly(std::vector<Rational>{-r.value, 1}).to_string(var), r.multiplicity);
  for (const auto& q : quadratics) append(q.poly.to_string(var), q.multiplicity);
  for (const auto& q : residual) append(q.poly.to_string(var), q.multiplicity);
  return s.empty() ? "1" : s;
}

FactoredPoly eigen_factors(const Matrix<Rational>& m) { return factor(char_poly(m)); }

}  // namespace jumploci
