#include "jumploci/poly/bivariate.hpp"

#include <stdexcept>

#include "jumploci/exactnum/linalg.hpp"

namespace jumploci {

namespace {

void trim(RecPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly content(const RecPoly& p) {
  UPoly g;
  for (const auto& c : p) g = gcd(g, c);
  return g;
}

RecPoly scale(const RecPoly& p, const UPoly& c) {
  RecPoly out;
  for (const auto& x : p) out.push_back(x * c);
  trim(out);
  return out;
}

RecPoly divide_content(const RecPoly& p, const UPoly& c) {
  RecPoly out;
  for (const auto& x : p) out.push_back(x / c);
  return out;
}

RecPoly primitive(const RecPoly& p) {
  if (p.empty()) return p;
  return divide_content(p, content(p));
}

// Pseudo-remainder of a by b in Q[s][w].
RecPoly pseudo_rem(RecPoly a, const RecPoly& b) {
  const int db = degree_w(b);
  const UPoly lb = b.back();
  while (degree_w(a) >= db) {
    int shift = degree_w(a) - db;
    UPoly la = a.back();
    for (auto& c : a) c *= lb;
    for (int k = 0; k <= db; ++k) a[static_cast<std::size_t>(k + shift)] -= la * b[static_cast<std::size_t>(k)];
    trim(a);
  }
  return a;
}

RecPoly normalize(RecPoly p) {
  trim(p);
  if (p.empty()) return p;
  Rational lead = p.back().leading();
  for (auto& c : p) c = c * UPoly(Rational(1 / lead));
  return p;
}

}  // namespace

RecPoly to_recursive(const MultiPoly& p, const std::string& s, const std::string& w) {
  MultiPoly q = p.with_variables({s, w});
  RecPoly out;
  for (const auto& [e, c] : q.terms()) {
    if (out.size() <= e[1]) out.resize(e[1] + 1);
    out[e[1]] += UPoly::monomial(c, e[0]);
  }
  trim(out);
  return out;
}

MultiPoly from_recursive(const RecPoly& p, const std::string& s, const std::string& w) {
  MultiPoly out(std::vector<std::string>{s, w});
  for (std::size_t k = 0; k < p.size(); ++k)
    for (std::size_t j = 0; j < p[k].coeffs().size(); ++j)
      out.add_term({static_cast<unsigned>(j), static_cast<unsigned>(k)}, p[k].coeffs()[j]);
  return out;
}

int degree_w(const RecPoly& p) { return static_cast<int>(p.size()) - 1; }

bool is_zero(const RecPoly& p) {
  for (const auto& c : p)
    if (!c.is_zero()) return false;
  return true;
}

RecPoly gcd(const RecPoly& a0, const RecPoly& b0) {
  RecPoly a = a0, b = b0;
  trim(a);
  trim(b);
  if (a.empty()) return normalize(b);
  if (b.empty()) return normalize(a);
  UPoly c = gcd(content(a), content(b));
  a = primitive(a);
  b = primitive(b);
  if (degree_w(a) < degree_w(b)) std::swap(a, b);
  while (!b.empty()) {
    RecPoly r = pseudo_rem(a, b);
    a = std::move(b);
    b = r.empty() ? r : primitive(r);
  }
  return normalize(scale(primitive(a), c));
}

RecPoly divide_exact(const RecPoly& a0, const RecPoly& b0) {
  RecPoly a = a0, b = b0;
  trim(a);
  trim(b);
  if (b.empty()) throw std::domain_error("divide_exact: division by zero");
  if (a.empty()) return {};
  const int db = degree_w(b);
  if (degree_w(a) < db) throw std::domain_error("divide_exact: not divisible");
  RecPoly q(static_cast<std::size_t>(degree_w(a) - db + 1));
  while (!a.empty() && degree_w(a) >= db) {
    int shift = degree_w(a) - db;
    UPoly qq, rr;
    divmod(a.back(), b.back(), qq, rr);
    if (!rr.is_zero()) throw std::domain_error("divide_exact: not divisible");
    q[static_cast<std::size_t>(shift)] = qq;
    for (int k = 0; k <= db; ++k) a[static_cast<std::size_t>(k + shift)] -= qq * b[static_cast<std::size_t>(k)];
    trim(a);
  }
  if (!a.empty()) throw std::domain_error("divide_exact: not divisible");
  trim(q);
  return q;
}

UPoly resultant_w(const RecPoly& a0, const RecPoly& b0) {
  RecPoly a = a0, b = b0;
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) return UPoly();
  const int m = degree_w(a), n = degree_w(b);
  if (m == 0 && n == 0) return UPoly(1);
  if (m == 0) return a[0].pow(static_cast<unsigned>(n));
  if (n == 0) return b[0].pow(static_cast<unsigned>(m));
  const auto size = static_cast<std::size_t>(m + n);
  Matrix<UPoly> syl(size, size, UPoly());
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k)
      syl(static_cast<std::size_t>(r), static_cast<std::size_t>(r + m - k)) = a[static_cast<std::size_t>(k)];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k)
      syl(static_cast<std::size_t>(n + r), static_cast<std::size_t>(r + n - k)) = b[static_cast<std::size_t>(k)];
  auto c = berkowitz(syl, UPoly(), UPoly(1));
  // c_n = (-1)^n det.
  return size % 2 ? -c.back() : c.back();
}

UPoly eval_s(const RecPoly& p, const Rational& s0) {
  std::vector<Rational> c;
  for (const auto& x : p) c.push_back(x.eval(s0));
  return UPoly(c);
}

UPoly eval_w(const RecPoly& p, const Rational& w0) {
  UPoly acc;
  Rational pw = 1;
  for (const auto& x : p) {
    acc += x * UPoly(pw);
    pw *= w0;
  }
  return acc;
}

MultiPoly gcd2(const MultiPoly& a, const MultiPoly& b, const std::string& s, const std::string& w) {
  return from_recursive(gcd(to_recursive(a, s, w), to_recursive(b, s, w)), s, w);
}

}  // namespace jumploci
