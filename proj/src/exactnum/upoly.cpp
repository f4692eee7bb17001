#include "jumploci/exactnum/upoly.hpp"

#include <stdexcept>

namespace jumploci {

UPoly::UPoly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(const Rational& c, unsigned k) {
  if (c == 0) return UPoly();
  std::vector<Rational> v(k + 1, Rational(0));
  v[k] = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::monic() const {
  if (c_.empty()) return *this;
  UPoly r = *this;
  Rational lc = c_.back();
  for (auto& x : r.c_) x /= lc;
  return r;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly();
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
  return UPoly(std::move(d));
}

Rational UPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

QuadScalar UPoly::eval(const QuadScalar& x) const {
  QuadScalar acc;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + QuadScalar(c_[k]);
  return acc;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const UPoly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> p(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) p[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(p);
  trim();
  return *this;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

UPoly UPoly::pow(unsigned e) const {
  UPoly result(1);
  UPoly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

UPoly UPoly::compose(const UPoly& q) const {
  UPoly acc;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * q + UPoly(c_[k]);
  return acc;
}

std::string UPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string s;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rational& c = c_[k];
    if (c == 0) continue;
    Rational a = abs(c);
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    if (k == 0) {
      s += a.get_str();
      continue;
    }
    if (a != 1) s += a.get_str() + "*";
    s += var;
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s;
}

void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) throw std::domain_error("UPoly: division by zero polynomial");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  const Rational lb = b.leading();
  if (a.degree() < db) {
    q = UPoly();
    r = a;
    return;
  }
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  for (int k = a.degree(); k >= db; --k) {
    Rational f = rem[static_cast<std::size_t>(k)] / lb;
    quot[static_cast<std::size_t>(k - db)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  q = UPoly(std::move(quot));
  r = UPoly(std::move(rem));
}

UPoly operator/(const UPoly& a, const UPoly& b) {
  UPoly q, r;
  divmod(a, b, q, r);
  return q;
}

UPoly operator%(const UPoly& a, const UPoly& b) {
  UPoly q, r;
  divmod(a, b, q, r);
  return r;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

}  // namespace jumploci
