#include "jumploci/exactnum/quad_scalar.hpp"

#include <stdexcept>

namespace jumploci {

QuadScalar::QuadScalar(const Rational& a) : a_(a) {}

QuadScalar::QuadScalar(const Rational& a, const Rational& b, const Integer& d) : a_(a), b_(b), d_(d) {
  if (b_ != 0) {
    Integer s, sf;
    if (d_ == 0) throw std::domain_error("QuadScalar: zero radicand with nonzero irrational part");
    squarefree_split(d_, s, sf);
    if (s != 1) throw std::domain_error("QuadScalar: radicand " + d_.get_str() + " is not squarefree");
    if (d_ == 1) throw std::domain_error("QuadScalar: radicand 1 is rational");
  }
  normalize();
}

void squarefree_split(const Integer& n, Integer& square_root_part, Integer& squarefree_part) {
  if (n == 0) throw std::domain_error("squarefree_split of zero");
  Integer rest = abs(n);
  square_root_part = 1;
  squarefree_part = 1;
  for (Integer p = 2; p * p <= rest; ++p) {
    unsigned e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      ++e;
    }
    for (unsigned k = 0; k < e / 2; ++k) square_root_part *= p;
    if (e % 2) squarefree_part *= p;
  }
  squarefree_part *= rest;
  if (n < 0) squarefree_part = -squarefree_part;
}

QuadScalar QuadScalar::sqrt_of(const Rational& r) {
  if (r == 0) return QuadScalar();
  // r = p/q = (p*q)/q^2
  Integer pq = r.get_num() * r.get_den();
  Integer s, d;
  squarefree_split(pq, s, d);
  Rational coeff(s, r.get_den());
  coeff.canonicalize();
  if (d == 1) return QuadScalar(coeff);
  return QuadScalar(Rational(0), coeff, d);
}

void QuadScalar::normalize() {
  if (b_ == 0) d_ = 0;
}

Integer QuadScalar::common_radicand(const QuadScalar& o) const {
  if (b_ == 0) return o.d_;
  if (o.b_ == 0) return d_;
  if (d_ != o.d_)
    throw std::domain_error("QuadScalar: mixing radicands " + d_.get_str() + " and " + o.d_.get_str());
  return d_;
}

QuadScalar QuadScalar::conjugate() const {
  QuadScalar r = *this;
  r.b_ = -r.b_;
  return r;
}

Rational QuadScalar::norm() const {
  Rational n = a_ * a_ - Rational(d_) * b_ * b_;
  return n;
}

QuadScalar& QuadScalar::operator+=(const QuadScalar& o) {
  d_ = common_radicand(o);
  a_ += o.a_;
  b_ += o.b_;
  normalize();
  return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& o) {
  d_ = common_radicand(o);
  a_ -= o.a_;
  b_ -= o.b_;
  normalize();
  return *this;
}

QuadScalar& QuadScalar::operator*=(const QuadScalar& o) {
  Integer d = common_radicand(o);
  Rational a = a_ * o.a_ + Rational(d) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  d_ = d;
  normalize();
  return *this;
}

QuadScalar& QuadScalar::operator/=(const QuadScalar& o) {
  if (o.is_zero()) throw std::domain_error("QuadScalar: division by zero");
  Integer d = common_radicand(o);
  // x / y = x * conj(y) / N(y)
  Rational n = o.norm();
  QuadScalar c = o.conjugate();
  *this *= c;
  a_ /= n;
  b_ /= n;
  if (b_ != 0) d_ = d;
  normalize();
  return *this;
}

QuadScalar QuadScalar::operator-() const {
  QuadScalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

std::string QuadScalar::to_string() const {
  if (b_ == 0) return a_.get_str();
  std::string s;
  if (a_ != 0) s = a_.get_str() + (b_ > 0 ? "+" : "-");
  else if (b_ < 0) s = "-";
  Rational ab = abs(b_);
  if (ab != 1) s += ab.get_str() + "*";
  s += "sqrt(" + d_.get_str() + ")";
  return s;
}

}  // namespace jumploci
