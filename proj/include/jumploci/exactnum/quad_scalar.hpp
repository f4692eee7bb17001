#pragma once

#include <string>

#include "jumploci/exactnum/rational.hpp"

namespace jumploci {

/// An element a + b*sqrt(d) of Q(sqrt d), d a squarefree integer other than 1.
///
/// Purely rational values carry d = 0. Arithmetic between two values with
/// different nonzero radicands throws std::domain_error: a computation lives
/// in a single quadratic extension.
class QuadScalar {
 public:
  QuadScalar() = default;
  QuadScalar(const Rational& a);  // NOLINT(google-explicit-constructor)
  QuadScalar(long a) : QuadScalar(Rational(a)) {}  // NOLINT(google-explicit-constructor)
  QuadScalar(const Rational& a, const Rational& b, const Integer& d);

  /// Exact square root of a rational, landing in Q(sqrt d) for the squarefree
  /// part d of r.
  static QuadScalar sqrt_of(const Rational& r);

  const Rational& rational_part() const { return a_; }
  const Rational& irrational_part() const { return b_; }
  const Integer& radicand() const { return d_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  QuadScalar conjugate() const;
  /// a^2 - d b^2, the field norm to Q.
  Rational norm() const;

  QuadScalar& operator+=(const QuadScalar& o);
  QuadScalar& operator-=(const QuadScalar& o);
  QuadScalar& operator*=(const QuadScalar& o);
  QuadScalar& operator/=(const QuadScalar& o);

  friend QuadScalar operator+(QuadScalar x, const QuadScalar& y) { return x += y; }
  friend QuadScalar operator-(QuadScalar x, const QuadScalar& y) { return x -= y; }
  friend QuadScalar operator*(QuadScalar x, const QuadScalar& y) { return x *= y; }
  friend QuadScalar operator/(QuadScalar x, const QuadScalar& y) { return x /= y; }
  QuadScalar operator-() const;

  friend bool operator==(const QuadScalar& x, const QuadScalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.d_ == y.d_);
  }
  friend bool operator!=(const QuadScalar& x, const QuadScalar& y) { return !(x == y); }

  std::string to_string() const;

 private:
  void normalize();
  Integer common_radicand(const QuadScalar& o) const;

  Rational a_;
  Rational b_;
  Integer d_;
};

/// Splits an integer n != 0 as n = s^2 * d with d squarefree (sign kept in d).
void squarefree_split(const Integer& n, Integer& square_root_part, Integer& squarefree_part);

}  // namespace jumploci
