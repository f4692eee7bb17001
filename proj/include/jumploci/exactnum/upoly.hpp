#pragma once

#include <string>
#include <vector>

#include "jumploci/exactnum/quad_scalar.hpp"
#include "jumploci/exactnum/rational.hpp"

namespace jumploci {

/// Dense univariate polynomial over Q; coefficient k multiplies x^k.
/// The coefficient vector never has trailing zeros, so the zero polynomial
/// is the empty vector.
class UPoly {
 public:
  UPoly() = default;
  UPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  UPoly(long c) : UPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit UPoly(std::vector<Rational> coeffs);

  /// The monomial c * x^k.
  static UPoly monomial(const Rational& c, unsigned k);
  static UPoly x() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  UPoly monic() const;
  UPoly derivative() const;

  Rational eval(const Rational& x) const;
  QuadScalar eval(const QuadScalar& x) const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
  UPoly operator-() const;
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return a.c_ != b.c_; }

  UPoly pow(unsigned e) const;
  /// p(q(x)).
  UPoly compose(const UPoly& q) const;

  /// Canonical text, highest degree first, e.g. "x^2 - 3*x + 1".
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Euclidean division a = q*b + r with deg r < deg b. Throws on b == 0.
void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
UPoly operator/(const UPoly& a, const UPoly& b);  // quotient
UPoly operator%(const UPoly& a, const UPoly& b);  // remainder
/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

}  // namespace jumploci
