#pragma once

#include <vector>

#include "jumploci/exactnum/upoly.hpp"
#include "jumploci/poly/multipoly.hpp"

namespace jumploci {

/// Polynomial in w with coefficients in Q[s]; entry k multiplies w^k.
using RecPoly = std::vector<UPoly>;

/// Views a polynomial in (at most) the two variables `s`, `w` as an element
/// of Q[s][w]. Throws if another variable occurs.
RecPoly to_recursive(const MultiPoly& p, const std::string& s, const std::string& w);
MultiPoly from_recursive(const RecPoly& p, const std::string& s, const std::string& w);

int degree_w(const RecPoly& p);
bool is_zero(const RecPoly& p);

/// gcd in Q[s, w], normalized so that the leading coefficient (in w, then s) is 1.
RecPoly gcd(const RecPoly& a, const RecPoly& b);
/// a / b, assuming b divides a exactly in Q[s, w]. Throws std::domain_error otherwise.
RecPoly divide_exact(const RecPoly& a, const RecPoly& b);
/// Resultant with respect to w, via the Sylvester determinant.
UPoly resultant_w(const RecPoly& a, const RecPoly& b);
/// Substitutes s = s0, giving a polynomial in w.
UPoly eval_s(const RecPoly& p, const Rational& s0);
/// Substitutes w = w0, giving a polynomial in s.
UPoly eval_w(const RecPoly& p, const Rational& w0);

/// Convenience wrappers on MultiPoly in the variables (s, w).
MultiPoly gcd2(const MultiPoly& a, const MultiPoly& b, const std::string& s, const std::string& w);

}  // namespace jumploci
