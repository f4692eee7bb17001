#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace jumploci {

using Integer = mpz_class;
// mpq_class keeps numerator/denominator reduced with a positive denominator.
using Rational = mpq_class;

/// Parses "n", "-n" or "n/m". Throws std::invalid_argument on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer lcm(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);

}  // namespace jumploci
