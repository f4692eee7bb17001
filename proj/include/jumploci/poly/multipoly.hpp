#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "jumploci/exactnum/rational.hpp"
#include "jumploci/exactnum/upoly.hpp"

namespace jumploci {

using Exponents = std::vector<unsigned>;

/// Sparse polynomial over Q in a named, ordered list of variables.
///
/// Binary operations on polynomials with different variable lists work on
/// the union of the lists (left operand's order first), so constants and
/// polynomials built in different contexts combine freely.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational>;

  MultiPoly() = default;
  MultiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit MultiPoly(std::vector<std::string> vars);

  static MultiPoly constant(std::vector<std::string> vars, const Rational& c);
  static MultiPoly variable(std::vector<std::string> vars, std::size_t index);
  /// The single variable `name`, in a one-variable context.
  static MultiPoly variable(const std::string& name);
  static MultiPoly monomial(std::vector<std::string> vars, Exponents exps, const Rational& c);

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  std::optional<std::size_t> index_of(const std::string& name) const;
  const TermMap& terms() const { return terms_; }

  /// Adds c * x^exps; exps must have nvars() entries.
  void add_term(const Exponents& exps, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coeff(const Exponents& exps) const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(std::size_t var) const;

  /// Re-expresses the polynomial over `vars`; throws std::invalid_argument if
  /// a variable that actually occurs is missing from `vars`.
  MultiPoly with_variables(const std::vector<std::string>& vars) const;
  /// Renames variables; names absent from the map are kept.
  MultiPoly renamed(const std::map<std::string, std::string>& names) const;
  /// Replaces variable i by images[i] (images.size() == nvars()).
  MultiPoly substitute(const std::vector<MultiPoly>& images) const;
  /// Replaces the named variables only.
  MultiPoly substitute(const std::map<std::string, MultiPoly>& images) const;

  /// Evaluates at a point given in the order of variables(). T must be
  /// constructible from Rational.
  template <class T>
  T eval(const std::vector<T>& point) const {
    if (point.size() != vars_.size()) throw std::invalid_argument("MultiPoly::eval: point dimension mismatch");
    T acc = T(Rational(0));
    for (const auto& [exps, c] : terms_) {
      T t = T(c);
      for (std::size_t i = 0; i < exps.size(); ++i)
        for (unsigned k = 0; k < exps[i]; ++k) t = t * point[i];
      acc = acc + t;
    }
    return acc;
  }

  /// Univariate view in the single occurring variable `var`; throws if any
  /// other variable occurs.
  UPoly to_upoly(std::size_t var) const;
  static MultiPoly from_upoly(const UPoly& p, std::vector<std::string> vars, std::size_t var);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
  MultiPoly operator-() const;
  MultiPoly pow(unsigned e) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  /// Canonical text: monomials in descending lexicographic order of
  /// exponent vectors, explicit coefficients, e.g. "1*z1_2 - 1*z2_1 + 3".
  std::string to_string() const;

 private:
  void align_with(MultiPoly& o);
  std::vector<std::string> vars_;
  TermMap terms_;
};

std::vector<std::string> merge_variables(const std::vector<std::string>& a, const std::vector<std::string>& b);

}  // namespace jumploci
