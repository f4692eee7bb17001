#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "jumploci/exactnum/matrix.hpp"
#include "jumploci/poly/multipoly.hpp"

namespace jumploci {

struct NotInvariant : std::domain_error {
  using std::domain_error::domain_error;
};
struct NotSymmetric : std::domain_error {
  using std::domain_error::domain_error;
};

/// Name of the Segre coordinate z_{ij} = x_i y_j (1-based): "z{i}_{j}".
std::string segre_variable(std::size_t i, std::size_t j);
/// All Segre coordinates, x-index major.
std::vector<std::string> segre_variables(std::size_t m, std::size_t n);

/// True iff every monomial has equal total degree in the x-block and in the
/// y-block. Throws std::invalid_argument if an occurring variable is in
/// neither block.
bool is_torus_invariant(const MultiPoly& f, const std::vector<std::string>& x_block,
                        const std::vector<std::string>& y_block);

/// F in the variables z{i}_{j} with F(x_i y_j) = f. Each balanced monomial
/// x_I y_J is rewritten by sorting the multisets I and J and pairing them
/// positionally. Throws NotInvariant.
MultiPoly factor_through_segre(const MultiPoly& f, const std::vector<std::string>& x_block,
                               const std::vector<std::string>& y_block);

/// Substitutes z{i}_{j} := x_i y_j, the inverse check of factor_through_segre.
MultiPoly segre_pullback(const MultiPoly& F, const std::vector<std::string>& x_block,
                         const std::vector<std::string>& y_block);

/// Elementary symmetric polynomial e_k in `vars`.
MultiPoly elementary_symmetric(const std::vector<std::string>& vars, std::size_t k);

/// Names of the elementary symmetric variables: "e1", ..., "em".
std::vector<std::string> elementary_names(std::size_t m);

/// Rewrites f, symmetric in `lambda`, as a polynomial in e1..em (other
/// variables are carried as coefficients). Leading-term elimination in
/// lexicographic order of the lambda-exponents. Throws NotSymmetric.
MultiPoly symmetric_reduce(const MultiPoly& f, const std::vector<std::string>& lambda);

/// Matrices theta(H), theta(X+), theta(X-) of an sl2 representation.
using Sl2Matrices = std::array<Matrix<Rational>, 3>;

/// Names of the sl2 coordinates of g = a H + b X+ + c X-.
inline const std::vector<std::string>& sl2_coordinate_names() {
  static const std::vector<std::string> names{"a", "b", "c"};
  return names;
}

/// det(x I - theta(aH + bX+ + cX-)) as coefficients c_0 = 1, c_1, ..., c_m,
/// each a polynomial in (a, b, c).
std::vector<MultiPoly> symbolic_char_poly(const Sl2Matrices& theta);

/// The certificate F on A^1 (x) sl2 with F o P = prod_i phi0(lambda_i eta).
/// phi0 is a polynomial in the A^1 coordinates (its variable list, in
/// order); the result is in the Segre variables z{i}_{j}, j indexing
/// (a, b, c). Throws std::domain_error when phi0(0) = 0.
MultiPoly build_certificate(const MultiPoly& phi0, const Sl2Matrices& theta);

/// The intermediate f~(eta, lambda) = prod_i phi0(lambda_i eta), in the
/// variables of phi0 followed by l1..lm.
MultiPoly certificate_product(const MultiPoly& phi0, std::size_t m);

}  // namespace jumploci
