#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "jumploci/exactnum/factor.hpp"
#include "jumploci/exactnum/matrix.hpp"
#include "jumploci/exactnum/quad_scalar.hpp"
#include "jumploci/exactnum/rational.hpp"

namespace jumploci {

struct DegreeOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct IrrationalIntermediateCharacter : std::domain_error {
  using std::domain_error::domain_error;
};

/// Z^n x|_A Z, A in GL_n(Z). Elements (v, s) multiply as
/// (v, s)(w, r) = (v + A^s w, s + r).
struct TorusBundleGroup {
  std::size_t n = 0;
  Matrix<Integer> a;
};

/// Validates that A is square with det = +-1.
TorusBundleGroup torus_bundle(const Matrix<Integer>& a);

/// H_1(G_A) = C + Z with C = coker(A - I).
struct CharacterTorus {
  std::vector<Integer> smith_diagonal;  // of A - I
  std::size_t free_rank = 0;            // rank of C
  std::vector<Integer> torsion;         // orders > 1 of the cyclic factors of C
  /// Dimension of the identity component of Hom(H_1, C*).
  std::size_t dimension() const { return free_rank + 1; }
  std::string description() const;
};

CharacterTorus character_torus(const TorusBundleGroup& g);

/// Lambda^q of a square matrix on the lexicographically sorted q-subsets:
/// entry (I, J) is the minor det A[I, J].
Matrix<Rational> exterior_power(const Matrix<Rational>& a, std::size_t q);

/// A value of the last character coordinate: a rational number, or the roots
/// of an irreducible factor of degree >= 2.
struct CharValue {
  bool rational = true;
  Rational value;
  UPoly factor;  // monic irreducible when !rational

  std::string to_string() const;
  /// Both roots when the factor is quadratic; the value when rational.
  std::vector<QuadScalar> explicit_values() const;
  friend bool operator==(const CharValue& x, const CharValue& y) {
    return x.rational == y.rational && (x.rational ? x.value == y.value : x.factor == y.factor);
  }
};

struct CharPoint {
  /// The restriction to Z^n is trivial for every point.
  CharValue lambda;
  /// Exterior degrees q with lambda an eigenvalue of Lambda^q A.
  std::vector<std::size_t> provenance;
};

struct CharVariety {
  int degree = 0;
  std::vector<CharPoint> points;
  bool contains(const QuadScalar& lambda) const;
};

/// V^i_1(G_A) for 0 <= i <= n + 1: trivial on Z^n with
/// lambda in eig(Lambda^i A) u eig(Lambda^{i-1} A). Throws DegreeOutOfRange.
CharVariety charvar(const TorusBundleGroup& g, int i);

/// dim H_i(G_A, C_rho) for rho = (chi, lambda) from the Koszul complex of
/// Z^n twisted by chi, the chain map induced by A, and the mapping cone of
/// (A_* - lambda). chi must be A-invariant with nonzero coordinates.
std::size_t charvar_oracle(const TorusBundleGroup& g, const std::vector<Rational>& chi, const QuadScalar& lambda,
                           int i);

/// An automorphism of G_A: v -> B v on Z^n and t -> v0 t^eps, with
/// B A = A^eps B.
struct TowerStep {
  Matrix<Integer> b;
  int epsilon = 1;
  std::vector<Integer> v0;
};

void validate_step(const TorusBundleGroup& g, const TowerStep& step);

/// A character of (G_A) x|_beta Z trivial on Z^n: lambda on t, mu on the new
/// generator.
struct TowerPoint {
  Rational lambda;
  CharValue mu;
  /// Homological degrees j in {i, i-1} of G_A whose monodromy produced mu.
  std::vector<int> provenance;
};

struct TowerCharVariety {
  int degree = 0;
  std::vector<TowerPoint> points;
  bool contains(const Rational& lambda, const QuadScalar& mu) const;
};

/// One inductive step on top of charvar(g, .): V^i_1 of (G_A) x|_beta Z for
/// 0 <= i <= n + 2. Throws IrrationalIntermediateCharacter when a character
/// of G_A entering the step has an irrational coordinate.
TowerCharVariety tower_extend(const TorusBundleGroup& g, const TowerStep& step, int i);

/// dim H_i((G_A) x|_beta Z, C_rho) for rho trivial on Z^n, from the
/// two-fold mapping cone of the chain models.
std::size_t tower_oracle(const TorusBundleGroup& g, const TowerStep& step, const Rational& lambda,
                         const QuadScalar& mu, int i);

}  // namespace jumploci
