#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "jumploci/cdga/cdga.hpp"
#include "jumploci/conn/flat.hpp"
#include "jumploci/exactnum/factor.hpp"
#include "jumploci/reson/sl2rep.hpp"

namespace jumploci {

/// {c : c eta in R^i_1(A)} on the line through a closed 1-form eta.
struct LineResonance {
  /// Every point of the line resonates.
  bool entire = false;
  /// Vanishes exactly at the resonant c (1 when none; 0 when entire).
  UPoly condition;
  FactoredPoly factored;
  /// Explicit roots: rational ones and conjugate pairs from quadratics.
  std::vector<QuadScalar> points;
  /// False when some roots sit in irreducible factors of degree >= 3.
  bool complete = true;

  bool contains(const Rational& c) const;
};

/// Rank-one twisted cohomology dim H^i(A, d + eta) for a closed 1-form eta.
std::size_t rank_one_twisted_dim(const CDGA& a, const Vector<Rational>& eta, int i);

/// The rank-drop locus of d_{c eta} in degree i, from the gcd of the
/// maximal minors of d^{i-1} and d^i over Q[c].
LineResonance rank1_resonance_on_line(const CDGA& a, const Vector<Rational>& eta, int i);

enum class ResonanceVerdict { CertifiedTrivial, CertifiedNontrivial, ProbabilisticallyTrivial };
std::string to_string(ResonanceVerdict v);

/// Rank-one resonance R^i_1(A) near 0, per degree.
struct ResonanceSet {
  int degree = 0;
  std::size_t h1_dim = 0;
  ResonanceVerdict verdict = ResonanceVerdict::CertifiedTrivial;
  /// Resonant points found, as A^1 coordinate vectors. Exact when
  /// h1_dim <= 1 and every line condition split; otherwise the points met by
  /// the probes.
  std::vector<std::vector<QuadScalar>> points;
  std::size_t lines_probed = 0;
  std::uint64_t seed = 0;
};

ResonanceSet trivial_resonance(const CDGA& a, int i, std::uint64_t seed, std::size_t n_lines = 50);

/// Whether eta (x) g is in R^i_1(A, theta), through the eigenvalues of theta(g).
bool eigenvalue_criterion(const CDGA& a, const Sl2Rep& rep, const Vector<Rational>& eta, const Vector<Rational>& g,
                          int i);

/// omega in Pi(A, theta): omega in F^1(A, sl2) with det theta(g) = 0 on the
/// sl2 factor.
bool pi_membership(const CDGA& a, const Sl2Rep& rep, const GOneForm& omega);

enum class GermKind { Empty, OriginOnly, Cone, NotIsolated };
std::string to_string(GermKind k);

struct GermEvidence {
  Vector<Rational> eta;
  Vector<Rational> g;
  std::vector<Rational> t_values;
  std::vector<bool> resonant;
  Rational det_theta;
  /// resonant[k] == (det_theta == 0) for every k.
  bool consistent = true;
};

struct GermReport {
  int degree = 0;
  std::vector<std::size_t> betti;
  std::size_t h1_dim = 0;
  GermKind kind = GermKind::Empty;
  /// Description of V(det o theta) inside sl2.
  std::string det_locus;
  ResonanceSet resonance;
  std::vector<GermEvidence> evidence;
  std::size_t exceptions = 0;
};

/// Germ of R^i_1(A, theta) at 0 with t-scaling evidence on `samples` random
/// rank-one directions (cone case only).
GermReport germ_report(const CDGA& a, const Sl2Rep& rep, int i, std::uint64_t seed, std::size_t samples = 30);

/// The small scalings used by the germ evidence.
const std::vector<Rational>& germ_t_values();

/// Human-readable description of V(det o theta).
std::string det_locus_description(const Sl2Rep& rep);

nlohmann::ordered_json to_json(const ResonanceSet& r);
nlohmann::ordered_json to_json(const GermReport& r);

}  // namespace jumploci
