#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jumploci/conn/hom.hpp"
#include "jumploci/exactnum/factor.hpp"
#include "jumploci/exactnum/quad_scalar.hpp"

namespace jumploci {

/// phi(s) = base + s D1, or phi(s, w) = base + s D1 + w D2, in Hom(h, k).
struct AffineSection {
  GOneForm base;
  std::vector<GOneForm> directions;
};

struct SectionSolution {
  std::size_t parameters = 0;
  /// Every parameter value solves the equations.
  bool whole_section = false;
  /// One-parameter case: the gcd of all defect entries, factored.
  FactoredPoly line_condition;
  /// Two-parameter case: gcd of all defect entries (1 when the solution set
  /// is finite); its zero set is contained in the solutions.
  MultiPoly curve;
  /// Isolated solutions with exact coordinates.
  std::vector<std::vector<QuadScalar>> points;
  /// Rational points sampled on the curve component.
  std::vector<std::vector<Rational>> curve_samples;
  /// Isolated solutions found only as roots of a stored polynomial factor.
  std::vector<std::string> unrepresented;
  /// False when some isolated solution may have been missed.
  bool complete = true;
};

/// Defect entries of phi(s[, w]) as polynomials in "s" (and "w").
std::vector<MultiPoly> section_equations(const LieAlgebra& h, const LieAlgebra& k, const AffineSection& section);

/// Solves the homomorphism equations exactly on a one- or two-parameter
/// section. Throws std::invalid_argument for more than two parameters.
SectionSolution rep_on_section(const LieAlgebra& h, const LieAlgebra& k, const AffineSection& section,
                               std::uint64_t seed = 1);

/// The point of Hom(h, k) at rational parameters.
GOneForm section_point(const AffineSection& section, const std::vector<Rational>& params);

}  // namespace jumploci
