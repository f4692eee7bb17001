#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "jumploci/exactnum/rational.hpp"

namespace jumploci {

/// Seeded generator of small-height rationals. Draws are derived from the
/// raw mt19937_64 stream (whose output sequence is fixed by the standard),
/// so identical seeds give identical samples on every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  long integer(long lo, long hi);
  /// n/d with |n| <= max_num, 1 <= d <= max_den.
  Rational rational(long max_num = 9, long max_den = 9);
  Rational nonzero_rational(long max_num = 9, long max_den = 9);
  std::vector<Rational> vector(std::size_t n, long max_num = 9, long max_den = 9);
  /// Nonzero vector.
  std::vector<Rational> nonzero_vector(std::size_t n, long max_num = 9, long max_den = 9);
  bool coin() { return integer(0, 1) == 1; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace jumploci
