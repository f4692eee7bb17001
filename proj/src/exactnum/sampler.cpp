#include "jumploci/exactnum/sampler.hpp"

#include <limits>
#include <stdexcept>

namespace jumploci {

long Sampler::integer(long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("Sampler: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<long>(x % span);
}

Rational Sampler::rational(long max_num, long max_den) {
  long n = integer(-max_num, max_num);
  long d = integer(1, max_den);
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Rational Sampler::nonzero_rational(long max_num, long max_den) {
  for (;;) {
    Rational q = rational(max_num, max_den);
    if (q != 0) return q;
  }
}

std::vector<Rational> Sampler::vector(std::size_t n, long max_num, long max_den) {
  std::vector<Rational> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(rational(max_num, max_den));
  return v;
}

std::vector<Rational> Sampler::nonzero_vector(std::size_t n, long max_num, long max_den) {
  if (n == 0) throw std::invalid_argument("Sampler: nonzero vector of length 0");
  for (;;) {
    auto v = vector(n, max_num, max_den);
    for (const auto& x : v)
      if (x != 0) return v;
  }
}

}  // namespace jumploci
