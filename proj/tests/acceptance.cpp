// One PASS/FAIL line per acceptance criterion; exit code 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "jumploci/cli/verify.hpp"

using namespace jumploci;

namespace {

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;  // 0: no time limit
  std::function<SuiteReport()> run;
};

}  // namespace

int main() {
  const std::uint64_t seed = 11;
  const std::vector<Criterion> criteria{
      {1, "eigenvalue criterion agrees with the twisted-cohomology oracle (240 samples, all degrees)", 60,
       [&] { return verify_eigenvalue_criterion(seed, 240); }},
      {2, "germ shape: resonant for all t in {+-1/8, +-1/16} iff det theta2(g) = 0; sl2 origin-only/empty", 0,
       [&] { return verify_germ_shape(seed, 30); }},
      {3, "origin resonant iff betti >= 1; 50 sampled Pi points resonant (catalog x theta2, theta3)", 0,
       [&] { return verify_origin_and_pi(seed, 50); }},
      {4, "metabelian family: homomorphisms, certificate vanishes, f(0) != 0, coordinate-plane completeness", 0,
       [&] { return verify_metabelian(seed); }},
      {5, "C^2 x| sl2: 100 lines through 0 meet rep only at 0 or at |parameter| >= 1/4", 0,
       [&] { return verify_levi_lines(seed, 100); }},
      {6, "H^1(sl2, adjoint) = H^1(sl2, defining) = 0", 0, [] { return verify_rigidity(); }},
      {7, "torus-bundle character varieties (Sol and Nil monodromy) with chain-level oracle", 0,
       [] { return verify_charvar(); }},
      {8, "Segre factorization round trips (100) and certificate F o P = f~ (20 points), F(0) = 1", 0,
       [&] { return verify_certificate(seed, 100); }},
      {9, "invariants: Euler characteristic, rank-nullity, Cayley-Hamilton, Smith, sl2 relations, CE d^2 and Leibniz",
       120, [&] { return verify_invariants(seed, 100); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    SuiteReport r = c.run();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = c.limit_seconds == 0 || secs < c.limit_seconds;
    bool ok = r.passed() && in_time;
    failed += !ok;
    std::printf("[%s] criterion %d: %s -- %zu/%zu checks, %.1f s", ok ? "PASS" : "FAIL", c.id, c.title.c_str(),
                r.checks - r.failures, r.checks, secs);
    if (c.limit_seconds > 0) std::printf(" (limit %.0f s)", c.limit_seconds);
    std::printf("\n");
    if (!ok) std::fputs(to_table(r).c_str(), stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
