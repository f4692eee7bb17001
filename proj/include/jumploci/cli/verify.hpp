#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace jumploci {

struct SuiteReport {
  SuiteReport() = default;
  SuiteReport(std::string n, std::uint64_t s) : name(std::move(n)), seed(s) {}

  std::string name;
  std::uint64_t seed = 0;
  std::size_t checks = 0;
  std::size_t failures = 0;
  /// One line per sub-check, e.g. "aff1/theta2 germ: cone, 0 exceptions".
  std::vector<std::string> notes;
  /// Full replay data for the first failures (capped).
  std::vector<nlohmann::ordered_json> counterexamples;

  bool passed() const { return failures == 0 && checks > 0; }
  void check(bool ok, const std::string& what, nlohmann::ordered_json replay = {});
};

nlohmann::ordered_json to_json(const SuiteReport& r);
std::string to_table(const SuiteReport& r);

/// Names accepted by run_suite, in acceptance order.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown name. `samples` = 0 keeps the
/// suite's default size.
SuiteReport run_suite(const std::string& name, std::uint64_t seed, std::size_t samples = 0);

SuiteReport verify_eigenvalue_criterion(std::uint64_t seed, std::size_t samples = 240);
SuiteReport verify_germ_shape(std::uint64_t seed, std::size_t samples = 30);
SuiteReport verify_origin_and_pi(std::uint64_t seed, std::size_t points = 50);
SuiteReport verify_metabelian(std::uint64_t seed);
SuiteReport verify_levi_lines(std::uint64_t seed, std::size_t lines = 100);
SuiteReport verify_rigidity();
SuiteReport verify_charvar();
SuiteReport verify_certificate(std::uint64_t seed, std::size_t trials = 100);
SuiteReport verify_euler(std::uint64_t seed, std::size_t samples = 100);
SuiteReport verify_invariants(std::uint64_t seed, std::size_t samples = 100);

}  // namespace jumploci
