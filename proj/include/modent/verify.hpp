#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace modent::verify {

struct Check {
  std::string name;
  bool pass = false;
  double value = 0.0;      // observed deviation or statistic
  double threshold = 0.0;  // pass when value <= threshold (unless flag-style)
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<Check> checks;

  bool pass() const;
  std::string to_json(const std::string& version, const std::string& config_hash) const;
};

/// Invariant batteries behind `verify <suite>`. Suites: modular, fock,
/// hankel, geometry. Unknown names raise input_error.
SuiteReport run_suite(const std::string& suite, std::uint64_t seed);

SuiteReport verify_modular(std::uint64_t seed, int ensemble = 200);
SuiteReport verify_fock(std::uint64_t seed, int ensemble = 100);
SuiteReport verify_hankel(std::uint64_t seed, int pairs = 50);
SuiteReport verify_geometry(std::uint64_t seed);

}  // namespace modent::verify
