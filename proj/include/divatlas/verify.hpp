#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace divatlas {

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Names accepted by run_suite, in execution order:
/// rank-oracle, enc-oracle, subdim-oracle, deformability, worked-examples,
/// exorbitance-gap, count-reconciliation.
const std::vector<std::string>& suite_names();

/// Runs one seeded suite. Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string& name, std::uint64_t seed);

/// All suites, or only `only` when given.
std::vector<SuiteResult> run_suites(std::uint64_t seed, const std::optional<std::string>& only = std::nullopt);

} // namespace divatlas
