#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "orbitkit/liealg.hpp"

namespace orbitkit::cli {

struct VerifyOptions {
  std::uint64_t seed = 1;
  double tol = kDefaultTolerance;
  std::optional<int> samples;  // overrides every per-check default
  std::optional<Family> family;
  std::vector<int> params;
};

struct Check {
  std::string name;
  bool passed = false;
  double residual = 0.0;
  double bound = 0.0;
  std::string property;
  nlohmann::json detail;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

std::vector<Check> run_suite(const std::string& suite, const VerifyOptions& opt);

// {"suite", "seed", "tolerance", "passed", "checks": [...]}; keys are sorted, so
// the dump is byte-identical for identical inputs.
nlohmann::json verify_report(const std::string& suite, const VerifyOptions& opt);

}  // namespace orbitkit::cli
