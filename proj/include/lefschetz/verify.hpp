#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lefschetz/scenario.hpp"

namespace lefschetz {

struct VerifyOptions {
  std::uint64_t seed = 0;
  IndexRules rules;
  std::size_t weyl_cap = 1'000'000;
};

struct CheckResult {
  std::string name;
  bool pass = true;
  std::size_t cases = 0;
  /// What was checked, one line.
  std::string summary;
  /// JSON text of the first failing case; empty on success.
  std::string counterexample;
  double seconds = 0;
};

/// Identities in suite order. "bott" is only part of the extended suite.
std::vector<std::string> identity_names(bool extended);
bool is_identity(const std::string& name);

CheckResult run_identity(const std::string& name, const VerifyOptions& options = {});

/// Scenario used for the Bott element check: the origin of T(C^n) under the
/// standard n-torus, with complexified tangent weights +-e_j and fibre
/// character prod_j (1 - t_j)(1 - t_j^{-1}).
FixedPointScenario bott_scenario(std::size_t n);

}  // namespace lefschetz
