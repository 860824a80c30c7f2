#pragma once

// Named batches of exact checks over S_n, shared by the CLI and the
// acceptance runner.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hecke/qpoly.hpp"
#include "hecke/report.hpp"

namespace hecke {

struct VerifyOptions {
  int n = 3;
  int degree_bound = 4;
  std::uint64_t seed = 1;
  int jobs = 1;
  /// Extra q specialization for the kernel-dimension checks.
  std::optional<Rational> q_value;
};

/// Suite names in the order `all` runs them.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite name.
CheckReport run_suite(const std::string& suite, const VerifyOptions& options);

/// `all` expands to every suite; any other name runs just that one.
std::vector<CheckReport> run_suites(const std::string& suite, const VerifyOptions& options);

}  // namespace hecke
