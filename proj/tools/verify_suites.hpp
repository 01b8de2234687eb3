#pragma once

#include <string>
#include <vector>

namespace dsh::tools {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Runs one of the named invariant suites: "specfun", "kernels",
/// "asymptotics" or "theorem". Throws DomainError for unknown names.
std::vector<CheckResult> run_suite(const std::string& suite, unsigned n_threads);

}  // namespace dsh::tools
