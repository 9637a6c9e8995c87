#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dpl/configuration.hpp"

namespace dpl {

struct CheckResult {
  int id = 0;            // acceptance criterion number, 0 for auxiliary checks
  std::string name;      // short descriptive tag
  std::string status;    // "pass", "fail" or "skipped"
  std::string expected;
  std::string actual;
  std::string detail;
  double seconds = 0;
  bool passed() const { return status == "pass"; }
};

struct VerifyOptions {
  bool skip_weyl = false;
  unsigned threads = 1;
  std::uint64_t seed = 20240607;
  int trials = 1000;  // per property suite
};

struct RunReport {
  std::string command;
  std::vector<CheckResult> checks;
  double seconds = 0;
  bool ok() const;  // skipped checks count as neither pass nor failure
};

constexpr int kCriteria = 11;

std::string criterion_name(int id);
CheckResult run_criterion(int id, const VerifyOptions& opt = {});

/// Every registry entry builds, classifies to its stated type and validates.
/// Failures name the offending type; entries are injectable for testing.
CheckResult check_registry(const std::vector<RegistryEntry>& entries);

/// Registry check first, then the criteria in order with the W(E7) pass last.
RunReport verify_all(const VerifyOptions& opt = {});

}  // namespace dpl
