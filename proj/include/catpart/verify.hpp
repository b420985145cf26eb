#pragma once

#include "catpart/partition.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace catpart {

struct VerifyOptions {
  int max_parts = 6;  // ell ranges over [1, max_parts]
  int max_m = 3;      // m ranges over [1, max_m]; 0 skips every Omega suite
  std::uint64_t cap = kDefaultEnumerationCap;
  /// Test hook: a named fault injected into one checker (see known_mutations()).
  std::optional<std::string> mutation;
};

enum class SuiteStatus { pass, fail, skipped };

struct SuiteResult {
  std::string name;
  std::string range;
  std::uint64_t examined = 0;
  SuiteStatus status = SuiteStatus::skipped;
  std::string counterexample;  // set whenever status == fail
  std::string detail;
  double millis = 0.0;
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<SuiteResult> suites;  // declaration order, independent of timing

  bool passed() const;
  std::string to_text() const;
  std::string to_json() const;
};

/// Names of every suite, in the order run_verify reports them.
std::vector<std::string> verify_suite_names();
std::vector<std::string> known_mutations();

/// Runs every property suite at the requested scale. Throws invalid_argument on
/// bad bounds or an unknown mutation, cap_exceeded when an enumeration is too big.
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace catpart
