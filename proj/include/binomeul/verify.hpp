#pragma once

// Invariant suites behind `binomeul verify`.

#include <string>
#include <vector>

#include "binomeul/serialize.hpp"

namespace binomeul {

struct CheckResult {
  std::string id;
  std::string params;
  bool pass = true;
  std::string witness;
  /// Reported but never fails the suite; used for conjectures.
  bool informational = false;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
  std::size_t failures() const;
};

struct VerifyBounds {
  int max_n = 4;
  int max_r = 3;
  int N = 5;
};

const std::vector<std::string>& suite_names();
/// suite is one of enumerative, geometric, equivariant, all.
VerificationReport verify_suite(const std::string& suite, const VerifyBounds& bounds);

Json to_json(const VerificationReport& report);
/// One line per check: PASS/FAIL/INFO id [params] witness
std::string report_text(const VerificationReport& report);

}  // namespace binomeul
