#pragma once

#include <string>
#include <vector>

namespace lateterms {

struct VerifyOptions {
  // Run only checks whose id or tags contain this substring ("" = all).
  std::string only;
  // Deliberate-corruption hook used by tests to prove failures are caught.
  // Supported: "blackhole_w1". Unknown names throw std::invalid_argument.
  std::string mutate;
  unsigned precision_bits = 256;
};

struct CriterionResult {
  std::string id;
  bool passed = false;
  std::string detail;
  double millis = 0.0;
};

// Runs the acceptance checks (exact low-order regressions, frozen oracle
// values, late-term ratio convergence, oscillation agreement, growth slopes,
// and the property suite). Throws std::invalid_argument if `only` matches no
// check or `mutate` is unknown.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& opts = {});

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace lateterms
