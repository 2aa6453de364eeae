#pragma once

#include <string>
#include <vector>

#include "dhl/config.hpp"

namespace dhl {

struct SweepPoint {
  std::string label;
  double value = 0.0;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  double max_ratio = 0.0;
  double baseline = 0.0;     // frozen regression value; pass requires max <= baseline * 1.25
  std::string detail;        // extra pass/fail context (secondary conditions)
  std::vector<SweepPoint> sweep;
};

struct VerifyReport {
  bool pass = false;
  std::vector<CheckResult> checks;
};

/// Runs the selected verifier sweeps (Bernstein, dyadic multiplier, product
/// estimate, Brezis-Gallouet, kernel bound, kernel L^p, potential term) on
/// their reference grids, deterministically in the seed. Sweep points may be
/// evaluated concurrently (capped by DHL_THREADS); reduction is ordered.
VerifyReport run_verify_suite(const VerifySuiteConfig& config);

std::string verify_report_json(const VerifyReport& report, const VerifySuiteConfig& config);

}  // namespace dhl
