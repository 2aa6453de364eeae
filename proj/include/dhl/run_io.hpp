#pragma once

#include <string>
#include <vector>

#include "dhl/config.hpp"

namespace dhl {

/// diagnostics.csv: columns t, mass, energy, kinetic, h_half, h_s_<s>...,
/// potential_term; 17 significant digits, scientific notation.
std::string diagnostics_csv(const std::vector<DiagnosticsRecord>& records,
                            const std::vector<double>& s_list);

/// Binary state snapshot, little-endian:
///   magic "DHRT" | u32 version=1 | u32 n | f64 L | f64 m | f64 b |
///   n*n complex doubles u (row-major, re/im interleaved) | same for v.
void write_snapshot(const std::string& path, const SpinorField& psi, const ModelParams& model);
SpinorField read_snapshot(const std::string& path, ModelParams* model_out = nullptr);

struct RunOutcome {
  int exit_code = 0;  // 0 ok, 2 config error, 3 numerical abort
  std::string summary_json;
  std::string csv;
  std::string message;
};

/// Executes a run config: evolves, assembles diagnostics.csv and
/// summary.json (config echo, conservation drifts, growth fits, envelope
/// verdicts, linear-vs-exact error when the coupling is off), optionally a
/// final-state snapshot. Files are written under out_dir.
RunOutcome run_simulation(const RunConfig& config, const std::string& out_dir);

struct ConvergenceOutcome {
  int exit_code = 0;
  std::vector<double> dts;
  std::vector<double> errors;   // L^2 errors against the finest-dt reference
  double fitted_order = 0.0;
  bool linear_exact = false;    // coupling off: errors at roundoff, order not meaningful
  std::string table;            // human-readable (dt, error) table
  std::string json;
};

/// Runs a dt ladder {4h, 2h, h, h/2, ...} against an h/16 reference and fits
/// the log-log slope. Requires at least 4 rungs.
ConvergenceOutcome run_convergence(const RunConfig& config, const std::vector<double>& dt_ladder,
                                   const std::string& out_dir);

}  // namespace dhl
