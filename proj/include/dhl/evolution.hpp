#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dhl/diagnostics.hpp"

namespace dhl {

enum class Method { Strang, Picard };

struct EvolutionConfig {
  double dt = 1e-2;          // Strang step; doubles as the Picard window length
  double t_final = 1.0;
  Method method = Method::Strang;
  ModelParams model{};
  double picard_tol = 1e-12;     // sup-over-nodes L^2 distance between iterates
  int picard_max_iter = 50;
  int quad_nodes = 17;           // trapezoid nodes per Picard window
  int sample_every = 1;          // diagnostics cadence, in steps/windows
};

void validate(const EvolutionConfig& config);

/// One Strang step: half free flow, exact nonlinear phase rotation with the
/// potential frozen (both density forms are invariant under it), half free
/// flow. Unitary per substep.
SpinorField strang_step(const SpinorField& psi, double dt, const ModelParams& model);

/// Fixed-point iteration of the integral map
///   S(psi)(t) = e^{-itD}[psi0 - i * int_0^t e^{isD} F(psi(s)) ds],
/// F = nonlinear_term, on equispaced nodes with composite-trapezoid
/// quadrature assembled in the interaction picture. The initial iterate is
/// the free flight of psi0.
struct PicardResult {
  bool converged = false;
  int iterations = 0;
  std::vector<double> iterate_errors;  // sup-over-nodes L^2 distance per iteration
  SpinorField state;                   // last iterate at the window end
  std::vector<SpinorField> node_states;
  std::vector<double> node_times;
};

PicardResult picard_solve(const SpinorField& psi0, double window, const EvolutionConfig& config);

/// Geometric-mean contraction factor of an error sequence, ignoring entries
/// at the roundoff floor. NaN when fewer than two usable errors exist.
double contraction_factor(const std::vector<double>& errors, double floor = 1e-14);

struct Trajectory {
  std::vector<double> times;
  std::vector<DiagnosticsRecord> records;
  std::vector<SpinorField> states;  // filled only when requested
  bool aborted = false;
  double last_valid_time = 0.0;
  std::string abort_reason;
};

struct EvolveOptions {
  std::vector<double> s_list;   // extra H^s norms per record
  bool store_states = false;
};

using DiagnosticsHook = std::function<void(const DiagnosticsRecord&, const SpinorField&)>;

/// Marches to t_final with the configured method, recording diagnostics
/// every `sample_every` steps (plus the initial and final states). Detects
/// NaN/Inf and stops at the last valid time; Picard non-convergence aborts
/// the trajectory with the window's error sequence in `abort_reason`.
Trajectory evolve(const SpinorField& psi0, const EvolutionConfig& config,
                  const EvolveOptions& options = {}, const DiagnosticsHook& hook = {});

}  // namespace dhl
