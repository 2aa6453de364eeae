#include "dhl/evolution.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace dhl {

void validate(const EvolutionConfig& config) {
  if (!(config.dt > 0.0)) throw std::invalid_argument("dt must be positive");
  if (!(config.t_final >= 0.0)) throw std::invalid_argument("t_final must be nonnegative");
  if (!(config.picard_tol > 0.0)) throw std::invalid_argument("picard_tol must be positive");
  if (config.quad_nodes < 2) throw std::invalid_argument("quad_nodes must be at least 2");
  if (config.picard_max_iter < 1) throw std::invalid_argument("picard_max_iter must be >= 1");
  if (config.sample_every < 1) throw std::invalid_argument("sample_every must be >= 1");
  validate(config.model.hartree);
}

SpinorField strang_step(const SpinorField& psi, double dt, const ModelParams& model) {
  SpinorField state = propagator_step(psi, 0.5 * dt, model.dirac);
  if (model.hartree.enabled) {
    // exact nonlinear flow: V is frozen because both densities are invariant
    // under the component-wise phase rotation
    const ScalarField pot = hartree_potential(state, model.hartree);
    const double sign = static_cast<double>(model.hartree.coupling_sign);
    for (std::size_t i = 0; i < state.u.size(); ++i) {
      const double phase = -sign * dt * pot.values[i];
      const Complex rot{std::cos(phase), std::sin(phase)};
      state.u[i] *= rot;
      state.v[i] *= std::conj(rot);
    }
  }
  return propagator_step(state, 0.5 * dt, model.dirac);
}

PicardResult picard_solve(const SpinorField& psi0, double window, const EvolutionConfig& config) {
  validate(config);
  if (!(window > 0.0)) throw std::invalid_argument("picard window must be positive");
  const int nodes = config.quad_nodes;
  const double h = window / static_cast<double>(nodes - 1);
  const ModelParams& model = config.model;

  PicardResult result;
  result.node_times.resize(nodes);
  for (int i = 0; i < nodes; ++i) result.node_times[i] = h * static_cast<double>(i);

  // zeroth iterate: free flight
  std::vector<SpinorField> current;
  current.reserve(nodes);
  for (int i = 0; i < nodes; ++i)
    current.push_back(propagator_step(psi0, result.node_times[i], model.dirac));

  for (int iter = 0; iter < config.picard_max_iter; ++iter) {
    // interaction-picture integrand g(s) = e^{+i s D} F(psi(s))
    std::vector<SpinorField> integrand;
    integrand.reserve(nodes);
    for (int i = 0; i < nodes; ++i)
      integrand.push_back(propagator_step(nonlinear_term(current[i], model.hartree),
                                          -result.node_times[i], model.dirac));
    std::vector<SpinorField> next;
    next.reserve(nodes);
    next.push_back(psi0);
    SpinorField accum = make_spinor(psi0.grid);  // running trapezoid of g
    for (int i = 1; i < nodes; ++i) {
      axpy_in_place(accum, Complex{0.5 * h, 0.0}, integrand[i - 1]);
      axpy_in_place(accum, Complex{0.5 * h, 0.0}, integrand[i]);
      SpinorField inner = psi0;
      axpy_in_place(inner, Complex{0.0, -1.0}, accum);  // psi0 - i * integral
      next.push_back(propagator_step(inner, result.node_times[i], model.dirac));
    }
    double err = 0.0;
    for (int i = 0; i < nodes; ++i) err = std::max(err, l2_distance(next[i], current[i]));
    result.iterate_errors.push_back(err);
    current = std::move(next);
    result.iterations = iter + 1;
    if (!is_finite(current.back())) break;
    if (err <= config.picard_tol) {
      result.converged = true;
      break;
    }
  }
  result.state = current.back();
  result.node_states = std::move(current);
  return result;
}

double contraction_factor(const std::vector<double>& errors, double floor) {
  double log_sum = 0.0;
  int count = 0;
  for (std::size_t i = 0; i + 1 < errors.size(); ++i) {
    if (errors[i] <= floor || errors[i + 1] <= floor) break;
    log_sum += std::log(errors[i + 1] / errors[i]);
    ++count;
  }
  if (count == 0) return std::numeric_limits<double>::quiet_NaN();
  return std::exp(log_sum / count);
}

Trajectory evolve(const SpinorField& psi0, const EvolutionConfig& config,
                  const EvolveOptions& options, const DiagnosticsHook& hook) {
  validate(config);
  Trajectory traj;
  auto sample = [&](const SpinorField& state, double t) {
    DiagnosticsRecord rec = record(state, t, config.model, options.s_list);
    if (hook) hook(rec, state);
    traj.times.push_back(t);
    traj.records.push_back(std::move(rec));
    if (options.store_states) traj.states.push_back(state);
  };

  SpinorField state = psi0;
  sample(state, 0.0);
  traj.last_valid_time = 0.0;
  if (config.t_final == 0.0) return traj;

  const double dt = config.dt;
  const long full_steps = static_cast<long>(std::floor(config.t_final / dt + 1e-9));
  double remainder = config.t_final - static_cast<double>(full_steps) * dt;
  if (remainder < 1e-12 * std::max(1.0, config.t_final)) remainder = 0.0;
  const long total = full_steps + (remainder > 0.0 ? 1 : 0);

  for (long i = 1; i <= total; ++i) {
    const bool at_end = (i == total);
    const double step_dt = (i <= full_steps) ? dt : remainder;
    if (config.method == Method::Strang) {
      state = strang_step(state, step_dt, config.model);
    } else {
      PicardResult window = picard_solve(state, step_dt, config);
      if (!window.converged) {
        traj.aborted = true;
        traj.abort_reason = "picard window did not converge within max iterations";
        return traj;
      }
      state = std::move(window.state);
    }
    const double t = at_end ? config.t_final : static_cast<double>(i) * dt;
    if (!is_finite(state)) {
      traj.aborted = true;
      traj.abort_reason = "non-finite state detected";
      return traj;
    }
    traj.last_valid_time = t;
    if (at_end || (i % config.sample_every == 0)) sample(state, t);
  }
  return traj;
}

}  // namespace dhl
