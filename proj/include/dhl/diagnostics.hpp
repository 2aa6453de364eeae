#pragma once

#include <span>
#include <vector>

#include "dhl/dirac.hpp"
#include "dhl/hartree.hpp"

namespace dhl {

struct ModelParams {
  DiracParams dirac{1.0};
  HartreeParams hartree{};
};

/// Observables of a single state: mass ||psi||_2^2, total energy,
/// kinetic form <D_m psi, psi>, H^{1/2} norm, extra H^s norms, and the
/// quartic potential term ||(b - Lap)^{-1/2} rho||_2^2.
struct DiagnosticsRecord {
  double t = 0.0;
  double mass = 0.0;
  double energy = 0.0;
  double kinetic = 0.0;
  double h_half = 0.0;
  std::vector<double> h_s;
  double potential_term = 0.0;
};

DiagnosticsRecord record(const SpinorField& psi, double t, const ModelParams& model,
                         std::span<const double> s_list = {});

/// ||(b - Lap)^{-1/2} density(psi)||_{L^2}^2 with the run's b and density form.
double potential_term(const SpinorField& psi, const ModelParams& model);

/// E(psi) = 1/2 <D_m psi, psi> - 1/4 ||(b - Lap)^{-1/2} rho||_{L^2}^2.
/// Conserved by the flow for the Gamma0 density form with coupling -1.
double energy(const SpinorField& psi, const ModelParams& model);

struct PotentialBoundReport {
  double epsilon;
  double p;         // (2 + 2 eps) / (1 + 3 eps)
  double lhs;       // ||(1 - Lap)^{-1/2} |psi|^2||_{L^2}, psi normalized to unit mass
  double rhs;       // (2^eps/eps)^{1/p} * ||psi||_{H^{1/2}}^{4 eps/(1+eps)}
  double ratio;
  double exponent;  // 4 eps / (1 + eps)
};

/// Constant-free comparison of the smoothed-density bound; psi is
/// normalized to unit L^2 internally. Requires eps in (0,1), nonzero psi.
PotentialBoundReport potential_term_bound_check(const SpinorField& psi, double epsilon);

enum class GrowthModel { SingleExponential, DoubleExponential };

/// Least-squares envelope fit:
///   SingleExponential: value ~ exp(amplitude + rate * t)
///   DoubleExponential: value ~ exp(amplitude * exp(rate * t)),
/// the latter fitted on log(log(value)) over samples with value >= 2.
struct GrowthFit {
  GrowthModel model = GrowthModel::SingleExponential;
  double amplitude = 0.0;
  double rate = 0.0;
  double residual = 0.0;  // rms residual in the linearized coordinates
};

GrowthFit fit_growth(std::span<const double> times, std::span<const double> values,
                     GrowthModel model);

double envelope_value(const GrowthFit& fit, double t);

struct EnvelopeCheck {
  bool pass = false;
  double max_ratio = 0.0;           // worst sample / envelope
  std::vector<bool> sample_pass;
};

/// Asserts every sample lies below slack * fitted envelope. Callers fit on
/// the first half of a series and check the second half.
EnvelopeCheck envelope_check(std::span<const double> times, std::span<const double> values,
                             const GrowthFit& fit, double slack);

/// Convenience: fit `model` on the first half of the series and check the
/// second half with the given slack.
EnvelopeCheck split_envelope_check(std::span<const double> times, std::span<const double> values,
                                   GrowthModel model, double slack, GrowthFit* fit_out = nullptr);

}  // namespace dhl
