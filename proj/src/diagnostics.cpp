#include "dhl/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

namespace dhl {

double potential_term(const SpinorField& psi, const ModelParams& model) {
  const ScalarField rho = density(psi, model.hartree.density_form);
  const ScalarField smoothed = bessel_multiply(rho, -0.5, model.hartree.b);
  const double norm = lp_norm(smoothed, 2.0);
  return norm * norm;
}

double energy(const SpinorField& psi, const ModelParams& model) {
  return 0.5 * kinetic_form(psi, model.dirac) - 0.25 * potential_term(psi, model);
}

DiagnosticsRecord record(const SpinorField& psi, double t, const ModelParams& model,
                         std::span<const double> s_list) {
  DiagnosticsRecord rec;
  rec.t = t;
  rec.mass = inner_product(psi, psi).real();
  rec.kinetic = kinetic_form(psi, model.dirac);
  rec.potential_term = potential_term(psi, model);
  rec.energy = 0.5 * rec.kinetic - 0.25 * rec.potential_term;
  rec.h_half = sobolev_norm(psi, 0.5);
  rec.h_s.reserve(s_list.size());
  for (double s : s_list) rec.h_s.push_back(sobolev_norm(psi, s));
  return rec;
}

PotentialBoundReport potential_term_bound_check(const SpinorField& psi, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::invalid_argument("potential bound check requires epsilon in (0,1)");
  const double mass = inner_product(psi, psi).real();
  if (!(mass > 0.0)) throw std::invalid_argument("zero input");
  SpinorField unit = (1.0 / std::sqrt(mass)) * psi;

  PotentialBoundReport rep;
  rep.epsilon = epsilon;
  rep.p = (2.0 + 2.0 * epsilon) / (1.0 + 3.0 * epsilon);
  rep.exponent = 4.0 * epsilon / (1.0 + epsilon);
  const ScalarField rho = density(unit, DensityForm::Modulus);
  rep.lhs = lp_norm(bessel_multiply(rho, -0.5, 1.0), 2.0);
  const double h_half = sobolev_norm(unit, 0.5);
  rep.rhs = std::pow(std::pow(2.0, epsilon) / epsilon, 1.0 / rep.p) * std::pow(h_half, rep.exponent);
  rep.ratio = rep.lhs / rep.rhs;
  return rep;
}

GrowthFit fit_growth(std::span<const double> times, std::span<const double> values,
                     GrowthModel model) {
  if (times.size() != values.size()) throw std::invalid_argument("series size mismatch");
  std::vector<double> xs, ys;
  xs.reserve(times.size());
  ys.reserve(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (i > 0 && !(times[i] > times[i - 1]))
      throw std::invalid_argument("sample times must be strictly increasing");
    const double v = values[i];
    if (!(v > 0.0)) throw std::invalid_argument("growth fit requires positive values");
    if (model == GrowthModel::DoubleExponential) {
      if (v < 2.0) continue;  // the double-exponential branch applies to values >= 2
      xs.push_back(times[i]);
      ys.push_back(std::log(std::log(v)));
    } else {
      xs.push_back(times[i]);
      ys.push_back(std::log(v));
    }
  }
  if (xs.size() < 8) throw std::invalid_argument("growth fit requires at least 8 usable samples");

  // least squares y = c0 + c1 x
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double n = static_cast<double>(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double denom = n * sxx - sx * sx;
  const double c1 = (n * sxy - sx * sy) / denom;
  const double c0 = (sy - c1 * sx) / n;

  GrowthFit fit;
  fit.model = model;
  fit.rate = c1;
  fit.amplitude = (model == GrowthModel::DoubleExponential) ? std::exp(c0) : c0;
  double rss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (c0 + c1 * xs[i]);
    rss += r * r;
  }
  fit.residual = std::sqrt(rss / n);
  return fit;
}

double envelope_value(const GrowthFit& fit, double t) {
  if (fit.model == GrowthModel::DoubleExponential)
    return std::exp(fit.amplitude * std::exp(fit.rate * t));
  return std::exp(fit.amplitude + fit.rate * t);
}

EnvelopeCheck envelope_check(std::span<const double> times, std::span<const double> values,
                             const GrowthFit& fit, double slack) {
  EnvelopeCheck check;
  check.pass = true;
  check.sample_pass.reserve(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double env = slack * envelope_value(fit, times[i]);
    const double ratio = values[i] / envelope_value(fit, times[i]);
    check.max_ratio = std::max(check.max_ratio, ratio);
    const bool ok = values[i] <= env;
    check.sample_pass.push_back(ok);
    if (!ok) check.pass = false;
  }
  return check;
}

EnvelopeCheck split_envelope_check(std::span<const double> times, std::span<const double> values,
                                   GrowthModel model, double slack, GrowthFit* fit_out) {
  const std::size_t half = times.size() / 2;
  GrowthFit fit = fit_growth(times.subspan(0, half), values.subspan(0, half), model);
  if (fit_out != nullptr) *fit_out = fit;
  return envelope_check(times.subspan(half), values.subspan(half), fit, slack);
}

}  // namespace dhl
