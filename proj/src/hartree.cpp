#include "dhl/hartree.hpp"

#include <cmath>
#include <stdexcept>

namespace dhl {

namespace {

void require_bessel_args(double b) {
  if (!(b > 0.0) || !std::isfinite(b))
    throw std::invalid_argument("bessel multiplier requires b > 0");
}

void apply_bessel(const SpectralGrid& grid, std::vector<Complex>& modes, double sigma, double b) {
  const std::size_t n = grid.n();
  for (std::size_t k1 = 0; k1 < n; ++k1)
    for (std::size_t k2 = 0; k2 < n; ++k2)
      modes[grid.index(k1, k2)] *= std::pow(b + grid.freq_sq(k1, k2), sigma);
}

}  // namespace

void validate(const HartreeParams& params) {
  require_bessel_args(params.b);
  if (params.coupling_sign != 1 && params.coupling_sign != -1)
    throw std::invalid_argument("coupling sign must be +1 or -1");
}

ScalarField bessel_multiply(const ScalarField& field, double sigma, double b) {
  require_bessel_args(b);
  const SpectralGrid& grid = *field.grid;
  std::vector<Complex> modes = detail::to_modes_real(grid, field.values);
  apply_bessel(grid, modes, sigma, b);
  ScalarField out;
  out.grid = field.grid;
  out.values = detail::from_modes_real(grid, std::move(modes));
  return out;
}

SpinorField bessel_multiply(const SpinorField& field, double sigma, double b) {
  require_bessel_args(b);
  const SpectralGrid& grid = *field.grid;
  std::vector<Complex> uh = detail::to_modes(grid, field.u);
  std::vector<Complex> vh = detail::to_modes(grid, field.v);
  apply_bessel(grid, uh, sigma, b);
  apply_bessel(grid, vh, sigma, b);
  SpinorField out;
  out.grid = field.grid;
  out.u = detail::from_modes(grid, std::move(uh));
  out.v = detail::from_modes(grid, std::move(vh));
  return out;
}

ScalarField hartree_potential(const SpinorField& psi, const HartreeParams& params) {
  validate(params);
  return bessel_multiply(density(psi, params.density_form), -1.0, params.b);
}

SpinorField nonlinear_term(const SpinorField& psi, const HartreeParams& params) {
  validate(params);
  SpinorField out;
  out.grid = psi.grid;
  if (!params.enabled) {
    out.u.assign(psi.u.size(), Complex{});
    out.v.assign(psi.v.size(), Complex{});
    return out;
  }
  const ScalarField pot = hartree_potential(psi, params);
  const double sign = static_cast<double>(params.coupling_sign);
  out.u.resize(psi.u.size());
  out.v.resize(psi.v.size());
  for (std::size_t i = 0; i < psi.u.size(); ++i) {
    out.u[i] = sign * pot.values[i] * psi.u[i];
    out.v[i] = -sign * pot.values[i] * psi.v[i];  // gamma0 flips the lower component
  }
  return out;
}

ScalarField bessel_kernel_samples(GridPtr grid, double sigma) {
  if (!(sigma < 0.0)) throw std::invalid_argument("kernel samples require sigma < 0");
  const SpectralGrid& g = *grid;
  const std::size_t n = g.n();
  std::vector<Complex> modes(g.num_points());
  for (std::size_t k1 = 0; k1 < n; ++k1)
    for (std::size_t k2 = 0; k2 < n; ++k2)
      modes[g.index(k1, k2)] = std::pow(1.0 + g.freq_sq(k1, k2), sigma);
  // centered physical samples: G(x_j) = (1/L^2) sum_k hat-G e^{i x_j . xi_k}
  detail::checkerboard(g, modes);
  std::vector<double> vals = detail::from_modes_real(g, std::move(modes));
  const double adjust = static_cast<double>(g.num_points()) / (g.box_length() * g.box_length());
  ScalarField out;
  out.grid = std::move(grid);
  out.values.resize(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i) out.values[i] = vals[i] * adjust;
  return out;
}

KernelLpReport kernel_lp_bound_check(GridPtr grid, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::invalid_argument("kernel L^p check requires epsilon in (0,1)");
  KernelLpReport rep;
  rep.epsilon = epsilon;
  rep.p = (2.0 + 2.0 * epsilon) / (1.0 + 3.0 * epsilon);
  const ScalarField kernel = bessel_kernel_samples(grid, -0.5);
  const SpectralGrid& g = *grid;
  const std::size_t n = g.n();
  const double dx = g.spacing();
  double sum = 0.0;
  for (std::size_t i1 = 0; i1 < n; ++i1) {
    const double x1 = g.coord(i1);
    for (std::size_t i2 = 0; i2 < n; ++i2) {
      const double x2 = g.coord(i2);
      if (std::sqrt(x1 * x1 + x2 * x2) < dx) continue;  // origin cell is a discretization artifact
      sum += std::pow(std::abs(kernel.values[g.index(i1, i2)]), rep.p);
    }
  }
  rep.lhs = sum * g.cell_area();
  rep.rhs = std::pow(2.0, epsilon) / epsilon;
  rep.ratio = rep.lhs / rep.rhs;
  return rep;
}

}  // namespace dhl
