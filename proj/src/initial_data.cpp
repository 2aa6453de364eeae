#include "dhl/initial_data.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace dhl {

SpinorField gaussian_data(GridPtr grid, double amplitude, double width,
                          std::array<double, 2> center, std::array<Complex, 2> spinor) {
  return modulated_gaussian_data(std::move(grid), amplitude, width, {0.0, 0.0}, center, spinor);
}

SpinorField modulated_gaussian_data(GridPtr grid, double amplitude, double width,
                                    std::array<double, 2> xi0, std::array<double, 2> center,
                                    std::array<Complex, 2> spinor) {
  if (!(width > 0.0)) throw std::invalid_argument("gaussian width must be positive");
  SpinorField out = make_spinor(std::move(grid));
  const SpectralGrid& g = *out.grid;
  const std::size_t n = g.n();
  const double inv_w2 = 1.0 / (width * width);
  for (std::size_t i1 = 0; i1 < n; ++i1) {
    const double x1 = g.coord(i1) - center[0];
    for (std::size_t i2 = 0; i2 < n; ++i2) {
      const double x2 = g.coord(i2) - center[1];
      const double envelope = amplitude * std::exp(-(x1 * x1 + x2 * x2) * inv_w2);
      const double phase = x1 * xi0[0] + x2 * xi0[1];
      const Complex value = envelope * Complex{std::cos(phase), std::sin(phase)};
      const std::size_t idx = g.index(i1, i2);
      out.u[idx] = spinor[0] * value;
      out.v[idx] = spinor[1] * value;
    }
  }
  return out;
}

SpinorField eigen_plane_wave_data(GridPtr grid, std::array<int, 2> mode, int branch,
                                  double l2_norm, const DiracParams& params) {
  if (branch != 1 && branch != -1) throw std::invalid_argument("branch must be +1 or -1");
  SpinorField out = make_spinor(std::move(grid));
  const SpectralGrid& g = *out.grid;
  const double base = 2.0 * std::numbers::pi / g.box_length();
  const double xi1 = base * mode[0];
  const double xi2 = base * mode[1];
  const DiracSymbol sym = dirac_symbol(xi1, xi2, params.mass);
  // eigenvector of the Hermitian 2x2 symbol for eigenvalue branch*lambda
  const double target = branch * sym.lambda;
  Complex w0, w1;
  if (std::abs(sym.d01) > 1e-14 * sym.lambda) {
    w0 = sym.d01;
    w1 = Complex{target - sym.d00.real(), 0.0};
  } else {  // diagonal symbol: mass eigenstates
    w0 = (branch == 1) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
    w1 = (branch == 1) ? Complex{0.0, 0.0} : Complex{1.0, 0.0};
  }
  const double wn = std::sqrt(std::norm(w0) + std::norm(w1));
  w0 /= wn;
  w1 /= wn;
  const double scale = l2_norm / g.box_length();  // plane wave has L^2 norm L
  const std::size_t n = g.n();
  for (std::size_t i1 = 0; i1 < n; ++i1) {
    const double x1 = g.coord(i1);
    for (std::size_t i2 = 0; i2 < n; ++i2) {
      const double x2 = g.coord(i2);
      const double phase = x1 * xi1 + x2 * xi2;
      const Complex wave = scale * Complex{std::cos(phase), std::sin(phase)};
      const std::size_t idx = g.index(i1, i2);
      out.u[idx] = w0 * wave;
      out.v[idx] = w1 * wave;
    }
  }
  return out;
}

namespace {

std::vector<Complex> random_band_limited_modes(const SpectralGrid& g, double cutoff,
                                               std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Complex> modes(g.num_points());
  const std::size_t n = g.n();
  for (std::size_t k1 = 0; k1 < n; ++k1)
    for (std::size_t k2 = 0; k2 < n; ++k2) {
      const double re = normal(rng);
      const double im = normal(rng);
      if (std::sqrt(g.freq_sq(k1, k2)) <= cutoff) modes[g.index(k1, k2)] = Complex{re, im};
    }
  return modes;
}

}  // namespace

SpinorField random_band_limited_data(GridPtr grid, double cutoff, std::uint64_t seed) {
  SpinorField out;
  out.grid = std::move(grid);
  const SpectralGrid& g = *out.grid;
  std::mt19937_64 rng(seed);
  out.u = detail::from_modes(g, random_band_limited_modes(g, cutoff, rng));
  out.v = detail::from_modes(g, random_band_limited_modes(g, cutoff, rng));
  return out;
}

ScalarField random_band_limited_scalar(GridPtr grid, double cutoff, std::uint64_t seed) {
  SpinorField complex_field = random_band_limited_data(std::move(grid), cutoff, seed);
  ScalarField out;
  out.grid = complex_field.grid;
  out.values.resize(complex_field.u.size());
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = complex_field.u[i].real();
  return out;
}

void normalize_l2(SpinorField& psi, double l2_norm) {
  const double current = lp_norm(psi, 2.0);
  if (!(current > 0.0)) throw std::invalid_argument("cannot normalize the zero field");
  scale_in_place(psi, Complex{l2_norm / current, 0.0});
}

}  // namespace dhl
