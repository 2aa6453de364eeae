#include "dhl/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace dhl {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void require_same_grid(const SpinorField& a, const SpinorField& b) {
  if (a.grid != b.grid &&
      (a.grid == nullptr || b.grid == nullptr || a.grid->n() != b.grid->n() ||
       a.grid->box_length() != b.grid->box_length()))
    throw std::invalid_argument("fields live on different grids");
}

double pointwise_p_sum(const std::vector<double>& mag2, double p) {
  double sum = 0.0;
  if (p == 2.0) {
    for (double m2 : mag2) sum += m2;
  } else if (p == 1.0) {
    for (double m2 : mag2) sum += std::sqrt(m2);
  } else {
    for (double m2 : mag2) sum += std::pow(m2, 0.5 * p);
  }
  return sum;
}

double lp_from_mag2(const SpectralGrid& grid, const std::vector<double>& mag2, double p) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (double m2 : mag2) m = std::max(m, m2);
    return std::sqrt(m);
  }
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm requires p >= 1");
  return std::pow(pointwise_p_sum(mag2, p) * grid.cell_area(), 1.0 / p);
}

}  // namespace

SpectralGrid::SpectralGrid(std::size_t n, double box_length) : n_(n), length_(box_length) {
  if (!is_power_of_two(n) || n < 8)
    throw std::invalid_argument("grid size must be a power of two, n >= 8");
  if (!(box_length > 0.0) || !std::isfinite(box_length))
    throw std::invalid_argument("box length must be positive and finite");
  dx_ = length_ / static_cast<double>(n_);
  freq_.resize(n_);
  const double base = 2.0 * std::numbers::pi / length_;
  for (std::size_t k = 0; k < n_; ++k) {
    const auto signed_k =
        (k < n_ / 2) ? static_cast<long>(k) : static_cast<long>(k) - static_cast<long>(n_);
    freq_[k] = base * static_cast<double>(signed_k);
  }
}

double SpectralGrid::max_freq() const {
  return std::numbers::pi * static_cast<double>(n_) / length_;
}

GridPtr make_grid(std::size_t n, double box_length) {
  return std::make_shared<const SpectralGrid>(n, box_length);
}

SpinorField make_spinor(GridPtr grid) {
  SpinorField f;
  f.grid = std::move(grid);
  f.u.assign(f.grid->num_points(), Complex{});
  f.v.assign(f.grid->num_points(), Complex{});
  return f;
}

ScalarField make_scalar(GridPtr grid) {
  ScalarField f;
  f.grid = std::move(grid);
  f.values.assign(f.grid->num_points(), 0.0);
  return f;
}

namespace detail {

void checkerboard(const SpectralGrid& grid, std::vector<Complex>& modes) {
  const std::size_t n = grid.n();
  for (std::size_t k1 = 0; k1 < n; ++k1)
    for (std::size_t k2 = 0; k2 < n; ++k2)
      if ((k1 + k2) & 1u) modes[grid.index(k1, k2)] = -modes[grid.index(k1, k2)];
}

std::vector<Complex> to_modes(const SpectralGrid& grid, const std::vector<Complex>& values) {
  std::vector<Complex> modes = values;
  fft2(grid.n(), modes.data(), -1);
  return modes;
}

std::vector<Complex> to_modes_real(const SpectralGrid& grid, const std::vector<double>& values) {
  std::vector<Complex> modes(values.begin(), values.end());
  fft2(grid.n(), modes.data(), -1);
  return modes;
}

std::vector<Complex> from_modes(const SpectralGrid& grid, std::vector<Complex> modes) {
  fft2(grid.n(), modes.data(), +1);
  const double scale = 1.0 / static_cast<double>(grid.num_points());
  for (Complex& c : modes) c *= scale;
  return modes;
}

std::vector<double> from_modes_real(const SpectralGrid& grid, std::vector<Complex> modes) {
  fft2(grid.n(), modes.data(), +1);
  const double scale = 1.0 / static_cast<double>(grid.num_points());
  std::vector<double> out(modes.size());
  for (std::size_t i = 0; i < modes.size(); ++i) out[i] = modes[i].real() * scale;
  return out;
}

}  // namespace detail

SpinorSpectrum forward_transform(const SpinorField& field) {
  const SpectralGrid& grid = *field.grid;
  SpinorSpectrum out;
  out.grid = field.grid;
  out.u = detail::to_modes(grid, field.u);
  out.v = detail::to_modes(grid, field.v);
  // dx^2 Riemann weight and the centering phase e^{+i pi (k1+k2)} from
  // x being measured from the box center.
  detail::checkerboard(grid, out.u);
  detail::checkerboard(grid, out.v);
  const double w = grid.cell_area();
  for (Complex& c : out.u) c *= w;
  for (Complex& c : out.v) c *= w;
  return out;
}

SpinorField inverse_transform(const SpinorSpectrum& coeffs) {
  const SpectralGrid& grid = *coeffs.grid;
  SpinorField out;
  out.grid = coeffs.grid;
  std::vector<Complex> u = coeffs.u;
  std::vector<Complex> v = coeffs.v;
  detail::checkerboard(grid, u);
  detail::checkerboard(grid, v);
  out.u = detail::from_modes(grid, std::move(u));
  out.v = detail::from_modes(grid, std::move(v));
  // psi(x) = (1/L^2) sum_k psi_hat e^{i x.xi}; from_modes divided by n^2.
  const double adjust =
      static_cast<double>(grid.num_points()) / (grid.box_length() * grid.box_length());
  for (Complex& c : out.u) c *= adjust;
  for (Complex& c : out.v) c *= adjust;
  return out;
}

ScalarField density(const SpinorField& field, DensityForm form) {
  ScalarField rho;
  rho.grid = field.grid;
  rho.values.resize(field.grid->num_points());
  const double sign = (form == DensityForm::Gamma0) ? -1.0 : 1.0;
  for (std::size_t i = 0; i < rho.values.size(); ++i)
    rho.values[i] = std::norm(field.u[i]) + sign * std::norm(field.v[i]);
  return rho;
}

double lp_norm(const SpinorField& field, double p) {
  std::vector<double> mag2(field.u.size());
  for (std::size_t i = 0; i < mag2.size(); ++i)
    mag2[i] = std::norm(field.u[i]) + std::norm(field.v[i]);
  return lp_from_mag2(*field.grid, mag2, p);
}

double lp_norm(const ScalarField& field, double p) {
  std::vector<double> mag2(field.values.size());
  for (std::size_t i = 0; i < mag2.size(); ++i) mag2[i] = field.values[i] * field.values[i];
  return lp_from_mag2(*field.grid, mag2, p);
}

Complex inner_product(const SpinorField& f, const SpinorField& g) {
  require_same_grid(f, g);
  Complex sum{};
  for (std::size_t i = 0; i < f.u.size(); ++i)
    sum += f.u[i] * std::conj(g.u[i]) + f.v[i] * std::conj(g.v[i]);
  return sum * f.grid->cell_area();
}

bool is_finite(const SpinorField& field) {
  for (const Complex& c : field.u)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  for (const Complex& c : field.v)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  return true;
}

SpinorField operator+(const SpinorField& a, const SpinorField& b) {
  require_same_grid(a, b);
  SpinorField out = a;
  for (std::size_t i = 0; i < out.u.size(); ++i) {
    out.u[i] += b.u[i];
    out.v[i] += b.v[i];
  }
  return out;
}

SpinorField operator-(const SpinorField& a, const SpinorField& b) {
  require_same_grid(a, b);
  SpinorField out = a;
  for (std::size_t i = 0; i < out.u.size(); ++i) {
    out.u[i] -= b.u[i];
    out.v[i] -= b.v[i];
  }
  return out;
}

SpinorField operator*(Complex c, const SpinorField& a) {
  SpinorField out = a;
  scale_in_place(out, c);
  return out;
}

SpinorField operator*(double c, const SpinorField& a) { return Complex{c, 0.0} * a; }

void scale_in_place(SpinorField& a, Complex c) {
  for (Complex& x : a.u) x *= c;
  for (Complex& x : a.v) x *= c;
}

void axpy_in_place(SpinorField& y, Complex a, const SpinorField& x) {
  require_same_grid(y, x);
  for (std::size_t i = 0; i < y.u.size(); ++i) {
    y.u[i] += a * x.u[i];
    y.v[i] += a * x.v[i];
  }
}

double l2_distance(const SpinorField& a, const SpinorField& b) {
  require_same_grid(a, b);
  double sum = 0.0;
  for (std::size_t i = 0; i < a.u.size(); ++i)
    sum += std::norm(a.u[i] - b.u[i]) + std::norm(a.v[i] - b.v[i]);
  return std::sqrt(sum * a.grid->cell_area());
}

}  // namespace dhl
