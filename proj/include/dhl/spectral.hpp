#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <vector>

namespace dhl {

using Complex = std::complex<double>;

/// Square periodic box [-L/2, L/2)^2 sampled on an n x n lattice together
/// with the discrete frequency lattice xi_k = 2*pi*k/L, k = -n/2 .. n/2-1
/// (stored in FFT order). n must be a power of two, n >= 8, so that
/// dx = L/n is exact in binary floating point and dx*n == L.
class SpectralGrid {
public:
  SpectralGrid(std::size_t n, double box_length);

  std::size_t n() const { return n_; }
  std::size_t num_points() const { return n_ * n_; }
  double box_length() const { return length_; }
  double spacing() const { return dx_; }
  double cell_area() const { return dx_ * dx_; }

  /// Physical coordinate of sample i along one axis; coord(n/2) == 0.
  double coord(std::size_t i) const { return -0.5 * length_ + dx_ * static_cast<double>(i); }
  /// Frequency of storage index k along one axis (FFT order).
  double freq(std::size_t k) const { return freq_[k]; }
  /// |xi|^2 at storage index (k1, k2).
  double freq_sq(std::size_t k1, std::size_t k2) const {
    return freq_[k1] * freq_[k1] + freq_[k2] * freq_[k2];
  }
  /// Largest axis frequency magnitude, pi*n/L (the Nyquist mode).
  double max_freq() const;

  std::size_t index(std::size_t i1, std::size_t i2) const { return i1 * n_ + i2; }

private:
  std::size_t n_;
  double length_;
  double dx_;
  std::vector<double> freq_;
};

using GridPtr = std::shared_ptr<const SpectralGrid>;

GridPtr make_grid(std::size_t n, double box_length);

/// Two-component complex field on a grid; row-major n x n per component.
struct SpinorField {
  GridPtr grid;
  std::vector<Complex> u;
  std::vector<Complex> v;
};

SpinorField make_spinor(GridPtr grid);

/// Real scalar field (densities, potentials, kernels).
struct ScalarField {
  GridPtr grid;
  std::vector<double> values;
};

ScalarField make_scalar(GridPtr grid);

/// Spectral coefficients of a spinor, convention
///   psi_hat(xi) = sum_x psi(x) e^{-i x.xi} dx^2,
/// stored in FFT order on the frequency lattice.
struct SpinorSpectrum {
  GridPtr grid;
  std::vector<Complex> u;
  std::vector<Complex> v;
};

SpinorSpectrum forward_transform(const SpinorField& field);
SpinorField inverse_transform(const SpinorSpectrum& coeffs);

enum class DensityForm { Modulus, Gamma0 };

/// Pointwise density: |u|^2 + |v|^2 (Modulus) or |u|^2 - |v|^2 (Gamma0).
ScalarField density(const SpinorField& field, DensityForm form);

/// Quadrature L^p norm, p in [1, inf]; pointwise magnitude is the C^2
/// Euclidean norm for spinors. Throws std::invalid_argument for p < 1.
double lp_norm(const SpinorField& field, double p);
double lp_norm(const ScalarField& field, double p);

/// sum_x <f(x), g(x)>_{C^2} dx^2, linear in f, conjugate-linear in g.
Complex inner_product(const SpinorField& f, const SpinorField& g);

bool is_finite(const SpinorField& field);

// small field algebra helpers
SpinorField operator+(const SpinorField& a, const SpinorField& b);
SpinorField operator-(const SpinorField& a, const SpinorField& b);
SpinorField operator*(Complex c, const SpinorField& a);
SpinorField operator*(double c, const SpinorField& a);
void scale_in_place(SpinorField& a, Complex c);
void axpy_in_place(SpinorField& y, Complex a, const SpinorField& x);  // y += a*x
double l2_distance(const SpinorField& a, const SpinorField& b);

namespace detail {

/// Unnormalized in-place 2D complex DFT, sign = -1 forward / +1 backward.
/// Cached FFTW plans per grid size; execution is thread-safe on distinct
/// buffers, planning is serialized internally.
void fft2(std::size_t n, Complex* data, int sign);

/// Raw spectrum without the continuum normalization or centering phase;
/// sufficient for multiplier application (the factors cancel on the
/// round trip).
std::vector<Complex> to_modes(const SpectralGrid& grid, const std::vector<Complex>& values);
std::vector<Complex> to_modes_real(const SpectralGrid& grid, const std::vector<double>& values);
std::vector<Complex> from_modes(const SpectralGrid& grid, std::vector<Complex> modes);
std::vector<double> from_modes_real(const SpectralGrid& grid, std::vector<Complex> modes);

/// Multiply (-1)^(k1+k2); converts between origin-at-index-0 and centered
/// coordinates in either direction.
void checkerboard(const SpectralGrid& grid, std::vector<Complex>& modes);

}  // namespace detail

}  // namespace dhl
