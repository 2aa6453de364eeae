#pragma once

#include <array>
#include <cstdint>

#include "dhl/dirac.hpp"

namespace dhl {

/// psi0 = A exp(-|x - x0|^2 / w^2) * (c1, c2).
SpinorField gaussian_data(GridPtr grid, double amplitude, double width,
                          std::array<double, 2> center = {0.0, 0.0},
                          std::array<Complex, 2> spinor = {Complex{1.0}, Complex{0.0}});

/// Gaussian multiplied by the plane wave e^{i x . xi0}.
SpinorField modulated_gaussian_data(GridPtr grid, double amplitude, double width,
                                    std::array<double, 2> xi0,
                                    std::array<double, 2> center = {0.0, 0.0},
                                    std::array<Complex, 2> spinor = {Complex{1.0}, Complex{0.0}});

/// Plane wave e^{i x . xi0} projected onto the +/- lambda eigenspace of
/// D(xi0), scaled to the requested L^2 norm. xi0 is given by integer mode
/// numbers so it lies exactly on the lattice.
SpinorField eigen_plane_wave_data(GridPtr grid, std::array<int, 2> mode, int branch,
                                  double l2_norm, const DiracParams& params);

/// Random field with unit-variance Gaussian coefficients on |xi| <= cutoff,
/// zero outside; deterministic in the seed.
SpinorField random_band_limited_data(GridPtr grid, double cutoff, std::uint64_t seed);
ScalarField random_band_limited_scalar(GridPtr grid, double cutoff, std::uint64_t seed);

/// Rescale so that ||psi||_{L^2} equals the requested value.
void normalize_l2(SpinorField& psi, double l2_norm);

}  // namespace dhl
