#pragma once

namespace dhl::baselines {

// Regression baselines for the verifier sweeps, recorded on the reference
// grids and seeds wired into run_verify_suite. A check passes when its
// measured maximum ratio stays within baseline * kSlack.
inline constexpr double kSlack = 1.25;

// Bernstein block ratios, shells j = 1..j_max on n=512, L=8*pi,
// (q, r) in {(1,2), (2,inf), (1,inf)}.
inline constexpr double kBernstein12 = 0.02654;
inline constexpr double kBernstein2Inf = 0.05002;
inline constexpr double kBernstein1Inf = 0.001329;

// (b - Lap)^{sigma/2} block ratios over the same shells, sigma in
// {-2, -1, 0.5, 1}, p in {2, inf}, b from the configured grid.
inline constexpr double kDyadicMultiplier = 1.2674;

// Pointwise-product Besov bound over the randomized family (seeded).
inline constexpr double kProductEstimate = 1.1397;

// Brezis-Gallouet scale sweep, n=512, L=16*pi, lambda = 2^0..2^8.
inline constexpr double kBrezisGallouet = 0.37088;

// (1 - Lap)^{-1/2} kernel two-regime envelope constant, n=1024, L=32*pi,
// annulus 0.1 <= |x| <= 8.
inline constexpr double kKernelEnvelope = 0.14446;

// ||G||_{L^p}^p / (2^eps / eps) over the eps grid on the same kernel grid.
inline constexpr double kKernelLp = 0.21703;

// Smoothed-density bound ratios over unit-mass Gaussian widths and eps grid.
inline constexpr double kPotentialTerm = 0.10013;

}  // namespace dhl::baselines
