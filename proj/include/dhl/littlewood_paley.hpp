#pragma once

#include <optional>
#include <vector>

#include "dhl/spectral.hpp"

namespace dhl {

/// Smooth radial dyadic profile built from the standard exp(-1/x) bump:
///   chi(r) = 1 for r <= 1, 0 for r >= 8/7, C-infinity in between;
///   rho_hat(r)  = chi(r/2) - chi(r),   supported in [1, 16/7], == 1 on [8/7, 2];
///   rho0_hat(r) = chi(r/2),            the base (low-frequency) window.
/// The telescoping construction gives the exact partition of unity
///   rho0_hat(|xi|) + sum_{j=1..J} rho_hat(2^{-j}|xi|) = 1 for |xi| <= 2^J.
class DyadicProfile {
public:
  double chi(double r) const;
  double rho_hat(double r) const { return chi(0.5 * r) - chi(r); }
  double rho0_hat(double r) const { return chi(0.5 * r); }
};

/// Largest dyadic shell index kept on a grid: floor(log2(xi_max)) - 1 with
/// xi_max = pi*n/L.
int dyadic_j_max(const SpectralGrid& grid);

template <typename Field>
struct DyadicDecomposition {
  Field base;                 // psi_(0)
  std::vector<Field> blocks;  // psi_(j), j = 1 .. j_max
  int j_max = 0;
};

DyadicDecomposition<SpinorField> decompose(const SpinorField& field, const DyadicProfile& profile);
DyadicDecomposition<ScalarField> decompose(const ScalarField& field, const DyadicProfile& profile);

/// Besov norm ||psi_(0)||_p + ( sum_{j>=1} (2^{js} ||psi_(j)||_p)^q )^{1/q},
/// with the sup convention for q = inf. p, q in [1, inf].
double besov_norm(const SpinorField& field, double s, double p, double q, const DyadicProfile& profile);
double besov_norm(const ScalarField& field, double s, double p, double q, const DyadicProfile& profile);

/// ||psi_(j)||_{L^r} / (2^{2j(1/q - 1/r)} ||psi_(j)||_{L^q}) for 1 <= q < r.
/// Empty when the block vanishes (absent data, not an error).
std::optional<double> bernstein_ratio(const SpinorField& field, int j, double q, double r,
                                      const DyadicProfile& profile);
std::optional<double> bernstein_ratio(const ScalarField& field, int j, double q, double r,
                                      const DyadicProfile& profile);

/// ||(b - Lap)^{sigma/2} psi_(j)||_{L^p} / (2^{sigma j} ||psi_(j)||_{L^p}).
std::optional<double> dyadic_multiplier_ratio(const ScalarField& field, int j, double sigma,
                                              double b, double p, const DyadicProfile& profile);

/// ||phi.psi||_{B^s_{1,inf}} / (||phi||_{B^s_{2,2}} ||psi||_{B^s_{2,2}})
/// for the pointwise product. Rejects zero inputs.
double product_estimate_ratio(const ScalarField& phi, const ScalarField& psi, double s,
                              const DyadicProfile& profile);

struct BrezisGallouetReport {
  double lhs_inf;  // ||(b-Lap)^{-1} f||_{L^inf}
  double lhs_2s;   // ||(b-Lap)^{-1} (1-Lap)^{s/2} f||_{L^{2/s}}
  double rhs;      // ||f||_{L^1} log(2 + ||f||_{B^s_{1,inf}} / ||f||_{L^1})
  double ratio;    // (lhs_inf + lhs_2s) / rhs
};

/// Both sides of the log-endpoint inequality, constant-free. Requires
/// nonzero f, b > 0 and s in (0, 1] so 2/s is a valid exponent.
BrezisGallouetReport brezis_gallouet_ratio(const ScalarField& f, double b, double s,
                                           const DyadicProfile& profile);

}  // namespace dhl
