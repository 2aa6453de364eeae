#pragma once

#include "dhl/spectral.hpp"

namespace dhl {

/// Parameters of the Hartree-type self-interaction
///   coupling_sign * ((b - Lap)^{-1} rho) gamma0 psi,
/// where rho is |psi|^2 (Modulus) or <gamma0 psi, psi> (Gamma0).
/// `enabled = false` switches the nonlinearity off for linear runs.
struct HartreeParams {
  double b = 1.0;
  DensityForm density_form = DensityForm::Gamma0;
  int coupling_sign = -1;
  bool enabled = true;
};

void validate(const HartreeParams& params);  // b > 0, sign in {-1, +1}

/// Spectral multiplication by (b + |xi|^2)^sigma; sigma = -1 realizes
/// (b - Lap)^{-1}. Rejects b <= 0.
ScalarField bessel_multiply(const ScalarField& field, double sigma, double b);
SpinorField bessel_multiply(const SpinorField& field, double sigma, double b);

/// V = (b - Lap)^{-1} density(psi); real by construction (the imaginary
/// roundoff residue is discarded).
ScalarField hartree_potential(const SpinorField& psi, const HartreeParams& params);

/// coupling_sign * V .* (gamma0 psi), components (V u, -V v) times the sign.
/// Returns the zero field when the coupling is disabled.
SpinorField nonlinear_term(const SpinorField& psi, const HartreeParams& params);

/// Periodized kernel of (1 - Lap)^{sigma}: inverse transform of
/// (1 + |xi|^2)^sigma, centered so values[index(i1,i2)] sits at
/// x = (coord(i1), coord(i2)). Requires sigma < 0.
ScalarField bessel_kernel_samples(GridPtr grid, double sigma);

struct KernelLpReport {
  double epsilon;
  double p;       // (2 + 2 eps) / (1 + 3 eps)
  double lhs;     // ||G||_{L^p}^p by quadrature, origin cell excluded
  double rhs;     // 2^eps / eps
  double ratio;   // lhs / rhs
};

/// Evaluates ||G||_{L^p}^p for the (1 - Lap)^{-1/2} kernel on the given
/// grid against the reference envelope scale 2^eps/eps. Requires
/// epsilon in (0, 1).
KernelLpReport kernel_lp_bound_check(GridPtr grid, double epsilon);

}  // namespace dhl
