#pragma once

#include "dhl/spectral.hpp"

namespace dhl {

/// Free Dirac operator parameters. Mass must be strictly positive; the
/// massless case is rejected at construction.
struct DiracParams {
  explicit DiracParams(double mass);
  double mass;
};

/// The 2x2 Hermitian symbol D(xi) = alpha1*xi1 + alpha2*xi2 + m*gamma0 with
///   alpha1 = [[0, i], [-i, 0]],  alpha2 = [[0, 1], [1, 0]],
///   gamma0 = diag(1, -1),
/// i.e. D(xi) = [[m, i*xi1 + xi2], [-i*xi1 + xi2, -m]].
/// Satisfies D(xi)^2 = lambda^2 * I with lambda = sqrt(m^2 + |xi|^2).
struct DiracSymbol {
  Complex d00, d01, d10, d11;
  double lambda;
};

DiracSymbol dirac_symbol(double xi1, double xi2, double mass);

/// Spectral application of D_m = -i alpha^j d_j + m gamma0.
SpinorField apply_dirac(const SpinorField& field, const DiracParams& params);

/// Exact free flow e^{-i t D_m}, per mode
///   e^{-i t D(xi)} = cos(t*lambda) I - i sin(t*lambda)/lambda * D(xi).
/// Unitary per mode up to roundoff; any real t.
SpinorField propagator_step(const SpinorField& field, double t, const DiracParams& params);

/// Indefinite kinetic form Re <D_m psi, psi>; the imaginary residue of the
/// quadrature (self-adjointness roundoff) is discarded.
double kinetic_form(const SpinorField& field, const DiracParams& params);

/// || (1+|xi|^2)^{s/2} psi_hat || in the Plancherel-normalized l^2 sense;
/// any real s.
double sobolev_norm(const SpinorField& field, double s);

}  // namespace dhl
