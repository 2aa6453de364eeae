#include "dhl/littlewood_paley.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "dhl/hartree.hpp"

namespace dhl {

namespace {

// h(x) = exp(-1/x) for x > 0, else 0; the classical smooth step ingredient.
double bump_h(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }

std::vector<double> window_values(const SpectralGrid& grid, const DyadicProfile& profile,
                                  int j /* 0 = base */) {
  const std::size_t n = grid.n();
  std::vector<double> w(grid.num_points());
  const double inv_scale = (j == 0) ? 1.0 : std::pow(2.0, -j);
  for (std::size_t k1 = 0; k1 < n; ++k1)
    for (std::size_t k2 = 0; k2 < n; ++k2) {
      const double r = std::sqrt(grid.freq_sq(k1, k2)) * inv_scale;
      w[grid.index(k1, k2)] = (j == 0) ? profile.rho0_hat(r) : profile.rho_hat(r);
    }
  return w;
}

SpinorField windowed(const SpinorField& field, const std::vector<double>& w) {
  const SpectralGrid& grid = *field.grid;
  std::vector<Complex> uh = detail::to_modes(grid, field.u);
  std::vector<Complex> vh = detail::to_modes(grid, field.v);
  for (std::size_t i = 0; i < w.size(); ++i) {
    uh[i] *= w[i];
    vh[i] *= w[i];
  }
  SpinorField out;
  out.grid = field.grid;
  out.u = detail::from_modes(grid, std::move(uh));
  out.v = detail::from_modes(grid, std::move(vh));
  return out;
}

ScalarField windowed(const ScalarField& field, const std::vector<double>& w) {
  const SpectralGrid& grid = *field.grid;
  std::vector<Complex> modes = detail::to_modes_real(grid, field.values);
  for (std::size_t i = 0; i < w.size(); ++i) modes[i] *= w[i];
  ScalarField out;
  out.grid = field.grid;
  // radial real window keeps a real field real
  out.values = detail::from_modes_real(grid, std::move(modes));
  return out;
}

template <typename Field>
DyadicDecomposition<Field> decompose_impl(const Field& field, const DyadicProfile& profile) {
  DyadicDecomposition<Field> out;
  out.j_max = dyadic_j_max(*field.grid);
  out.base = windowed(field, window_values(*field.grid, profile, 0));
  out.blocks.reserve(static_cast<std::size_t>(out.j_max));
  for (int j = 1; j <= out.j_max; ++j)
    out.blocks.push_back(windowed(field, window_values(*field.grid, profile, j)));
  return out;
}

void require_exponent(double p) {
  if (!(p >= 1.0) && !std::isinf(p)) throw std::invalid_argument("Lebesgue exponent must be >= 1");
}

template <typename Field>
double besov_impl(const Field& field, double s, double p, double q, const DyadicProfile& profile) {
  require_exponent(p);
  require_exponent(q);
  const auto dec = decompose_impl(field, profile);
  double out = lp_norm(dec.base, p);
  if (std::isinf(q)) {
    double sup = 0.0;
    for (int j = 1; j <= dec.j_max; ++j)
      sup = std::max(sup, std::pow(2.0, j * s) * lp_norm(dec.blocks[j - 1], p));
    return out + sup;
  }
  double sum = 0.0;
  for (int j = 1; j <= dec.j_max; ++j)
    sum += std::pow(std::pow(2.0, j * s) * lp_norm(dec.blocks[j - 1], p), q);
  return out + std::pow(sum, 1.0 / q);
}

template <typename Field>
std::optional<double> bernstein_impl(const Field& field, int j, double q, double r,
                                     const DyadicProfile& profile) {
  if (!(q >= 1.0) || !(q < r)) throw std::invalid_argument("bernstein_ratio requires 1 <= q < r");
  if (j < 1 || j > dyadic_j_max(*field.grid))
    throw std::invalid_argument("dyadic shell index out of range");
  const Field block = windowed(field, window_values(*field.grid, profile, j));
  const double den_norm = lp_norm(block, q);
  if (den_norm == 0.0) return std::nullopt;
  const double inv_r = std::isinf(r) ? 0.0 : 1.0 / r;
  const double gain = std::pow(2.0, 2.0 * j * (1.0 / q - inv_r));
  return lp_norm(block, r) / (gain * den_norm);
}

}  // namespace

double DyadicProfile::chi(double r) const {
  if (r <= 1.0) return 1.0;
  if (r >= 8.0 / 7.0) return 0.0;
  const double a = bump_h((8.0 / 7.0 - r) * 7.0);
  const double b = bump_h((r - 1.0) * 7.0);
  return a / (a + b);
}

int dyadic_j_max(const SpectralGrid& grid) {
  return static_cast<int>(std::floor(std::log2(grid.max_freq()))) - 1;
}

DyadicDecomposition<SpinorField> decompose(const SpinorField& field, const DyadicProfile& profile) {
  return decompose_impl(field, profile);
}

DyadicDecomposition<ScalarField> decompose(const ScalarField& field, const DyadicProfile& profile) {
  return decompose_impl(field, profile);
}

double besov_norm(const SpinorField& field, double s, double p, double q,
                  const DyadicProfile& profile) {
  return besov_impl(field, s, p, q, profile);
}

double besov_norm(const ScalarField& field, double s, double p, double q,
                  const DyadicProfile& profile) {
  return besov_impl(field, s, p, q, profile);
}

std::optional<double> bernstein_ratio(const SpinorField& field, int j, double q, double r,
                                      const DyadicProfile& profile) {
  return bernstein_impl(field, j, q, r, profile);
}

std::optional<double> bernstein_ratio(const ScalarField& field, int j, double q, double r,
                                      const DyadicProfile& profile) {
  return bernstein_impl(field, j, q, r, profile);
}

std::optional<double> dyadic_multiplier_ratio(const ScalarField& field, int j, double sigma,
                                              double b, double p, const DyadicProfile& profile) {
  if (j < 1 || j > dyadic_j_max(*field.grid))
    throw std::invalid_argument("dyadic shell index out of range");
  const ScalarField block = windowed(field, window_values(*field.grid, profile, j));
  const double den_norm = lp_norm(block, p);
  if (den_norm == 0.0) return std::nullopt;
  const ScalarField mult = bessel_multiply(block, 0.5 * sigma, b);
  return lp_norm(mult, p) / (std::pow(2.0, sigma * j) * den_norm);
}

double product_estimate_ratio(const ScalarField& phi, const ScalarField& psi, double s,
                              const DyadicProfile& profile) {
  ScalarField prod;
  prod.grid = phi.grid;
  prod.values.resize(phi.values.size());
  for (std::size_t i = 0; i < prod.values.size(); ++i)
    prod.values[i] = phi.values[i] * psi.values[i];
  const double den = besov_norm(phi, s, 2.0, 2.0, profile) * besov_norm(psi, s, 2.0, 2.0, profile);
  if (den == 0.0) throw std::invalid_argument("product estimate requires nonzero inputs");
  return besov_norm(prod, s, 1.0, std::numeric_limits<double>::infinity(), profile) / den;
}

BrezisGallouetReport brezis_gallouet_ratio(const ScalarField& f, double b, double s,
                                           const DyadicProfile& profile) {
  if (!(b > 0.0)) throw std::invalid_argument("b must be positive");
  if (!(s > 0.0 && s <= 1.0)) throw std::invalid_argument("s must lie in (0, 1]");
  const double l1 = lp_norm(f, 1.0);
  if (l1 == 0.0) throw std::invalid_argument("zero input");
  BrezisGallouetReport rep;
  const ScalarField smoothed = bessel_multiply(f, -1.0, b);
  rep.lhs_inf = lp_norm(smoothed, std::numeric_limits<double>::infinity());
  const ScalarField shifted = bessel_multiply(bessel_multiply(f, 0.5 * s, 1.0), -1.0, b);
  rep.lhs_2s = lp_norm(shifted, 2.0 / s);
  const double besov =
      besov_norm(f, s, 1.0, std::numeric_limits<double>::infinity(), profile);
  rep.rhs = l1 * std::log(2.0 + besov / l1);
  rep.ratio = (rep.lhs_inf + rep.lhs_2s) / rep.rhs;
  return rep;
}

}  // namespace dhl
