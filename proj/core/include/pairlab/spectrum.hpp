#pragma once

#include <optional>

#include "pairlab/common.hpp"

namespace pairlab::spectrum {

/// |zeta(1/2)|, the only Riemann-zeta value the conversions need.
inline constexpr double kAbsZetaHalf = 1.4603545088095868;

/// Dimensionless interaction parameters. gamma_t * a_t = -1 whenever both
/// are finite and nonzero; a3d_ratio = a_3D / l_perp when known.
struct InteractionParams {
  double gamma_t = 0.0;
  double a_t = 0.0;  // +-inf at gamma_t = 0
  std::optional<double> a3d_ratio;

  static InteractionParams from_gamma(double gamma_t);
  static InteractionParams from_scattering_length(double a_t);
  static InteractionParams from_a3d_ratio(double a3d_ratio);
};

/// One point of the relative-energy spectrum.
struct SpectralPoint {
  int branch = 0;       // ground = 0
  double gamma_t = 0.0;
  double eps_r = 0.0;   // E_r / (hbar omega)
  double lambda_t = 0.0;  // eps_r - 1/2
};

/// gamma_t as a function of the relative energy:
///   gamma_t = -sqrt(2) Gamma(3/4 - eps/2) / Gamma(1/4 - eps/2).
/// Returns exactly 0 at the non-interacting energies eps = 1/2 + 2k
/// (denominator poles); throws DivergenceError at eps = 3/2 + 2k
/// (numerator poles, infinite repulsion).
double gamma_of_energy(double eps_r);

/// Inverse of gamma_of_energy on one spectral branch. Branch n >= 1 lives
/// in the open interval eps in (3/2 + 2(n-1), 3/2 + 2n); branch 0 covers
/// eps in (-inf, 3/2). Bracketed bisection with a secant polish; the
/// residual |gamma(eps) - gamma| is driven to ~1e-12 relative.
SpectralPoint energy_of_gamma(double gamma_t, int branch);

/// Dimensionless form of the CIR conversion,
///   gamma_t = 2 r / (1 - |zeta(1/2)| r),   r = a_3D / l_perp,
/// with lengths measured in the transverse confinement length. Throws at
/// the confinement-induced resonance r = 1/|zeta(1/2)|.
double gamma_from_a3d(double a3d_ratio);

}  // namespace pairlab::spectrum
