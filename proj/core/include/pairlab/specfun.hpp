#pragma once

#include <vector>

#include "pairlab/common.hpp"

namespace pairlab::specfun {

/// Euler Gamma function. Relative error <= 1e-12 for |x| <= 50.
/// Throws PoleError at non-positive integers.
double gamma_fn(double x);

/// log|Gamma(x)| together with the sign of Gamma(x).
/// Valid for any non-pole real x; the log stays representable far beyond
/// the overflow range of gamma_fn itself.
struct LogGamma {
  double log_abs;
  int sign;  // +1 or -1
};
LogGamma log_gamma(double x);

/// Digamma function Psi(x). Absolute error <= 1e-10 for |x| <= 50.
/// Throws PoleError at non-positive integers.
double digamma_fn(double x);

/// Physicists' Hermite polynomial H_n(x) by three-term recurrence.
double hermite(int n, double x);

/// Normalized 1D oscillator eigenfunction
///   phi_n(x) = pi^{-1/4} (2^n n!)^{-1/2} H_n(x) e^{-x^2/2}
/// in natural units (m = omega = hbar = 1). The normalized two-term
/// recurrence keeps every intermediate bounded, so n of several hundred
/// is fine.
double osc_eigenfunction(int n, double x);

/// phi_0(x) .. phi_{n_max}(x) in one recurrence pass.
std::vector<double> osc_eigenfunction_range(int n_max, double x);

/// Evaluation route for the parabolic cylinder function.
enum class DMethod {
  automatic,     // integral representation (nu < 0) / Kummer / asymptotic
  kummer,        // force the two-Kummer-series representation
  hermite_even,  // even Hermite D_{2n} series (cross-check path)
  hermite_odd,   // odd Hermite D_{2n+1} series (cross-check path)
};

/// Parabolic cylinder function D_nu(x) for real order nu <= 50 and x >= 0.
///
/// The default route picks, per (nu, x), whichever of the three
/// representations meets ~1e-12 relative accuracy:
///  - nu < -0.25: the Laplace-type integral
///      D_nu(x) = e^{-x^2/4}/Gamma(-nu) * int_0^inf t^{-nu-1} e^{-t^2/2-xt} dt,
///    positive integrand, no cancellation anywhere in the attractive regime;
///  - otherwise the two-Kummer-series form while its cancellation estimate
///    stays small (long-double accumulation), terminating exactly for
///    integer nu;
///  - the large-x asymptotic series beyond that.
/// The hermite_even / hermite_odd routes sum the slowly convergent
/// Hermite-series expansions directly (with tail averaging) and exist as
/// independent cross-checks only; expect ~1e-5 accuracy from them.
double parabolic_d(double nu, double x, DMethod method = DMethod::automatic);

/// Parameters shared by the Kummer series paths.
inline constexpr int kKummerTermCap = 2000;
inline constexpr double kKummerRelTol = 1e-12;

}  // namespace pairlab::specfun
