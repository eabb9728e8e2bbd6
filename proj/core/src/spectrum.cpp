#include "pairlab/spectrum.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "pairlab/specfun.hpp"

namespace pairlab::spectrum {

namespace {

constexpr double kPoleTol = 1e-13;

// distance from x to the nearest non-positive integer
double dist_to_nonpositive_integer(double x) {
  if (x > 0.5) return x;
  return std::fabs(x - std::round(x));
}

}  // namespace

InteractionParams InteractionParams::from_gamma(double gamma_t) {
  InteractionParams p;
  p.gamma_t = gamma_t;
  p.a_t = gamma_t == 0.0 ? std::numeric_limits<double>::infinity()
                         : -1.0 / gamma_t;
  return p;
}

InteractionParams InteractionParams::from_scattering_length(double a_t) {
  if (a_t == 0.0)
    throw DomainError("InteractionParams: a_t = 0 means infinite coupling");
  InteractionParams p;
  p.a_t = a_t;
  p.gamma_t = -1.0 / a_t;
  return p;
}

InteractionParams InteractionParams::from_a3d_ratio(double a3d_ratio) {
  InteractionParams p = from_gamma(gamma_from_a3d(a3d_ratio));
  p.a3d_ratio = a3d_ratio;
  return p;
}

double gamma_of_energy(double eps_r) {
  const double num_arg = 0.75 - eps_r / 2.0;  // Gamma(3/4 - eps/2)
  const double den_arg = 0.25 - eps_r / 2.0;  // Gamma(1/4 - eps/2)
  if (dist_to_nonpositive_integer(num_arg) < kPoleTol) {
    char buf[96];
    std::snprintf(buf, sizeof buf,
                  "gamma_of_energy: coupling diverges at eps_r = %.17g",
                  eps_r);
    throw DivergenceError(buf);
  }
  if (dist_to_nonpositive_integer(den_arg) < kPoleTol) return 0.0;
  const auto n = specfun::log_gamma(num_arg);
  const auto d = specfun::log_gamma(den_arg);
  return -std::sqrt(2.0) * n.sign * d.sign * std::exp(n.log_abs - d.log_abs);
}

namespace {

SpectralPoint make_point(int branch, double gamma_t, double eps) {
  return {branch, gamma_t, eps, eps - 0.5};
}

// Bisection of f(eps) = gamma_of_energy(eps) - gamma on [lo, hi] where the
// bracket already holds; gamma_of_energy is strictly increasing in eps
// inside a branch.
double bisect_eps(double gamma_t, double lo, double hi) {
  double flo = gamma_of_energy(lo) - gamma_t;
  double fhi = gamma_of_energy(hi) - gamma_t;
  if (!(flo <= 0.0 && fhi >= 0.0)) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "energy_of_gamma: bracketing failed on [%.6g, %.6g], "
                  "residuals (%.3e, %.3e)",
                  lo, hi, flo, fhi);
    throw BracketingError(buf);
  }
  for (int it = 0; it < 200 && hi - lo > 1e-15 * (1.0 + std::fabs(lo));
       ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = gamma_of_energy(mid) - gamma_t;
    if (fm <= 0.0) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }
  // secant polish inside the final bracket
  double eps = (flo != fhi) ? lo - flo * (hi - lo) / (fhi - flo)
                            : 0.5 * (lo + hi);
  if (!(eps > lo && eps < hi)) eps = 0.5 * (lo + hi);
  return eps;
}

// Branch 0 in the log variable u = ln(3/2 - eps); gamma is monotone
// decreasing in u, which keeps the deep-attractive tail well conditioned.
double solve_branch0(double gamma_t) {
  auto eps_of_u = [](double u) { return 1.5 - std::exp(u); };
  double u_lo = std::log(1e-11);  // eps near 3/2 (strong repulsion)
  const double eps_floor = -(gamma_t * gamma_t) - 10.0;
  double u_hi = std::log(1.5 - eps_floor);
  double flo = gamma_of_energy(eps_of_u(u_lo)) - gamma_t;  // > 0 side
  double fhi = gamma_of_energy(eps_of_u(u_hi)) - gamma_t;  // < 0 side
  if (!(flo >= 0.0 && fhi <= 0.0)) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "energy_of_gamma: branch-0 bracketing failed for gamma "
                  "= %.6g (residuals %.3e, %.3e)",
                  gamma_t, flo, fhi);
    throw BracketingError(buf);
  }
  for (int it = 0; it < 200 && u_hi - u_lo > 1e-14; ++it) {
    const double mid = 0.5 * (u_lo + u_hi);
    const double fm = gamma_of_energy(eps_of_u(mid)) - gamma_t;
    if (fm >= 0.0)
      u_lo = mid;
    else
      u_hi = mid;
  }
  return eps_of_u(0.5 * (u_lo + u_hi));
}

}  // namespace

SpectralPoint energy_of_gamma(double gamma_t, int branch) {
  if (branch < 0) throw DomainError("energy_of_gamma: branch must be >= 0");
  if (!std::isfinite(gamma_t))
    throw DomainError("energy_of_gamma: gamma must be finite");
  if (gamma_t == 0.0) return make_point(branch, 0.0, 0.5 + 2.0 * branch);

  if (branch == 0) return make_point(0, gamma_t, solve_branch0(gamma_t));

  const double lo = 1.5 + 2.0 * (branch - 1) + 1e-9;
  const double hi = 1.5 + 2.0 * branch - 1e-9;
  return make_point(branch, gamma_t, bisect_eps(gamma_t, lo, hi));
}

double gamma_from_a3d(double a3d_ratio) {
  const double denom = 1.0 - kAbsZetaHalf * a3d_ratio;
  if (std::fabs(denom) < 1e-9) {
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "gamma_from_a3d: confinement-induced resonance at "
                  "a3d_ratio = %.9g (singular at %.9g)",
                  a3d_ratio, 1.0 / kAbsZetaHalf);
    throw DivergenceError(buf);
  }
  return 2.0 * a3d_ratio / denom;
}

}  // namespace pairlab::spectrum
