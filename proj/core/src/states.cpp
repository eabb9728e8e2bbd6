#include "pairlab/states.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "pairlab/specfun.hpp"

namespace pairlab::states {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kSqrt2 = 1.4142135623730950488;
constexpr double kLambdaSnap = 1e-12;  // exact-limit window around 0 and 1

bool at_zero(double lambda_t) { return std::fabs(lambda_t) < kLambdaSnap; }
bool at_one(double lambda_t) { return std::fabs(lambda_t - 1.0) < kLambdaSnap; }

double lfact(int n) { return std::lgamma(n + 1.0); }

// Gamma(-lambda) / (Psi((1-lambda)/2) - Psi(-lambda/2)); both factors blow
// up together at lambda = 0 and 1 where the ratio tends to 1/2.
double norm_ratio(double lambda_t) {
  if (at_zero(lambda_t) || at_one(lambda_t)) return 0.5;
  const double dpsi = specfun::digamma_fn((1.0 - lambda_t) / 2.0) -
                      specfun::digamma_fn(-lambda_t / 2.0);
  const auto lg = specfun::log_gamma(-lambda_t);
  const double ratio = lg.sign * std::exp(lg.log_abs) / dpsi;
  if (!(ratio > 0.0)) {
    char buf[120];
    std::snprintf(buf, sizeof buf,
                  "states: normalization ratio not positive at lambda_t = "
                  "%.9g (off-branch energy?)",
                  lambda_t);
    throw DomainError(buf);
  }
  return ratio;
}

// Common prefactor of Eq.-(19): lambda 2^{(lambda+1)/2} / Gamma(1 -
// lambda/2) * sqrt(norm_ratio).
double bosonic_prefactor(double lambda_t) {
  return lambda_t * std::exp2((lambda_t + 1.0) / 2.0) /
         specfun::gamma_fn(1.0 - lambda_t / 2.0) *
         std::sqrt(norm_ratio(lambda_t));
}

// Common prefactor of Eq.-(21): 2^{lambda/2+1} / Gamma((1-lambda)/2) *
// sqrt(norm_ratio).
double fermionic_prefactor(double lambda_t) {
  return std::exp2(lambda_t / 2.0 + 1.0) /
         specfun::gamma_fn((1.0 - lambda_t) / 2.0) *
         std::sqrt(norm_ratio(lambda_t));
}

// (2n-1)!! / (2^n n!) = (2n)! / (4^n n!^2)
double double_factorial_ratio(int n) {
  return std::exp(lfact(2 * n) - n * std::log(4.0) - 2.0 * lfact(n));
}

// (2n+1)!! / 2^n = (2n+1)! / (2^n n!) / 2^n
double cs_shell_weight(int n) {
  return std::exp(lfact(2 * n + 1) - 2.0 * n * std::log(2.0) - lfact(n));
}

int parity_sign(int m) { return (m % 2 == 0) ? 1 : -1; }

}  // namespace

double coeff_c(int n, double lambda_t) {
  if (n < 0) throw DomainError("coeff_c: n must be non-negative");
  if (lambda_t >= 1.0 && !at_one(lambda_t))
    throw DomainError("coeff_c: bosonic representation needs lambda_t < 1");
  if (at_one(lambda_t))
    throw DomainError("coeff_c: pole at lambda_t = 1");
  if (at_zero(lambda_t)) return n == 0 ? 1.0 : 0.0;
  return bosonic_prefactor(lambda_t) / (lambda_t - 2.0 * n) *
         double_factorial_ratio(n);
}

double coeff_cP(int n, int k, double lambda_t) {
  if (n < 1 || k < 0 || k > n - 1)
    throw DomainError("coeff_cP: need n >= 1 and 0 <= k <= n-1");
  if (at_zero(lambda_t)) return 0.0;
  const double c = coeff_c(n, lambda_t);
  return kSqrt2 * c * parity_sign(k + n) *
         std::exp(lfact(n) - 0.5 * (lfact(2 * n - k) + lfact(k)));
}

double coeff_cS(int n, int k, double lambda_t) {
  if (n < 0 || k < 0 || k > n)
    throw DomainError("coeff_cS: need 0 <= k <= n");
  if (lambda_t > 1.0 && !at_one(lambda_t))
    throw DomainError("coeff_cS: fermionic representation needs lambda_t <= 1");
  if (at_one(lambda_t)) return (n == 0 && k == 0) ? 1.0 : 0.0;
  return fermionic_prefactor(lambda_t) / (lambda_t - (2.0 * n + 1.0)) *
         cs_shell_weight(n) * parity_sign(n + 1 + k) *
         std::exp(-0.5 * (lfact(2 * n + 1 - k) + lfact(k)));
}

GroundStateCoefficients GroundStateCoefficients::build(double lambda_t,
                                                       TruncationOptions opts) {
  if (lambda_t > 1.0 && !at_one(lambda_t))
    throw DomainError(
        "GroundStateCoefficients: ground branch requires lambda_t <= 1");
  GroundStateCoefficients gs;
  gs.lambda_t_ = lambda_t;
  int n_max = opts.n_max;
  if (opts.auto_escalate && lambda_t > 0.95 && lambda_t < 1.0)
    n_max = std::max(n_max, 200);
  if (n_max < 1) throw DomainError("GroundStateCoefficients: n_max must be >= 1");
  gs.n_max_ = n_max;

  const bool zero = at_zero(lambda_t);
  const bool one = at_one(lambda_t);
  gs.bosonic_valid_ = !one;

  // bosonic-like arrays
  if (gs.bosonic_valid_) {
    gs.c_.assign(n_max + 1, 0.0);
    gs.cp_.assign(static_cast<std::size_t>(n_max) * (n_max + 1) / 2, 0.0);
    double sum = 0.0;
    if (zero) {
      gs.c_[0] = 1.0;
      sum = 1.0;
    } else {
      const double pref = bosonic_prefactor(lambda_t);
      std::size_t idx = 0;
      for (int n = 0; n <= n_max; ++n) {
        const double cn =
            pref / (lambda_t - 2.0 * n) * double_factorial_ratio(n);
        gs.c_[n] = cn;
        sum += cn * cn;
        const double base = kSqrt2 * cn;
        for (int k = 0; k < n; ++k, ++idx) {
          const double v = base * parity_sign(k + n) *
                           std::exp(lfact(n) - 0.5 * (lfact(2 * n - k) + lfact(k)));
          gs.cp_[idx] = v;
          sum += v * v;
        }
      }
    }
    gs.defect_bosonic_ = 1.0 - sum;
  } else {
    gs.defect_bosonic_ = std::numeric_limits<double>::quiet_NaN();
  }

  // fermionic-like arrays
  gs.cs_.assign(static_cast<std::size_t>(n_max + 1) * (n_max + 2) / 2, 0.0);
  double sum = 0.0;
  if (one) {
    gs.cs_[0] = 1.0;
    sum = 1.0;
  } else {
    const double pref = fermionic_prefactor(lambda_t);
    std::size_t idx = 0;
    for (int n = 0; n <= n_max; ++n) {
      const double base =
          pref / (lambda_t - (2.0 * n + 1.0)) * cs_shell_weight(n);
      for (int k = 0; k <= n; ++k, ++idx) {
        const double v = base * parity_sign(n + 1 + k) *
                         std::exp(-0.5 * (lfact(2 * n + 1 - k) + lfact(k)));
        gs.cs_[idx] = v;
        sum += v * v;
      }
    }
  }
  gs.defect_fermionic_ = 1.0 - sum;
  return gs;
}

double GroundStateCoefficients::c(int n) const {
  if (!bosonic_valid_)
    throw DomainError("GroundStateCoefficients: bosonic arrays unavailable at lambda_t = 1");
  if (n < 0 || n > n_max_) throw DimensionError("c(n): n out of range");
  return c_[n];
}

double GroundStateCoefficients::cP(int n, int k) const {
  if (!bosonic_valid_)
    throw DomainError("GroundStateCoefficients: bosonic arrays unavailable at lambda_t = 1");
  if (n < 1 || n > n_max_ || k < 0 || k >= n)
    throw DimensionError("cP(n,k): index out of range");
  return cp_[static_cast<std::size_t>(n) * (n - 1) / 2 + k];
}

double GroundStateCoefficients::cS(int n, int k) const {
  if (n < 0 || n > n_max_ || k < 0 || k > n)
    throw DimensionError("cS(n,k): index out of range");
  return cs_[static_cast<std::size_t>(n) * (n + 1) / 2 + k];
}

double relative_norm_factor(double lambda_t) {
  return std::pow(2.0 / kPi, 0.25) * std::sqrt(norm_ratio(lambda_t));
}

double eval_psi_relative(double x, double lambda_t) {
  return relative_norm_factor(lambda_t) *
         specfun::parabolic_d(lambda_t, std::fabs(x));
}

double eval_psi_cm(double x1, double x2, int cm_n) {
  if (cm_n < 0) throw DomainError("eval_psi_cm: cm_n must be >= 0");
  return std::pow(2.0, 0.25) *
         specfun::osc_eigenfunction(cm_n, (x1 + x2) / kSqrt2);
}

double eval_psi_exact(double x1, double x2, double lambda_t, int cm_n) {
  return eval_psi_cm(x1, x2, cm_n) * eval_psi_relative(x1 - x2, lambda_t);
}

double eval_psi_repulsive(double x1, double x2, int l_t, int cm_n) {
  if (l_t < 1 || l_t % 2 == 0)
    throw DomainError("eval_psi_repulsive: l_t must be odd and positive");
  if (cm_n < 0) throw DomainError("eval_psi_repulsive: cm_n must be >= 0");
  // Equals phi_n((x1+x2)/sqrt2) * phi_l(|x1-x2|/sqrt2); unit norm.
  return specfun::osc_eigenfunction(cm_n, (x1 + x2) / kSqrt2) *
         specfun::osc_eigenfunction(l_t, std::fabs(x1 - x2) / kSqrt2);
}

double eval_psi_attractive(double x1, double x2, double lambda_t, int cm_n) {
  if (lambda_t > -5.0)
    throw DomainError(
        "eval_psi_attractive: approximation requires lambda_t <= -5");
  const double kappa = std::sqrt(-lambda_t);
  return eval_psi_cm(x1, x2, cm_n) * std::sqrt(kappa) *
         std::exp(-kappa * std::fabs(x1 - x2));
}

double pair_size(double lambda_t, PairSizeDefinition defn) {
  (void)defn;  // rms is the only definition; Fig-4(b)'s label never pins one
  if (lambda_t >= 1.0)
    throw DomainError("pair_size: ground branch requires lambda_t < 1");
  const double scale = std::sqrt(std::max(1.0, -lambda_t));
  const double h = std::min(2e-3, 0.05 / scale);
  const double extent = std::max(12.0, 6.0 / std::sqrt(1.0 - lambda_t));
  const int n = (static_cast<int>(extent / h) + 2) & ~1;  // even interval count
  const double nf = relative_norm_factor(lambda_t);
  double m0 = 0.0, m2 = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double x = i * h;
    const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    const double d = nf * specfun::parabolic_d(lambda_t, x);
    m0 += w * d * d;
    m2 += w * x * x * d * d;
  }
  // Simpson weights (h/3), doubled for the even extension to x < 0; both
  // factors cancel in the ratio.
  return std::sqrt(m2 / m0);
}

linalg::Matrix bosonic_coefficient_matrix(const GroundStateCoefficients& gs) {
  if (!gs.bosonic_valid())
    throw DomainError("bosonic_coefficient_matrix: unavailable at lambda_t = 1");
  const int n_max = gs.n_max();
  const std::size_t dim = 2 * n_max + 1;
  linalg::Matrix m(dim, dim);
  for (int n = 0; n <= n_max; ++n) {
    m(n, n) = gs.c(n);
    for (int k = 0; k < n; ++k) {
      const double v = gs.cP(n, k) / kSqrt2;
      m(k, 2 * n - k) = v;
      m(2 * n - k, k) = v;
    }
  }
  return m;
}

linalg::Matrix fermionic_coefficient_matrix(const GroundStateCoefficients& gs) {
  const int n_max = gs.n_max();
  const std::size_t dim = 2 * n_max + 2;
  linalg::Matrix w(dim, dim);
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      const double v = gs.cS(n, k) / kSqrt2;
      w(k, 2 * n + 1 - k) = v;
      w(2 * n + 1 - k, k) = -v;
    }
  }
  return w;
}

namespace {

// psi values from a coefficient matrix: Phi^T C Phi on the grid, where
// Phi[m][i] = phi_m(x_i).
linalg::Matrix grid_sandwich(const linalg::Matrix& coef,
                             const std::vector<double>& x) {
  const std::size_t dim = coef.rows;
  const std::size_t npts = x.size();
  linalg::Matrix phi(dim, npts);
  for (std::size_t i = 0; i < npts; ++i) {
    const auto col = specfun::osc_eigenfunction_range(static_cast<int>(dim) - 1,
                                                      x[i]);
    for (std::size_t m = 0; m < dim; ++m) phi(m, i) = col[m];
  }
  // T = C * Phi  (dim x npts)
  linalg::Matrix t(dim, npts);
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      const double cab = coef(a, b);
      if (cab == 0.0) continue;
      const double* src = &phi.a[b * npts];
      double* dst = &t.a[a * npts];
      for (std::size_t i = 0; i < npts; ++i) dst[i] += cab * src[i];
    }
  }
  // psi = Phi^T * T  (npts x npts)
  linalg::Matrix psi(npts, npts);
  for (std::size_t a = 0; a < dim; ++a) {
    const double* prow = &phi.a[a * npts];
    const double* trow = &t.a[a * npts];
    for (std::size_t i = 0; i < npts; ++i) {
      const double pai = prow[i];
      if (pai == 0.0) continue;
      double* dst = &psi.a[i * npts];
      for (std::size_t j = 0; j < npts; ++j) dst[j] += pai * trow[j];
    }
  }
  return psi;
}

}  // namespace

linalg::Matrix psi_bosonic_on_grid(const GroundStateCoefficients& gs,
                                   const std::vector<double>& x) {
  return grid_sandwich(bosonic_coefficient_matrix(gs), x);
}

linalg::Matrix psi_fermionic_on_grid(const GroundStateCoefficients& gs,
                                     const std::vector<double>& x) {
  linalg::Matrix psi = grid_sandwich(fermionic_coefficient_matrix(gs), x);
  const std::size_t npts = x.size();
  for (std::size_t i = 0; i < npts; ++i)
    for (std::size_t j = 0; j < npts; ++j)
      psi(i, j) = (x[j] > x[i]) ? psi(i, j) : -psi(i, j);
  return psi;
}

double eval_psi_bosonic(const GroundStateCoefficients& gs, double x1,
                        double x2) {
  const int n_max = gs.n_max();
  const auto p1 = specfun::osc_eigenfunction_range(2 * n_max, x1);
  const auto p2 = specfun::osc_eigenfunction_range(2 * n_max, x2);
  double sum = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    sum += gs.c(n) * p1[n] * p2[n];
    for (int k = 0; k < n; ++k)
      sum += gs.cP(n, k) *
             (p1[k] * p2[2 * n - k] + p1[2 * n - k] * p2[k]) / kSqrt2;
  }
  return sum;
}

double eval_psi_fermionic(const GroundStateCoefficients& gs, double x1,
                          double x2) {
  const int n_max = gs.n_max();
  const double lo = std::min(x1, x2), hi = std::max(x1, x2);
  const auto pl = specfun::osc_eigenfunction_range(2 * n_max + 1, lo);
  const auto ph = specfun::osc_eigenfunction_range(2 * n_max + 1, hi);
  double sum = 0.0;
  for (int n = 0; n <= n_max; ++n)
    for (int k = 0; k <= n; ++k)
      sum += gs.cS(n, k) *
             (pl[k] * ph[2 * n + 1 - k] - pl[2 * n + 1 - k] * ph[k]) / kSqrt2;
  return sum;
}

}  // namespace pairlab::states
