#pragma once

#include <vector>

#include "pairlab/common.hpp"
#include "pairlab/linalg.hpp"

namespace pairlab::states {

/// Center-of-mass quantum number; its energy contribution is n + 1/2.
struct CMQuantum {
  int n = 0;
  double energy() const { return n + 0.5; }
};

struct TruncationOptions {
  int n_max = 60;
  /// Escalate to n_max = 200 for lambda_t in (0.95, 1), where the
  /// fermionic-like coefficients decay slowly.
  bool auto_escalate = true;
};

/// Truncated coefficient arrays of the two ground-state representations at
/// fixed lambda_t <= 1: the diagonal/permanent coefficients c(n) and
/// cP(n,k) of the bosonic-like expansion, and the Slater-like cS(n,k).
///
/// The expansions converge only algebraically (the coefficient tails fall
/// off like n^{-3/2}), so the norm defects remain finite at any practical
/// truncation; they are recorded here and reported downstream rather than
/// forced below an unreachable threshold.
class GroundStateCoefficients {
 public:
  static GroundStateCoefficients build(double lambda_t,
                                       TruncationOptions opts = {});

  double lambda_t() const { return lambda_t_; }
  int n_max() const { return n_max_; }

  /// Bosonic-like representation available (false only at lambda_t = 1,
  /// where the c/cP formulas hit a pole).
  bool bosonic_valid() const { return bosonic_valid_; }

  double c(int n) const;
  double cP(int n, int k) const;  // n >= 1, 0 <= k <= n-1
  double cS(int n, int k) const;  // 0 <= k <= n

  double norm_defect_bosonic() const { return defect_bosonic_; }
  double norm_defect_fermionic() const { return defect_fermionic_; }

 private:
  GroundStateCoefficients() = default;
  double lambda_t_ = 0.0;
  int n_max_ = 0;
  bool bosonic_valid_ = true;
  std::vector<double> c_;   // n = 0..n_max
  std::vector<double> cp_;  // packed triangular, n >= 1, k < n
  std::vector<double> cs_;  // packed triangular, k <= n
  double defect_bosonic_ = 0.0;
  double defect_fermionic_ = 0.0;
};

/// Single coefficients of Eqs.-(19)-(21) form; the batch builder above is
/// preferred for whole arrays.
double coeff_c(int n, double lambda_t);
double coeff_cP(int n, int k, double lambda_t);
double coeff_cS(int n, int k, double lambda_t);

/// Normalization prefactor of the relative wavefunction,
///   N_r = (2/pi)^{1/4} sqrt( Gamma(-lambda) / (Psi((1-lambda)/2) -
///   Psi(-lambda/2)) ),
/// with the exact limits at lambda_t = 0 and 1 special-cased.
double relative_norm_factor(double lambda_t);

/// Normalized relative wavefunction N_r * D_lambda(|x|).
double eval_psi_relative(double x, double lambda_t);

/// Center-of-mass factor 2^{1/4} phi_n((x1+x2)/sqrt2); unit L2 norm along
/// the center-of-mass line.
double eval_psi_cm(double x1, double x2, int cm_n);

/// Exact two-particle wavefunction, Eq.-(11) x Eq.-(15) form.
double eval_psi_exact(double x1, double x2, double lambda_t, int cm_n);

/// Fermionized closed form (lambda_t = l_t odd positive).
double eval_psi_repulsive(double x1, double x2, int l_t, int cm_n);

/// Strong-attraction closed form, valid for lambda_t <= -5. Normalized to
/// unit L2 norm (the exponential relative factor carries (-lambda)^{1/4}).
double eval_psi_attractive(double x1, double x2, double lambda_t, int cm_n);

enum class PairSizeDefinition { rms };

/// RMS relative separation sqrt(<(x1-x2)^2>) of the relative ground-state
/// wavefunction at lambda_t < 1, by 1D quadrature with cusp-resolving
/// spacing.
double pair_size(double lambda_t,
                 PairSizeDefinition defn = PairSizeDefinition::rms);

/// Truncated-representation evaluations.
double eval_psi_bosonic(const GroundStateCoefficients& gs, double x1,
                        double x2);
double eval_psi_fermionic(const GroundStateCoefficients& gs, double x1,
                          double x2);

/// psi(x_i, x_j) on a grid for the truncated representations (matrix form,
/// used by the oracle cross-checks).
linalg::Matrix psi_bosonic_on_grid(const GroundStateCoefficients& gs,
                                   const std::vector<double>& x);
linalg::Matrix psi_fermionic_on_grid(const GroundStateCoefficients& gs,
                                     const std::vector<double>& x);

/// Coefficient matrices in the oscillator-product basis.
/// Bosonic: symmetric M with M[n][n] = c(n), M[k][2n-k] = cP(n,k)/sqrt2.
/// Fermionic: antisymmetric W with W[k][2n+1-k] = cS(n,k)/sqrt2.
linalg::Matrix bosonic_coefficient_matrix(const GroundStateCoefficients& gs);
linalg::Matrix fermionic_coefficient_matrix(const GroundStateCoefficients& gs);

}  // namespace pairlab::states
