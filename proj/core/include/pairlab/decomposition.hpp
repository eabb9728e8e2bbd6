#pragma once

#include <string>
#include <vector>

#include "pairlab/states.hpp"

namespace pairlab::decomposition {

enum class Kind { schmidt, slater };

/// Canonical-form summary of a one-particle reduced density matrix.
/// Schmidt: eigenvalues are the lambda_j themselves. Slater: each entry is
/// one z_j of a two-fold degenerate pair (so 2 * sum(eigenvalues) = 1).
struct DecompositionResult {
  Kind kind = Kind::schmidt;
  std::vector<double> eigenvalues;  // descending
  int rank = 0;                     // entries above 1e-10
  double k_number = 1.0;            // 1/Tr rho^2 (schmidt), 1/(2 Tr rho^2) (slater)
  double s_vn = 0.0;                // von Neumann entropy (natural log)
  double s_lin = 0.0;               // 1 - Tr rho^2 or 1 - 2 Tr rho^2
  double s_lin_strict = 0.0;        // 1 - Tr rho^2 always (Fig-4 dashed variant)
  double trace_rho2 = 1.0;
  double norm_defect = 0.0;         // of the truncated expansion behind rho
};

inline constexpr double kRankThreshold = 1e-10;

DecompositionResult schmidt_decompose(const states::GroundStateCoefficients& gs);
DecompositionResult slater_decompose(const states::GroundStateCoefficients& gs);

/// Tr rho^2 of the (trace-normalized) reduced density matrix at the given
/// truncation, without an eigensolve; used for Schmidt/Slater-number scans
/// at large n_max.
double trace_rho_squared(double lambda_t, int n_max, Kind kind);

struct ScanOptions {
  states::TruncationOptions truncation;
  int top_k = 10;
  bool with_pair_size = true;
  unsigned threads = 0;  // 0: PAIRLAB_THREADS env, then hardware
};

struct ScanRow {
  double lambda_t = 0.0;
  bool ok = false;
  std::string error;
  double s_lin_bosonic = 0.0;
  double s_lin_fermionic = 0.0;
  double s_lin_strict = 0.0;
  double k_schmidt = 0.0;
  double k_slater = 0.0;
  double pair_size = 0.0;
  std::vector<double> top_bosonic;  // top_k Schmidt eigenvalues
  std::vector<double> top_slater;   // top_k z_j
};

/// Per-point Schmidt + Slater decomposition (+ pair size) over a lambda
/// grid; failures are recorded per row and the scan continues.
std::vector<ScanRow> entropy_scan(const std::vector<double>& lambdas,
                                  const ScanOptions& opts = {});

/// Natural orbital of the non-interacting decomposition: either the
/// symmetric/antisymmetric combination (phi_a +- phi_b)/sqrt2 or a single
/// oscillator orbital.
struct NaturalOrbital {
  enum class Form { plus_combo, minus_combo, single } form;
  int a = 0, b = 0;  // combo indices (n, n-k); single uses a only
  double occupation = 0.0;
};

struct NonInteractingDecomposition {
  int n = 0;
  double energy = 1.0;  // eps = n + 1
  std::vector<NaturalOrbital> orbitals;   // occupation-descending
  std::vector<double> occupations;        // same order
  double s_lin = 0.0;
  double bound = 0.0;  // 1 - 1/eps
};

NonInteractingDecomposition noninteracting_decomposition(int n);

struct FermionizedDecomposition {
  int l_t = 1;
  int cm_n = 0;
  double energy = 2.0;  // eps = cm_n + l_t + 1
  /// Coefficients c_q of the Slater-like terms S_{q, cm_n + l_t - q}.
  std::vector<double> coefficients;
  double s_lin_f = 0.0;  // 1 - sum c_q^4
  double bound = 0.0;    // 1 - 1/floor(eps/2)
};

FermionizedDecomposition fermionized_decomposition(int l_t, int cm_n);

struct DegeneracyInfo {
  int degeneracy = 0;  // states sharing energy eps
  int g_sp = 0;        // available single-particle states
};

DegeneracyInfo fermionized_degeneracy(int eps);

}  // namespace pairlab::decomposition
