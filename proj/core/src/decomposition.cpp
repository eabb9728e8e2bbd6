#include "pairlab/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "pairlab/linalg.hpp"
#include "pairlab/threading.hpp"

namespace pairlab::decomposition {

namespace {

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

int count_rank(const std::vector<double>& v) {
  int r = 0;
  for (double x : v)
    if (x > kRankThreshold) ++r;
  return r;
}

double lfact(int n) { return std::lgamma(n + 1.0); }

DecompositionResult schmidt_from_eigs(std::vector<double> lam, double defect) {
  DecompositionResult out;
  out.kind = Kind::schmidt;
  out.eigenvalues = std::move(lam);
  out.rank = count_rank(out.eigenvalues);
  double t2 = 0.0, svn = 0.0;
  for (double l : out.eigenvalues) {
    t2 += l * l;
    svn -= xlogx(l);
  }
  out.trace_rho2 = t2;
  out.k_number = 1.0 / t2;
  out.s_vn = svn;
  out.s_lin = 1.0 - t2;
  out.s_lin_strict = 1.0 - t2;
  out.norm_defect = defect;
  return out;
}

DecompositionResult slater_from_pairs(std::vector<double> z, double defect) {
  DecompositionResult out;
  out.kind = Kind::slater;
  out.eigenvalues = std::move(z);
  out.rank = count_rank(out.eigenvalues);
  double t2 = 0.0, svn = 0.0;
  for (double v : out.eigenvalues) {
    t2 += 2.0 * v * v;          // each z_j appears twice in rho
    svn -= 2.0 * xlogx(v);
  }
  out.trace_rho2 = t2;
  out.k_number = 1.0 / (2.0 * t2);
  out.s_vn = svn - std::log(2.0);
  out.s_lin = 1.0 - 2.0 * t2;
  out.s_lin_strict = 1.0 - t2;
  out.norm_defect = defect;
  return out;
}

}  // namespace

DecompositionResult schmidt_decompose(const states::GroundStateCoefficients& gs) {
  if (!gs.bosonic_valid())
    throw DomainError(
        "schmidt_decompose: bosonic representation unavailable at lambda_t = 1");
  if (std::fabs(gs.lambda_t()) < 1e-12)
    return schmidt_from_eigs({1.0}, 0.0);

  const linalg::Matrix m = states::bosonic_coefficient_matrix(gs);
  const std::vector<double> sigma = linalg::svd_coef_matrix(m);
  double total = 0.0;
  for (double s : sigma) total += s * s;
  std::vector<double> lam(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i)
    lam[i] = sigma[i] * sigma[i] / total;
  return schmidt_from_eigs(std::move(lam), gs.norm_defect_bosonic());
}

DecompositionResult slater_decompose(const states::GroundStateCoefficients& gs) {
  if (std::fabs(gs.lambda_t() - 1.0) < 1e-12)
    return slater_from_pairs({0.5}, 0.0);

  const linalg::Matrix w = states::fermionic_coefficient_matrix(gs);
  linalg::SymMatrix rho = linalg::gram(w);  // W^T W
  const double tr = rho.trace();
  for (double& v : rho.mutable_data()) v /= tr;
  std::vector<double> ev = linalg::sym_eigenvalues(rho);
  for (double& v : ev) v = std::clamp(v, 0.0, 1.0);

  // two-fold degeneracy: adjacent descending eigenvalues must pair up
  std::vector<double> z;
  z.reserve(ev.size() / 2);
  const double scale = std::max(ev.front(), 1e-30);
  for (std::size_t i = 0; i + 1 < ev.size(); i += 2) {
    if (std::fabs(ev[i] - ev[i + 1]) > 1e-6 * std::max(1.0, scale)) {
      char buf[160];
      std::snprintf(buf, sizeof buf,
                    "slater_decompose: eigenvalues fail to pair at rank %zu "
                    "(%.12g vs %.12g); truncation too small",
                    i, ev[i], ev[i + 1]);
      throw NonConvergenceError(buf, std::fabs(ev[i] - ev[i + 1]));
    }
    z.push_back(0.5 * (ev[i] + ev[i + 1]));
  }
  return slater_from_pairs(std::move(z), gs.norm_defect_fermionic());
}

double trace_rho_squared(double lambda_t, int n_max, Kind kind) {
  // Parity decouples both coefficient matrices; working per block keeps
  // the Gram products small enough for n_max in the hundreds.
  if (kind == Kind::schmidt) {
    if (std::fabs(lambda_t) < 1e-12) return 1.0;
    const auto gs = states::GroundStateCoefficients::build(
        lambda_t, {.n_max = n_max, .auto_escalate = false});
    const linalg::Matrix m = states::bosonic_coefficient_matrix(gs);
    const std::size_t dim = m.rows;
    const std::size_t de = (dim + 1) / 2, dodd = dim / 2;
    linalg::Matrix me(de, de), mo(dodd, dodd);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i % 2; j < dim; j += 2) {
        if (i % 2 == 0)
          me(i / 2, j / 2) = m(i, j);
        else
          mo(i / 2, j / 2) = m(i, j);
      }
    const linalg::SymMatrix ge = linalg::gram(me);
    const linalg::SymMatrix go = linalg::gram(mo);
    const double tr = ge.trace() + go.trace();
    const double fro2 = ge.trace_of_square() + go.trace_of_square();
    return fro2 / (tr * tr);
  }
  if (std::fabs(lambda_t - 1.0) < 1e-12) return 0.5;
  const auto gs = states::GroundStateCoefficients::build(
      lambda_t, {.n_max = n_max, .auto_escalate = false});
  // W couples even<->odd indices only; rho = W^T W is block diagonal with
  // blocks B B^T and B^T B sharing a spectrum.
  const std::size_t dim = 2 * static_cast<std::size_t>(gs.n_max()) + 2;
  const std::size_t half = dim / 2;
  linalg::Matrix b(half, half);  // rows: even index 2a, cols: odd index 2c+1
  for (int n = 0; n <= gs.n_max(); ++n)
    for (int k = 0; k <= n; ++k) {
      const double v = gs.cS(n, k) / std::sqrt(2.0);
      const int i = k, j = 2 * n + 1 - k;  // i + j odd
      if (i % 2 == 0)
        b(i / 2, (j - 1) / 2) = v;  // W[i][j] = v at (even, odd)
      else
        b(j / 2, (i - 1) / 2) = -v;  // W[j][i] = -v at (even, odd)
    }
  const linalg::SymMatrix g = linalg::gram(b);
  const double tr = 2.0 * g.trace();
  const double fro2 = 2.0 * g.trace_of_square();
  return fro2 / (tr * tr);
}

std::vector<ScanRow> entropy_scan(const std::vector<double>& lambdas,
                                  const ScanOptions& opts) {
  std::vector<ScanRow> rows(lambdas.size());
  parallel_for(lambdas.size(), opts.threads, [&](std::size_t i) {
    ScanRow& row = rows[i];
    row.lambda_t = lambdas[i];
    try {
      const auto gs =
          states::GroundStateCoefficients::build(lambdas[i], opts.truncation);
      const auto sl = slater_decompose(gs);
      row.s_lin_fermionic = sl.s_lin;
      row.s_lin_strict = sl.s_lin_strict;
      row.k_slater = sl.k_number;
      row.top_slater.assign(opts.top_k, 0.0);
      for (int k = 0; k < opts.top_k && k < (int)sl.eigenvalues.size(); ++k)
        row.top_slater[k] = sl.eigenvalues[k];
      if (gs.bosonic_valid()) {
        const auto sc = schmidt_decompose(gs);
        row.s_lin_bosonic = sc.s_lin;
        row.k_schmidt = sc.k_number;
        row.top_bosonic.assign(opts.top_k, 0.0);
        for (int k = 0; k < opts.top_k && k < (int)sc.eigenvalues.size(); ++k)
          row.top_bosonic[k] = sc.eigenvalues[k];
      }
      row.pair_size = (opts.with_pair_size && lambdas[i] < 1.0)
                          ? states::pair_size(lambdas[i])
                          : 0.0;
      row.ok = true;
    } catch (const std::exception& e) {
      row.ok = false;
      row.error = e.what();
    }
  });
  return rows;
}

NonInteractingDecomposition noninteracting_decomposition(int n) {
  if (n < 0) throw DomainError("noninteracting_decomposition: n must be >= 0");
  NonInteractingDecomposition out;
  out.n = n;
  out.energy = n + 1.0;
  const int nbar = (n % 2 == 0) ? n / 2 - 1 : (n - 1) / 2;
  const bool has_center = (n % 2 == 0);

  double sum_sq = 0.0;
  for (int k = 0; k <= nbar; ++k) {
    const double occ = std::exp(lfact(n) - lfact(k) - lfact(n - k) -
                                n * std::log(2.0));
    out.orbitals.push_back({NaturalOrbital::Form::plus_combo, n, n - k, occ});
    out.orbitals.push_back({NaturalOrbital::Form::minus_combo, n, n - k, occ});
    sum_sq += 2.0 * occ * occ;
  }
  if (has_center) {
    const double occ = std::exp(lfact(n) - 2.0 * lfact(n / 2) -
                                n * std::log(2.0));
    out.orbitals.push_back({NaturalOrbital::Form::single, n / 2, 0, occ});
    sum_sq += occ * occ;
  }
  std::sort(out.orbitals.begin(), out.orbitals.end(),
            [](const NaturalOrbital& a, const NaturalOrbital& b) {
              if (a.occupation != b.occupation) return a.occupation > b.occupation;
              if (a.b != b.b) return a.b > b.b;
              return static_cast<int>(a.form) < static_cast<int>(b.form);
            });
  out.occupations.reserve(out.orbitals.size());
  for (const auto& orb : out.orbitals) out.occupations.push_back(orb.occupation);
  out.s_lin = 1.0 - sum_sq;
  out.bound = 1.0 - 1.0 / (n + 1.0);
  return out;
}

namespace {

// Expansion coefficient of Eq.-(B.2):
//   c^{l,n}(k,l',r,p) = sqrt((k+l'-2r)! (n+l-k-l'-2p)!) /
//        ((k-r)! (l'-r)! (n-k-p)! (l-l'-p)! r! p!)
double b2_coef(int l, int n, int k, int lp, int r, int p) {
  const int i = k + lp - 2 * r;
  const int j = n + l - k - lp - 2 * p;
  return std::exp(0.5 * (lfact(i) + lfact(j)) - lfact(k - r) - lfact(lp - r) -
                  lfact(n - k - p) - lfact(l - lp - p) - lfact(r) - lfact(p));
}

}  // namespace

FermionizedDecomposition fermionized_decomposition(int l_t, int cm_n) {
  if (l_t < 1 || l_t % 2 == 0)
    throw DomainError("fermionized_decomposition: l_t must be odd positive");
  if (cm_n < 0)
    throw DomainError("fermionized_decomposition: cm_n must be >= 0");

  FermionizedDecomposition out;
  out.l_t = l_t;
  out.cm_n = cm_n;
  out.energy = cm_n + l_t + 1.0;
  const int eps = cm_n + l_t + 1;
  out.bound = 1.0 - 1.0 / static_cast<double>(eps / 2);

  const int qmax = (cm_n + l_t - 1) / 2;
  if (cm_n == 0) {
    // closed form: c_q = sqrt(l!/2^{l-1}) (-1)^q / sqrt((l-q)! q!)
    out.coefficients.resize(qmax + 1);
    for (int q = 0; q <= qmax; ++q)
      out.coefficients[q] =
          ((q % 2) ? -1.0 : 1.0) *
          std::exp(0.5 * (lfact(l_t) - (l_t - 1) * std::log(2.0) -
                          lfact(l_t - q) - lfact(q)));
  } else {
    // Appendix-B expansion of H_n((x1+x2)/sqrt2) H_l(|x1-x2|/sqrt2) in
    // ordered-coordinate oscillator products; collecting the coefficient
    // of phi_i(x_>) phi_j(x_<) over the full index sums. Off-shell terms
    // (i + j != n + l) cancel identically; the retained anti-diagonal is
    // the Slater-like decomposition.
    const int n = cm_n, l = l_t;
    const int dim = n + l + 1;
    std::vector<double> t(static_cast<std::size_t>(dim + 1) * (dim + 1), 0.0);
    auto at = [&](int i, int j) -> double& {
      return t[static_cast<std::size_t>(i) * (dim + 1) + j];
    };
    const double pref =
        std::exp(0.5 * (lfact(l) + lfact(n)) - 0.5 * (l + n) * std::log(2.0));
    for (int k = 0; k <= n; ++k)
      for (int lp = 0; lp <= l; ++lp)
        for (int r = 0; r <= std::min(k, lp); ++r)
          for (int p = 0; p <= std::min(n - k, l - lp); ++p) {
            const int i = k + lp - 2 * r;
            const int j = n + l - k - lp - 2 * p;
            at(i, j) += ((l - lp) % 2 ? -1.0 : 1.0) * pref *
                        b2_coef(l, n, k, lp, r, p);
          }
    // internal consistency: off-shell cancellation and antisymmetry
    for (int i = 0; i <= dim; ++i)
      for (int j = 0; j <= dim; ++j) {
        if (i + j == n + l) continue;
        if (std::fabs(at(i, j)) > 1e-9)
          throw NonConvergenceError(
              "fermionized_decomposition: off-shell residue in the "
              "Slater-like expansion",
              std::fabs(at(i, j)));
      }
    out.coefficients.resize(qmax + 1);
    for (int q = 0; q <= qmax; ++q) {
      const int m = n + l - q;
      if (std::fabs(at(m, q) + at(q, m)) > 1e-9)
        throw NonConvergenceError(
            "fermionized_decomposition: expansion not antisymmetric",
            std::fabs(at(m, q) + at(q, m)));
      out.coefficients[q] = std::sqrt(2.0) * at(m, q);
    }
  }

  double s2 = 0.0, s4 = 0.0;
  for (double cq : out.coefficients) {
    s2 += cq * cq;
    s4 += cq * cq * cq * cq;
  }
  if (std::fabs(s2 - 1.0) > 1e-9)
    throw NonConvergenceError(
        "fermionized_decomposition: coefficients not normalized",
        std::fabs(s2 - 1.0));
  out.s_lin_f = 1.0 - s4;
  return out;
}

DegeneracyInfo fermionized_degeneracy(int eps) {
  if (eps < 2) throw DomainError("fermionized_degeneracy: eps must be >= 2");
  if (eps % 2 == 0) return {eps / 2, eps};
  return {(eps - 1) / 2, eps - 1};
}

}  // namespace pairlab::decomposition
