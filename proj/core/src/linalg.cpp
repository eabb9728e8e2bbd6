#include "pairlab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

namespace pairlab::linalg {

double SymMatrix::frobenius() const {
  double s = 0.0;
  for (double v : a_) s += v * v;
  return std::sqrt(s);
}

double SymMatrix::trace_of_square() const {
  double s = 0.0;
  for (double v : a_) s += v * v;
  return s;
}

namespace {

double offdiag_norm(const std::vector<double>& a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) s += a[i * n + j] * a[i * n + j];
  return std::sqrt(2.0 * s);
}

// One cyclic sweep of Jacobi rotations over the upper triangle.
// a is full symmetric storage; v (optional) accumulates rotations.
void jacobi_sweep(std::vector<double>& a, std::vector<double>* v,
                  std::size_t n, double threshold) {
  for (std::size_t p = 0; p + 1 < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      const double apq = a[p * n + q];
      if (std::fabs(apq) <= threshold) continue;
      const double app = a[p * n + p];
      const double aqq = a[q * n + q];
      const double theta = (aqq - app) / (2.0 * apq);
      double t;
      if (std::fabs(theta) > 1e154) {
        t = 1.0 / (2.0 * theta);
      } else {
        t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
      }
      const double c = 1.0 / std::sqrt(t * t + 1.0);
      const double s = t * c;
      const double tau = s / (1.0 + c);

      a[p * n + p] = app - t * apq;
      a[q * n + q] = aqq + t * apq;
      a[p * n + q] = 0.0;
      a[q * n + p] = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == p || k == q) continue;
        const double akp = a[k * n + p];
        const double akq = a[k * n + q];
        const double np = akp - s * (akq + tau * akp);
        const double nq = akq + s * (akp - tau * akq);
        a[k * n + p] = np;
        a[p * n + k] = np;
        a[k * n + q] = nq;
        a[q * n + k] = nq;
      }
      if (v) {
        std::vector<double>& vv = *v;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = vv[k * n + p];
          const double vkq = vv[k * n + q];
          vv[k * n + p] = vkp - s * (vkq + tau * vkp);
          vv[k * n + q] = vkq + s * (vkp - tau * vkq);
        }
      }
    }
  }
}

constexpr int kSweepCap = 60;

void jacobi(std::vector<double>& a, std::vector<double>* v, std::size_t n) {
  for (double x : a) {
    if (!std::isfinite(x))
      throw DomainError("sym_eigs: matrix entries must be finite");
  }
  const double norm = std::sqrt(
      std::inner_product(a.begin(), a.end(), a.begin(), 0.0));
  if (norm == 0.0) return;
  const double target = 1e-12 * norm;
  for (int sweep = 0; sweep < kSweepCap; ++sweep) {
    const double off = offdiag_norm(a, n);
    if (off <= target) return;
    // shrink the rotation threshold as the sweep count grows
    const double thr = (sweep < 3) ? 0.2 * off / (n * n) : 0.0;
    jacobi_sweep(a, v, n, thr);
  }
  const double off = offdiag_norm(a, n);
  if (off > target) {
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "sym_eigs: Jacobi did not converge in %d sweeps "
                  "(off-diagonal residual %.3e, target %.3e)",
                  kSweepCap, off, target);
    throw NonConvergenceError(buf, off);
  }
}

}  // namespace

EigenSystem sym_eigs(const SymMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<double> a = m.data();
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
  jacobi(a, &v, n);

  EigenSystem out;
  out.dim = n;
  out.values.resize(n);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = a[i * n + i];
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return diag[i] > diag[j]; });
  out.vectors.resize(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = diag[order[k]];
    for (std::size_t r = 0; r < n; ++r)
      out.vectors[r * n + k] = v[r * n + order[k]];
  }
  return out;
}

std::vector<double> sym_eigenvalues(const SymMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<double> a = m.data();
  jacobi(a, nullptr, n);
  std::vector<double> vals(n);
  for (std::size_t i = 0; i < n; ++i) vals[i] = a[i * n + i];
  std::sort(vals.begin(), vals.end(), std::greater<double>());
  return vals;
}

SymMatrix gram(const Matrix& c) {
  SymMatrix g(c.cols);
  std::vector<double>& out = g.mutable_data();
  const std::size_t n = c.cols, m = c.rows;
  // (C^T C)_{ij} = sum_k C_{ki} C_{kj}; accumulate row-by-row for locality
  for (std::size_t k = 0; k < m; ++k) {
    const double* row = &c.a[k * n];
    for (std::size_t i = 0; i < n; ++i) {
      const double rki = row[i];
      if (rki == 0.0) continue;
      double* outrow = &out[i * n];
      for (std::size_t j = i; j < n; ++j) outrow[j] += rki * row[j];
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) out[i * n + j] = out[j * n + i];
  return g;
}

std::vector<double> svd_coef_matrix(const Matrix& c) {
  SymMatrix g = gram(c);
  std::vector<double> ev = sym_eigenvalues(g);
  for (double& v : ev) v = v > 0.0 ? std::sqrt(v) : 0.0;
  // eigenvalues were sorted descending; sqrt preserves the order
  return ev;
}

}  // namespace pairlab::linalg
