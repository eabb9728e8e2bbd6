#pragma once

#include <cstddef>
#include <vector>

#include "pairlab/common.hpp"

namespace pairlab::linalg {

/// Dense symmetric matrix; set() mirrors both triangles so symmetry holds
/// by construction.
class SymMatrix {
 public:
  explicit SymMatrix(std::size_t dim) : dim_(dim), a_(dim * dim, 0.0) {
    if (dim == 0) throw DimensionError("SymMatrix: dimension must be >= 1");
  }

  std::size_t dim() const { return dim_; }
  double operator()(std::size_t i, std::size_t j) const {
    return a_[i * dim_ + j];
  }
  void set(std::size_t i, std::size_t j, double v) {
    a_[i * dim_ + j] = v;
    a_[j * dim_ + i] = v;
  }
  void add(std::size_t i, std::size_t j, double v) {
    a_[i * dim_ + j] += v;
    if (i != j) a_[j * dim_ + i] += v;
  }
  const std::vector<double>& data() const { return a_; }
  std::vector<double>& mutable_data() { return a_; }

  double trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += a_[i * dim_ + i];
    return t;
  }
  double frobenius() const;
  /// Sum of squared entries = Tr(A^2) for symmetric A.
  double trace_of_square() const;

 private:
  std::size_t dim_;
  std::vector<double> a_;
};

struct EigenSystem {
  std::vector<double> values;   // descending
  std::vector<double> vectors;  // column k of V (row-major dim x dim) pairs with values[k]
  std::size_t dim = 0;
  double vector(std::size_t row, std::size_t k) const {
    return vectors[row * dim + k];
  }
};

/// Cyclic Jacobi diagonalization. Off-diagonal Frobenius norm is driven
/// below 1e-12 * ||A||_F; eigenvalues come back sorted descending with the
/// matching orthonormal eigenvectors. Throws NonConvergenceError (with the
/// residual) if the sweep cap is hit first.
EigenSystem sym_eigs(const SymMatrix& a);

/// Eigenvalues only; same algorithm without accumulating the rotations,
/// roughly half the work of sym_eigs.
std::vector<double> sym_eigenvalues(const SymMatrix& a);

/// Rectangular matrix in row-major storage, rows x cols.
struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<double> a;
  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0.0) {}
  double& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const {
    return a[i * cols + j];
  }
};

/// Singular values of C (descending), computed as sqrt of the eigenvalues
/// of C^T C with small negative roundoff clamped to zero.
std::vector<double> svd_coef_matrix(const Matrix& c);

/// C^T C as a SymMatrix.
SymMatrix gram(const Matrix& c);

}  // namespace pairlab::linalg
