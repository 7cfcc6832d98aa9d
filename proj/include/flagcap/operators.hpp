// Copyright 2026 The flagcap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace flagcap {

using cplx = std::complex<double>;

/// Thrown when operand shapes are incompatible.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const cplx> diag);
  static ComplexMatrix diagonal(std::initializer_list<double> diag);
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<cplx>> rows);
  /// Column vector |v>.
  static ComplexMatrix column(std::span<const cplx> v);
  /// Rank-one projector |v><v|.
  static ComplexMatrix outer(std::span<const cplx> v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return entries_.size(); }
  bool is_square() const { return rows_ == cols_; }

  cplx operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  cplx& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }

  std::span<const cplx> entries() const { return entries_; }
  std::span<cplx> entries() { return entries_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  cplx trace() const;
  double frobenius_norm() const;
  /// Largest singular value.
  double operator_norm() const;
  /// Largest entrywise modulus.
  double max_abs() const;

  bool is_hermitian(double tol) const;
  bool is_unitary(double tol) const;
  /// V^dagger V = I.
  bool is_isometry(double tol) const;
  bool is_positive_semidefinite(double tol) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(cplx s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    return a += b;
  }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    return a -= b;
  }
  friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }

  bool operator==(const ComplexMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> entries_;
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// a * b * a^dagger
ComplexMatrix conjugate(const ComplexMatrix& a, const ComplexMatrix& b);

/// Reduced operator on the factors listed in `keep` (ascending order is not
/// required; the result keeps the original factor order).
ComplexMatrix partial_trace(const ComplexMatrix& m,
                            std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);

/// Eigenvalues of a hermitian matrix in descending order.
std::vector<double> eigvals_hermitian(const ComplexMatrix& m,
                                      double tol = 1e-9);

/// Quantum state: hermitian, unit trace, positive semidefinite.
class DensityMatrix {
 public:
  static constexpr double kDefaultTol = 1e-9;

  explicit DensityMatrix(ComplexMatrix mat, double tol = kDefaultTol);

  static DensityMatrix maximally_mixed(std::size_t dim);
  static DensityMatrix pure(std::span<const cplx> psi);
  /// Diagonal state with the given populations.
  static DensityMatrix diagonal(std::span<const double> populations);
  /// (I + r.sigma) / 2 for a Bloch vector with |r| <= 1.
  static DensityMatrix qubit(double x, double y, double z);

  const ComplexMatrix& matrix() const { return mat_; }
  std::size_t dim() const { return mat_.rows(); }

 private:
  ComplexMatrix mat_;
};

/// Eigenvalues within this distance below zero are treated as zero; anything
/// more negative is an error.
inline constexpr double kNegativeEigenvalueTol = 1e-9;
/// Eigenvalues below this are dropped from entropy sums.
inline constexpr double kEntropyClamp = 1e-12;

/// -sum p log2 p over a probability vector (0 log 0 = 0).
double shannon_entropy(std::span<const double> probs);
/// Binary entropy in bits.
double binary_entropy(double x);
/// Entropy in bits of a hermitian PSD operator's spectrum. Does not
/// require unit trace; used for sub-normalized blocks.
double spectrum_entropy(std::span<const double> eigenvalues);
double von_neumann_entropy(const DensityMatrix& rho);
/// Same as above for an operator already known to be a state up to
/// numerical drift; skips the construction-time validation.
double von_neumann_entropy(const ComplexMatrix& rho);

/// (1/2) * sum |eigenvalues of a - b| for hermitian a, b.
double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace flagcap
