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

#include "flagcap/operators.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "flagcap/kernels.hpp"

namespace flagcap {

namespace {

using EigenRowMajor =
    Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

std::string shape(const ComplexMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

double hermiticity_defect(const ComplexMatrix& m) {
  double worst = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = r; c < m.cols(); ++c) {
      worst = std::max(worst, std::abs(m(r, c) - std::conj(m(c, r))));
    }
  }
  return worst;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<cplx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw DimensionError("ComplexMatrix: " + std::to_string(entries_.size()) +
                         " entries for shape " + std::to_string(rows) + "x" +
                         std::to_string(cols));
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> diag) {
  std::vector<cplx> d(diag.begin(), diag.end());
  return diagonal(std::span<const cplx>(d));
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<cplx>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<cplx> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionError("from_rows: ragged rows");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return ComplexMatrix(r, c, std::move(entries));
}

ComplexMatrix ComplexMatrix::column(std::span<const cplx> v) {
  return ComplexMatrix(v.size(), 1, std::vector<cplx>(v.begin(), v.end()));
}

ComplexMatrix ComplexMatrix::outer(std::span<const cplx> v) {
  ComplexMatrix m(v.size(), v.size());
  for (std::size_t r = 0; r < v.size(); ++r) {
    for (std::size_t c = 0; c < v.size(); ++c) m(r, c) = v[r] * std::conj(v[c]);
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

cplx ComplexMatrix::trace() const {
  if (!is_square()) throw DimensionError("trace of non-square " + shape(*this));
  cplx t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  return std::sqrt(kernels::cdotc(entries_, entries_).real());
}

double ComplexMatrix::operator_norm() const {
  if (entries_.empty()) return 0.0;
  const ComplexMatrix gram =
      rows_ >= cols_ ? matmul(adjoint(), *this) : matmul(*this, adjoint());
  const auto ev = eigvals_hermitian(gram, 1e-6 * std::max(1.0, gram.max_abs()));
  return std::sqrt(std::max(0.0, ev.front()));
}

double ComplexMatrix::max_abs() const {
  double worst = 0.0;
  for (const auto& z : entries_) worst = std::max(worst, std::abs(z));
  return worst;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  return is_square() && hermiticity_defect(*this) <= tol;
}

bool ComplexMatrix::is_unitary(double tol) const {
  return is_square() && is_isometry(tol);
}

bool ComplexMatrix::is_isometry(double tol) const {
  const ComplexMatrix gram = matmul(adjoint(), *this);
  return (gram - identity(cols_)).max_abs() <= tol;
}

bool ComplexMatrix::is_positive_semidefinite(double tol) const {
  if (!is_hermitian(tol)) return false;
  const auto ev = eigvals_hermitian(*this, tol);
  return ev.empty() || ev.back() >= -tol;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw DimensionError("add: " + shape(*this) + " vs " + shape(other));
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw DimensionError("subtract: " + shape(*this) + " vs " + shape(other));
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (auto& z : entries_) z *= s;
  return *this;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul: " + shape(a) + " * " + shape(b));
  }
  ComplexMatrix c(a.rows(), b.cols());
  kernels::cgemm_acc(a.entries(), b.entries(), c.entries(), a.rows(), a.cols(),
                     b.cols());
  return c;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar) {
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const cplx s = a(ar, ac);
      if (s == cplx(0.0)) continue;
      for (std::size_t br = 0; br < b.rows(); ++br) {
        for (std::size_t bc = 0; bc < b.cols(); ++bc) {
          out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
        }
      }
    }
  }
  return out;
}

ComplexMatrix conjugate(const ComplexMatrix& a, const ComplexMatrix& b) {
  return matmul(matmul(a, b), a.adjoint());
}

ComplexMatrix partial_trace(const ComplexMatrix& m,
                            std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
  if (!m.is_square()) throw DimensionError("partial_trace: non-square " + shape(m));
  std::size_t total = 1;
  for (auto d : dims) {
    if (d == 0) throw DimensionError("partial_trace: zero factor dimension");
    total *= d;
  }
  if (total != m.rows()) {
    throw DimensionError("partial_trace: factor dims multiply to " +
                         std::to_string(total) + ", matrix is " + shape(m));
  }
  std::vector<bool> kept(dims.size(), false);
  for (auto k : keep) {
    if (k >= dims.size()) throw DimensionError("partial_trace: keep index out of range");
    kept[k] = true;
  }

  // Split every flat index into (kept part, traced part), each in mixed radix
  // over the respective factors in their original order.
  std::size_t kept_dim = 1;
  for (std::size_t f = 0; f < dims.size(); ++f) {
    if (kept[f]) kept_dim *= dims[f];
  }
  std::vector<std::size_t> kept_idx(total);
  std::vector<std::size_t> traced_idx(total);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rest = flat;
    std::size_t k = 0, kscale = 1, t = 0, tscale = 1;
    for (std::size_t f = dims.size(); f-- > 0;) {
      const std::size_t digit = rest % dims[f];
      rest /= dims[f];
      if (kept[f]) {
        k += digit * kscale;
        kscale *= dims[f];
      } else {
        t += digit * tscale;
        tscale *= dims[f];
      }
    }
    kept_idx[flat] = k;
    traced_idx[flat] = t;
  }

  ComplexMatrix out(kept_dim, kept_dim);
  for (std::size_t r = 0; r < total; ++r) {
    for (std::size_t c = 0; c < total; ++c) {
      if (traced_idx[r] == traced_idx[c]) out(kept_idx[r], kept_idx[c]) += m(r, c);
    }
  }
  return out;
}

std::vector<double> eigvals_hermitian(const ComplexMatrix& m, double tol) {
  if (!m.is_square()) throw DimensionError("eigvals_hermitian: non-square " + shape(m));
  if (m.rows() == 0) return {};
  const double defect = hermiticity_defect(m);
  if (defect > tol * std::max(1.0, m.max_abs())) {
    throw std::domain_error("eigvals_hermitian: matrix is not hermitian (defect " +
                            std::to_string(defect) + ")");
  }
  const Eigen::Map<const EigenRowMajor> view(m.entries().data(),
                                             static_cast<Eigen::Index>(m.rows()),
                                             static_cast<Eigen::Index>(m.cols()));
  Eigen::SelfAdjointEigenSolver<EigenRowMajor> solver(view, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigvals_hermitian: eigensolver did not converge");
  }
  const auto& ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

DensityMatrix::DensityMatrix(ComplexMatrix mat, double tol) : mat_(std::move(mat)) {
  if (!mat_.is_square() || mat_.rows() == 0) {
    throw DimensionError("DensityMatrix: needs a non-empty square matrix, got " +
                         shape(mat_));
  }
  if (hermiticity_defect(mat_) > tol) {
    throw std::domain_error("DensityMatrix: not hermitian");
  }
  if (std::abs(mat_.trace() - 1.0) > tol) {
    throw std::domain_error("DensityMatrix: trace is " +
                            std::to_string(mat_.trace().real()));
  }
  const auto ev = eigvals_hermitian(mat_, tol);
  if (ev.back() < -tol) {
    throw std::domain_error("DensityMatrix: negative eigenvalue " +
                            std::to_string(ev.back()));
  }
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  return DensityMatrix(ComplexMatrix::identity(dim) * cplx(1.0 / static_cast<double>(dim)));
}

DensityMatrix DensityMatrix::pure(std::span<const cplx> psi) {
  const double norm = std::sqrt(kernels::cdotc(psi, psi).real());
  if (norm == 0.0) throw std::domain_error("DensityMatrix::pure: zero vector");
  std::vector<cplx> v(psi.begin(), psi.end());
  for (auto& z : v) z /= norm;
  return DensityMatrix(ComplexMatrix::outer(v));
}

DensityMatrix DensityMatrix::diagonal(std::span<const double> populations) {
  std::vector<cplx> d(populations.begin(), populations.end());
  return DensityMatrix(ComplexMatrix::diagonal(std::span<const cplx>(d)));
}

DensityMatrix DensityMatrix::qubit(double x, double y, double z) {
  const cplx i(0.0, 1.0);
  return DensityMatrix(ComplexMatrix::from_rows({{0.5 * (1.0 + z), 0.5 * (x - i * y)},
                                                 {0.5 * (x + i * y), 0.5 * (1.0 - z)}}));
}

double shannon_entropy(std::span<const double> probs) {
  double s = 0.0;
  for (double p : probs) {
    if (p < -kNegativeEigenvalueTol) {
      throw std::domain_error("entropy: negative probability " + std::to_string(p));
    }
    if (p > kEntropyClamp) s -= p * std::log2(p);
  }
  return s;
}

double binary_entropy(double x) {
  const double probs[2] = {x, 1.0 - x};
  return shannon_entropy(probs);
}

double spectrum_entropy(std::span<const double> eigenvalues) {
  return shannon_entropy(eigenvalues);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  return spectrum_entropy(eigvals_hermitian(rho.matrix()));
}

double von_neumann_entropy(const ComplexMatrix& rho) {
  return spectrum_entropy(eigvals_hermitian(rho));
}

double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("trace_distance: " + shape(a) + " vs " + shape(b));
  }
  const auto ev = eigvals_hermitian(a - b, 1e-6);
  double s = 0.0;
  for (double v : ev) s += std::abs(v);
  return 0.5 * s;
}

}  // namespace flagcap
