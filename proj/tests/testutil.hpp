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

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "flagcap/channel_core.hpp"
#include "flagcap/operators.hpp"
#include "flagcap/pauli_algebra.hpp"

namespace flagcap::test {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed1234abcdULL);
  return gen;
}

inline double uniform(double lo = -1.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline cplx gaussian_cplx() {
  std::normal_distribution<double> n(0.0, 1.0);
  return {n(rng()), n(rng())};
}

inline ComplexMatrix random_matrix(std::size_t rows, std::size_t cols) {
  ComplexMatrix m(rows, cols);
  for (auto& z : m.entries()) z = gaussian_cplx();
  return m;
}

/// Textbook triple loop; the oracle for every product in the tests.
inline ComplexMatrix naive_matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      cplx s = 0.0;
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  }
  return c;
}

inline ComplexMatrix naive_adjoint(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  }
  return out;
}

/// Columns orthonormalized by modified Gram-Schmidt: a random isometry.
inline ComplexMatrix random_isometry(std::size_t rows, std::size_t cols) {
  ComplexMatrix m = random_matrix(rows, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::size_t prev = 0; prev < c; ++prev) {
      cplx dot = 0.0;
      for (std::size_t r = 0; r < rows; ++r) dot += std::conj(m(r, prev)) * m(r, c);
      for (std::size_t r = 0; r < rows; ++r) m(r, c) -= dot * m(r, prev);
    }
    double norm = 0.0;
    for (std::size_t r = 0; r < rows; ++r) norm += std::norm(m(r, c));
    norm = std::sqrt(norm);
    for (std::size_t r = 0; r < rows; ++r) m(r, c) /= norm;
  }
  return m;
}

inline ComplexMatrix random_unitary(std::size_t n) { return random_isometry(n, n); }

/// Random CPTP map with `count` Kraus operators, cut from a random isometry.
inline KrausChannel random_channel(std::size_t din, std::size_t dout, std::size_t count) {
  const ComplexMatrix v = random_isometry(dout * count, din);
  std::vector<ComplexMatrix> kraus(count, ComplexMatrix(dout, din));
  for (std::size_t j = 0; j < count; ++j) {
    for (std::size_t b = 0; b < dout; ++b) {
      for (std::size_t a = 0; a < din; ++a) kraus[j](b, a) = v(j * dout + b, a);
    }
  }
  return KrausChannel(std::move(kraus));
}

inline ComplexMatrix random_state(std::size_t n) {
  ComplexMatrix g = random_matrix(n, n);
  ComplexMatrix rho = naive_matmul(g, naive_adjoint(g));
  const cplx tr = rho.trace();
  for (auto& z : rho.entries()) z /= tr;
  return rho;
}

/// Entropy from eigenvalues of a 2x2 hermitian matrix in closed form.
inline double entropy_2x2(const ComplexMatrix& m) {
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  const double off = std::abs(m(0, 1));
  const double mean = 0.5 * (a + d);
  const double rad = std::sqrt(0.25 * (a - d) * (a - d) + off * off);
  double s = 0.0;
  for (double v : {mean + rad, mean - rad}) {
    if (v > 1e-15) s -= v * std::log2(v);
  }
  return s;
}

/// Coefficient matrix M of a random |Psi> meeting the swap condition
/// M[y][x] = exp(2 pi i <y, x> / d) M[x][y]; weights are its row norms.
inline ComplexMatrix random_swap_symmetric_psi(int d, std::size_t n) {
  const auto basis = pauli_twirl_basis(d, n);
  const std::size_t labels = basis.size();
  ComplexMatrix m(labels, labels);
  const double pi = std::acos(-1.0);
  for (std::size_t x = 0; x < labels; ++x) {
    for (std::size_t y = x; y < labels; ++y) {
      const cplx v = gaussian_cplx();
      m(x, y) = v;
      const int s = symplectic_form(basis[y], basis[x]);
      m(y, x) = std::polar(1.0, 2.0 * pi * s / d) * v;
    }
  }
  const double norm = m.frobenius_norm();
  for (auto& z : m.entries()) z /= norm;
  return m;
}

}  // namespace flagcap::test
