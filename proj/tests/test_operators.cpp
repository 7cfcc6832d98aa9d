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

#include <array>
#include <numeric>

#include "catch_amalgamated.hpp"
#include "testutil.hpp"

namespace flagcap::test {

using Catch::Matchers::WithinAbs;

TEST_CASE("matmul agrees with the triple loop") {
  for (std::size_t n : {1u, 2u, 3u, 7u, 16u}) {
    const auto a = random_matrix(n, n + 1);
    const auto b = random_matrix(n + 1, 2);
    CHECK((matmul(a, b) - naive_matmul(a, b)).max_abs() < 1e-12);
  }
  CHECK_THROWS_AS(matmul(random_matrix(2, 3), random_matrix(2, 3)), DimensionError);
}

TEST_CASE("kron places blocks by the row-major rule") {
  const auto a = random_matrix(2, 3);
  const auto b = random_matrix(3, 2);
  const auto k = kron(a, b);
  REQUIRE(k.rows() == 6);
  REQUIRE(k.cols() == 6);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 2; ++c)
          CHECK(std::abs(k(i * 3 + r, j * 2 + c) - a(i, j) * b(r, c)) < 1e-14);
}

TEST_CASE("adjoint, trace and norms") {
  const auto a = random_matrix(4, 3);
  CHECK((a.adjoint() - naive_adjoint(a)).max_abs() == 0.0);
  const auto u = random_unitary(5);
  CHECK(u.is_unitary(1e-12));
  CHECK_THAT(u.operator_norm(), WithinAbs(1.0, 1e-10));
  CHECK_THAT(u.frobenius_norm(), WithinAbs(std::sqrt(5.0), 1e-12));
  const auto d = ComplexMatrix::diagonal({1.0, -3.0, 2.0});
  CHECK(d.trace() == cplx(0.0));
  CHECK_THAT(d.operator_norm(), WithinAbs(3.0, 1e-12));
  CHECK(random_isometry(6, 2).is_isometry(1e-12));
  CHECK_FALSE(random_matrix(3, 3).is_hermitian(1e-9));
}

TEST_CASE("partial trace matches an explicit index sum") {
  const std::array<std::size_t, 3> dims{2, 3, 2};
  const std::size_t total = 12;
  const auto m = random_matrix(total, total);
  // Keep factors 0 and 2, trace out the middle one.
  const std::array<std::size_t, 2> keep{0, 2};
  const auto reduced = partial_trace(m, dims, keep);
  REQUIRE(reduced.rows() == 4);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t c = 0; c < 2; ++c)
      for (std::size_t a2 = 0; a2 < 2; ++a2)
        for (std::size_t c2 = 0; c2 < 2; ++c2) {
          cplx s = 0.0;
          for (std::size_t b = 0; b < 3; ++b) s += m((a * 3 + b) * 2 + c, (a2 * 3 + b) * 2 + c2);
          CHECK(std::abs(reduced(a * 2 + c, a2 * 2 + c2) - s) < 1e-12);
        }
}

TEST_CASE("partial trace of a product state") {
  const auto rho = random_state(3);
  const auto sigma = random_state(2);
  const std::array<std::size_t, 2> dims{3, 2};
  const std::array<std::size_t, 1> first{0};
  const std::array<std::size_t, 1> second{1};
  CHECK((partial_trace(kron(rho, sigma), dims, first) - rho).max_abs() < 1e-12);
  CHECK((partial_trace(kron(rho, sigma), dims, second) - sigma).max_abs() < 1e-12);
}

TEST_CASE("hermitian eigenvalues") {
  SECTION("2x2 closed form") {
    for (int trial = 0; trial < 20; ++trial) {
      const auto h = random_state(2);
      const double a = h(0, 0).real();
      const double d = h(1, 1).real();
      const double rad = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(h(0, 1)));
      const auto ev = eigvals_hermitian(h);
      CHECK_THAT(ev[0], WithinAbs(0.5 * (a + d) + rad, 1e-12));
      CHECK_THAT(ev[1], WithinAbs(0.5 * (a + d) - rad, 1e-12));
    }
  }
  SECTION("unitary conjugation preserves the spectrum, sorted descending") {
    const auto u = random_unitary(4);
    const auto ev = eigvals_hermitian(conjugate(u, ComplexMatrix::diagonal({0.1, 0.4, -0.2, 0.7})));
    REQUIRE(ev.size() == 4);
    CHECK_THAT(ev[0], WithinAbs(0.7, 1e-12));
    CHECK_THAT(ev[1], WithinAbs(0.4, 1e-12));
    CHECK_THAT(ev[2], WithinAbs(0.1, 1e-12));
    CHECK_THAT(ev[3], WithinAbs(-0.2, 1e-12));
  }
  SECTION("non-hermitian input is rejected") {
    CHECK_THROWS_AS(eigvals_hermitian(random_matrix(3, 3)), std::domain_error);
  }
}

TEST_CASE("density matrices validate their input") {
  CHECK_NOTHROW(DensityMatrix(random_state(3)));
  CHECK_THROWS(DensityMatrix(ComplexMatrix::diagonal({0.5, 0.6})));
  CHECK_THROWS(DensityMatrix(ComplexMatrix::diagonal({1.2, -0.2})));
  CHECK_THROWS(DensityMatrix(random_matrix(2, 2)));
  const auto mm = DensityMatrix::maximally_mixed(4);
  CHECK(mm.matrix()(2, 2) == cplx(0.25));
  const auto q = DensityMatrix::qubit(0.0, 0.0, 1.0);
  CHECK(std::abs(q.matrix()(0, 0) - 1.0) < 1e-15);
  CHECK_THROWS(DensityMatrix::qubit(1.0, 1.0, 0.0));
}

TEST_CASE("entropies") {
  const std::vector<double> uniform4(4, 0.25);
  CHECK_THAT(shannon_entropy(uniform4), WithinAbs(2.0, 1e-15));
  CHECK_THAT(binary_entropy(0.5), WithinAbs(1.0, 1e-15));
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK_THAT(von_neumann_entropy(DensityMatrix::maximally_mixed(8)), WithinAbs(3.0, 1e-12));
  const std::vector<cplx> psi{{0.6, 0.0}, {0.0, 0.8}};
  CHECK_THAT(von_neumann_entropy(DensityMatrix::pure(psi)), WithinAbs(0.0, 1e-12));
  for (int trial = 0; trial < 20; ++trial) {
    const auto rho = random_state(2);
    CHECK_THAT(von_neumann_entropy(DensityMatrix(rho)), WithinAbs(entropy_2x2(rho), 1e-12));
  }
  const std::vector<double> bad{1.1, -0.1};
  CHECK_THROWS(shannon_entropy(bad));
}

TEST_CASE("trace distance") {
  const std::vector<cplx> e0{1.0, 0.0};
  const std::vector<cplx> e1{0.0, 1.0};
  CHECK_THAT(trace_distance(ComplexMatrix::outer(e0), ComplexMatrix::outer(e1)),
             WithinAbs(1.0, 1e-14));
  const auto rho = random_state(2);
  const auto sigma = random_state(2);
  // For qubits the difference has eigenvalues +-lambda, so T = lambda.
  const auto diff = rho - sigma;
  const double lambda = std::sqrt(std::norm(diff(0, 0)) + std::norm(diff(0, 1)));
  CHECK_THAT(trace_distance(rho, sigma), WithinAbs(lambda, 1e-12));
  CHECK(trace_distance(rho, rho) < 1e-15);
}

}  // namespace flagcap::test
