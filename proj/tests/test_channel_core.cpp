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

#include "catch_amalgamated.hpp"
#include "testutil.hpp"

namespace flagcap::test {
namespace {

using Catch::Matchers::WithinAbs;

ComplexMatrix basis_op(std::size_t n, std::size_t r, std::size_t c) {
  ComplexMatrix m(n, n);
  m(r, c) = 1.0;
  return m;
}

// <b|Lambda(|a><a'|)|b'> at row b * din + a, column b' * din + a'.
ComplexMatrix choi_oracle(const KrausChannel& ch) {
  const std::size_t din = ch.dim_in();
  const std::size_t dout = ch.dim_out();
  ComplexMatrix c(din * dout, din * dout);
  for (std::size_t a = 0; a < din; ++a) {
    for (std::size_t a2 = 0; a2 < din; ++a2) {
      ComplexMatrix out(dout, dout);
      for (const auto& k : ch.kraus()) {
        out += naive_matmul(naive_matmul(k, basis_op(din, a, a2)), naive_adjoint(k));
      }
      for (std::size_t b = 0; b < dout; ++b)
        for (std::size_t b2 = 0; b2 < dout; ++b2) c(b * din + a, b2 * din + a2) = out(b, b2);
    }
  }
  return c;
}

KrausChannel damping(double y) {
  ComplexMatrix k2(2, 2);
  k2(0, 1) = std::sqrt(y);
  return KrausChannel({ComplexMatrix::diagonal({1.0, std::sqrt(1.0 - y)}), k2});
}

}  // namespace

TEST_CASE("Kraus channels validate completeness and shapes") {
  CHECK_THROWS_AS(KrausChannel({ComplexMatrix::diagonal({1.0, 0.5})}), std::domain_error);
  CHECK_THROWS_AS(KrausChannel({ComplexMatrix(2, 2), ComplexMatrix(3, 2)}), DimensionError);
  CHECK_THROWS(KrausChannel(std::vector<ComplexMatrix>{}));
  const auto ch = random_channel(3, 2, 4);
  CHECK(ch.cptp_residual() < 1e-12);
  CHECK(ch.dim_in() == 3);
  CHECK(ch.dim_out() == 2);
  CHECK(ch.kraus_count() == 4);
}

TEST_CASE("apply, Choi and apply_choi agree") {
  const auto ch = random_channel(3, 2, 3);
  const auto c = choi(ch);
  CHECK((c.mat - choi_oracle(ch)).max_abs() < 1e-12);
  CHECK(c.mat.is_positive_semidefinite(1e-10));
  const auto rho = random_state(3);
  const auto direct = apply(ch, rho);
  CHECK((apply_choi(c, rho) - direct).max_abs() < 1e-12);
  CHECK(std::abs(direct.trace() - 1.0) < 1e-12);
}

TEST_CASE("Stinespring dilation reproduces channel and complement") {
  const auto ch = random_channel(2, 3, 2);
  const auto v = stinespring(ch);
  REQUIRE(v.rows() == 6);
  CHECK(v.is_isometry(1e-12));
  const auto rho = random_state(2);
  const auto joint = naive_matmul(naive_matmul(v, rho), naive_adjoint(v));
  const std::array<std::size_t, 2> dims{3, 2};
  const std::array<std::size_t, 1> keep_out{0};
  const std::array<std::size_t, 1> keep_env{1};
  CHECK((partial_trace(joint, dims, keep_out) - apply(ch, rho)).max_abs() < 1e-12);
  CHECK((partial_trace(joint, dims, keep_env) - apply(complementary(ch), rho)).max_abs() < 1e-12);
}

TEST_CASE("channel equality ignores the Kraus representation") {
  const auto ch = random_channel(2, 2, 3);
  const auto u = random_unitary(3);
  // K'_i = sum_j u_ij K_j
  std::vector<ComplexMatrix> mixed(3, ComplexMatrix(2, 2));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) mixed[i] += ch.kraus()[j] * u(i, j);
  const auto eq = channels_equal(ch, KrausChannel(mixed), 1e-10);
  CHECK(eq.equal);
  CHECK(eq.residual < 1e-12);
  const auto other = channels_equal(ch, random_channel(2, 2, 3), 1e-10);
  CHECK_FALSE(other.equal);
  CHECK(other.residual > 1e-3);
}

TEST_CASE("composition applies right to left") {
  const auto first = random_channel(2, 3, 2);
  const auto second = random_channel(3, 2, 2);
  const auto both = compose(second, first);
  CHECK(both.kraus_count() == 4);
  const auto rho = random_state(2);
  CHECK((apply(both, rho) - apply(second, apply(first, rho))).max_abs() < 1e-12);
  CHECK_THROWS_AS(compose(first, first), DimensionError);
}

TEST_CASE("degrading residual vanishes for an exact degrader") {
  // A unitary channel is degraded by the constant map onto the trivial
  // environment, i.e. the trace.
  const auto u = KrausChannel::unitary(random_unitary(2));
  std::vector<ComplexMatrix> trace_map;
  for (std::size_t b = 0; b < 2; ++b) {
    ComplexMatrix row(1, 2);
    row(0, b) = 1.0;
    trace_map.push_back(row);
  }
  CHECK(degrading_residual(u, KrausChannel(trace_map)) < 1e-12);
}

TEST_CASE("coherent information special cases") {
  const auto mixed = DensityMatrix::maximally_mixed(2);
  CHECK_THAT(coherent_information(KrausChannel::identity(2), mixed), WithinAbs(1.0, 1e-12));
  std::vector<ComplexMatrix> paulis{ComplexMatrix::identity(2) * cplx(0.5),
                                    ComplexMatrix::from_rows({{0.0, 0.5}, {0.5, 0.0}}),
                                    ComplexMatrix::from_rows({{0.0, cplx(0, -0.5)}, {cplx(0, 0.5), 0.0}}),
                                    ComplexMatrix::diagonal({0.5, -0.5})};
  CHECK_THAT(coherent_information(KrausChannel(paulis), mixed), WithinAbs(-1.0, 1e-12));

  // Amplitude damping on diag(1 - tau, tau): h2((1-y) tau) - h2(y tau).
  for (double y : {0.1, 0.3}) {
    for (double tau : {0.2, 0.5, 0.9}) {
      const std::vector<double> pops{1.0 - tau, tau};
      const double expect = binary_entropy((1.0 - y) * tau) - binary_entropy(y * tau);
      CHECK_THAT(coherent_information(damping(y), DensityMatrix::diagonal(pops)),
                 WithinAbs(expect, 1e-12));
    }
  }
}

TEST_CASE("Q1 maximization") {
  const double y = 0.2;
  double grid_best = -1.0;
  for (int i = 0; i <= 10000; ++i) {
    const double tau = i / 10000.0;
    grid_best = std::max(grid_best, binary_entropy((1.0 - y) * tau) - binary_entropy(y * tau));
  }
  const auto diag = q1_maximize(damping(y), InputFamily::diagonal);
  CHECK_THAT(diag.value, WithinAbs(grid_best, 1e-7));
  CHECK(diag.value >= grid_best - 1e-12);
  const auto full = q1_maximize(damping(y), InputFamily::full_qubit);
  CHECK_THAT(full.value, WithinAbs(diag.value, 1e-6));
  const auto mm = q1_maximize(damping(y), InputFamily::maximally_mixed);
  CHECK(mm.value <= diag.value + 1e-12);
}

}  // namespace flagcap::test
