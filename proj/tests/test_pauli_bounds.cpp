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

#include <numbers>

#include "catch_amalgamated.hpp"
#include "flagcap/channel_zoo.hpp"
#include "flagcap/pauli_bounds.hpp"
#include "testutil.hpp"

namespace flagcap::test {
namespace {

using Catch::Matchers::WithinAbs;

struct Draw {
  PauliWeights w;
  std::vector<FlagVector> flags;
};

Draw draw_from(const ComplexMatrix& m, int d, std::size_t n) {
  const PsiState psi(d, n, m);
  auto marg = psi.marginals();
  double total = 0.0;
  for (double v : marg) total += v;
  for (double& v : marg) v /= total;
  return {PauliWeights(d, n, marg), psi.flags()};
}

ComplexMatrix with_conjugate_phase(int d, std::size_t n) {
  // Same construction with the opposite sign in the swap phase.
  const auto basis = pauli_twirl_basis(d, n);
  ComplexMatrix m(basis.size(), basis.size());
  for (std::size_t x = 0; x < basis.size(); ++x) {
    for (std::size_t y = x; y < basis.size(); ++y) {
      const cplx v = gaussian_cplx();
      m(x, y) = v;
      m(y, x) = std::polar(1.0, -2.0 * std::numbers::pi * symplectic_form(basis[y], basis[x]) / d) * v;
    }
  }
  const double norm = m.frobenius_norm();
  for (auto& z : m.entries()) z /= norm;
  return m;
}

}  // namespace

TEST_CASE("Pauli weights validate") {
  CHECK_THROWS(PauliWeights(2, 1, {0.5, 0.5}));
  CHECK_THROWS(PauliWeights(2, 1, {0.5, 0.5, 0.1, -0.1}));
  CHECK_THROWS(PauliWeights(2, 1, {0.5, 0.5, 0.1, 0.1}));
  const PauliWeights w(2, 1, {0.25, 0.25, 0.25, 0.25});
  CHECK_THAT(w.entropy(), WithinAbs(2.0, 1e-15));
  CHECK_THAT(PauliWeights(3, 1, std::vector<double>(9, 1.0 / 9)).log_dim(),
             WithinAbs(std::log2(3.0), 1e-15));
}

TEST_CASE("Pauli channel is the weighted sum of conjugations") {
  const PauliWeights w(3, 1, {0.5, 0.1, 0.05, 0.05, 0.1, 0.05, 0.05, 0.05, 0.05});
  const auto ch = pauli_channel(w);
  const auto basis = pauli_twirl_basis(3, 1);
  const auto rho = random_state(3);
  ComplexMatrix expect(3, 3);
  for (std::size_t x = 0; x < basis.size(); ++x) {
    const auto u = weyl_operator(basis[x]);
    expect += naive_matmul(naive_matmul(u, rho), naive_adjoint(u)) * cplx(w[x]);
  }
  CHECK((apply(ch, rho) - expect).max_abs() < 1e-12);
}

TEST_CASE("Psi bookkeeping") {
  const auto m = random_swap_symmetric_psi(2, 1);
  const PsiState psi(2, 1, m);
  const auto flags = psi.flags();
  const auto marg = psi.marginals();
  ComplexMatrix rho_f(4, 4);
  for (std::size_t x = 0; x < 4; ++x) rho_f += ComplexMatrix::outer(flags[x]) * cplx(marg[x]);
  CHECK((psi.flag_state() - rho_f).max_abs() < 1e-12);
  // Tr_C of |Psi><Psi| with C leading.
  const auto amps = psi.amplitudes();
  const std::array<std::size_t, 2> dims{4, 4};
  const std::array<std::size_t, 1> keep{1};
  CHECK((partial_trace(ComplexMatrix::outer(amps), dims, keep) - rho_f).max_abs() < 1e-12);
  CHECK_THROWS(PsiState(2, 1, ComplexMatrix(3, 3)));
  CHECK_THROWS(PsiState(2, 1, ComplexMatrix::identity(4)));
}

TEST_CASE("symplectic projectors are orthogonal projectors") {
  for (auto [d, n] : {std::pair{2, std::size_t{1}}, {3, std::size_t{1}}}) {
    const std::size_t labels = pauli_twirl_basis(d, n).size();
    std::vector<ComplexMatrix> proj;
    for (int j = 0; j < d; ++j) proj.push_back(symplectic_projector(d, n, j));
    double rank = 0.0;
    for (int j = 0; j < d; ++j) {
      CHECK(proj[j].is_hermitian(1e-14));
      CHECK((naive_matmul(proj[j], proj[j]) - proj[j]).max_abs() < 1e-12);
      rank += proj[j].trace().real();
      for (int k = j + 1; k < d; ++k) CHECK(naive_matmul(proj[j], proj[k]).max_abs() < 1e-12);
    }
    // One direction per unordered pair of distinct labels.
    CHECK_THAT(rank, WithinAbs(labels * (labels - 1) / 2.0, 1e-9));
  }
  CHECK_THROWS(symplectic_projector(3, 1, 3));
}

TEST_CASE("swap-symmetric Psi meets every constraint and yields a degradable extension") {
  for (auto [d, n] : {std::pair{2, std::size_t{1}}, {3, std::size_t{1}}, {2, std::size_t{2}}}) {
    for (int trial = 0; trial < 3; ++trial) {
      const auto m = random_swap_symmetric_psi(d, n);
      const auto draw = draw_from(m, d, n);
      const auto psi = PsiState::from_flags(draw.w, draw.flags);
      const auto rep = check_psi_constraints(psi, draw.w, 1e-10);
      INFO("d=" << d << " n=" << n);
      CHECK(rep.passed);
      const auto amps = psi.amplitudes();
      const auto state = ComplexMatrix::outer(amps);
      for (int j = 0; j < d; ++j) {
        CHECK(std::abs(naive_matmul(symplectic_projector(d, n, j), state).trace()) < 1e-12);
      }
      const auto spec = flagged_pauli_spec(draw.w, draw.flags);
      CHECK(check_degradability(spec, 1e-10).passed);
      CHECK(degrading_residual(spec) <= 1e-8);
    }
  }
}

TEST_CASE("the opposite swap phase breaks degradability for d = 3") {
  const auto draw = draw_from(with_conjugate_phase(3, 1), 3, 1);
  const auto spec = flagged_pauli_spec(draw.w, draw.flags);
  CHECK_FALSE(check_degradability(spec, 1e-10).passed);
  CHECK(degrading_residual(spec) > 1e-4);
  const auto rep = check_psi_constraints(PsiState::from_flags(draw.w, draw.flags), draw.w, 1e-10);
  CHECK_FALSE(rep.passed);
  CHECK(rep.projector_residual > 1e-4);
}

TEST_CASE("bound formula equals coherent information of the flagged channel") {
  for (int trial = 0; trial < 10; ++trial) {
    const auto draw = draw_from(random_swap_symmetric_psi(2, 1), 2, 1);
    const auto bound = flagged_pauli_q1(draw.w, draw.flags);
    CHECK(bound.valid);
    const auto flagged = build_flagged(flagged_pauli_spec(draw.w, draw.flags));
    const double direct = coherent_information(flagged, DensityMatrix::maximally_mixed(2));
    CHECK_THAT(bound.value, WithinAbs(direct, 1e-9));
  }
}

TEST_CASE("real and complex evaluation paths agree") {
  const auto w = depolarizing_weights(2, 0.15);
  const auto params = dep_flag_params(2, 0.15, 0.5 * dep_max_beta_sq(2, 0.15));
  auto flags = dep_flags(params, 2, 0.15);
  const double real_path = flagged_pauli_value(w, flags);
  for (auto& f : flags)
    for (auto& z : f) z *= cplx(0.0, 1.0);
  CHECK_THAT(flagged_pauli_value(w, flags), WithinAbs(real_path, 1e-12));
}

TEST_CASE("orthogonal flags give log d") {
  const PauliWeights w(2, 1, {0.7, 0.1, 0.15, 0.05});
  std::vector<FlagVector> flags(4, FlagVector(4));
  for (std::size_t x = 0; x < 4; ++x) flags[x][x] = 1.0;
  const auto b = flagged_pauli_q1(w, flags);
  CHECK(b.valid);
  CHECK_THAT(b.value, WithinAbs(1.0, 1e-12));
}

TEST_CASE("one-parameter family minimization matches a dense scan") {
  const double p = 0.12;
  const auto w = depolarizing_weights(2, p);
  FlagFamily family;
  family.dimension = 1;
  family.lower = {0.0};
  family.upper = {dep_max_beta_sq(2, p)};
  family.flags = [&](std::span<const double> t) -> std::optional<std::vector<FlagVector>> {
    return dep_flags(dep_flag_params(2, p, t[0]), 2, p);
  };
  const auto best = pauli_bound_minimize(w, family);
  double scan = 10.0;
  for (int i = 0; i <= 2000; ++i) {
    const double t = family.upper[0] * i / 2000.0;
    scan = std::min(scan, flagged_pauli_value(w, dep_flags(dep_flag_params(2, p, t), 2, p)));
  }
  CHECK(best.value <= scan + 1e-12);
  CHECK_THAT(best.value, WithinAbs(scan, 1e-6));
}

}  // namespace flagcap::test
