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

#include "catch_amalgamated.hpp"
#include "flagcap/flagged_ext.hpp"
#include "testutil.hpp"

namespace flagcap::test {
namespace {

using Catch::Matchers::WithinAbs;

const ComplexMatrix kX = ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
const ComplexMatrix kZ = ComplexMatrix::diagonal({1.0, -1.0});

KrausChannel damping(double y) {
  ComplexMatrix k2(2, 2);
  k2(0, 1) = std::sqrt(y);
  return KrausChannel({ComplexMatrix::diagonal({1.0, std::sqrt(1.0 - y)}), k2});
}

// sum_i p_i Lambda_i(rho) (x) |phi_i><phi_i|, assembled directly.
ComplexMatrix flagged_oracle(const FlaggedSpec& spec, const ComplexMatrix& rho) {
  ComplexMatrix out(spec.dim_out() * spec.flag_dim(), spec.dim_out() * spec.flag_dim());
  for (std::size_t i = 0; i < spec.component_count(); ++i) {
    const auto& f = spec.flags()[i];
    ComplexMatrix proj(f.size(), f.size());
    for (std::size_t a = 0; a < f.size(); ++a)
      for (std::size_t b = 0; b < f.size(); ++b) proj(a, b) = f[a] * std::conj(f[b]);
    out += kron(apply(spec.components()[i].channel, rho), proj) * cplx(spec.components()[i].weight);
  }
  return out;
}

}  // namespace

TEST_CASE("flagged specs validate their ingredients") {
  const auto id = KrausChannel::identity(2);
  CHECK_THROWS(FlaggedSpec({{0.5, id}, {0.4, id}}, {{1.0, 0.0}, {0.0, 1.0}}));
  CHECK_THROWS(FlaggedSpec({{0.5, id}, {0.5, id}}, {{1.0, 0.0}}));
  CHECK_THROWS(FlaggedSpec({{0.5, id}, {0.5, id}}, {{1.0, 0.0}, {0.0, 1.0, 0.0}}));
  CHECK_THROWS(FlaggedSpec({{0.5, id}, {0.5, id}}, {{1.0, 1.0}, {0.0, 1.0}}));
  CHECK_THROWS(FlaggedSpec({{1.5, id}, {-0.5, id}}, {{1.0, 0.0}, {0.0, 1.0}}));
  CHECK_THROWS(FlaggedSpec({{0.5, id}, {0.5, KrausChannel::identity(3)}}, {{1.0, 0.0}, {0.0, 1.0}}));
}

TEST_CASE("the flagged channel matches its defining sum") {
  const double s = std::sqrt(0.5);
  const FlaggedSpec spec({{0.3, random_channel(2, 2, 2)}, {0.7, random_channel(2, 2, 3)}},
                         {{s, cplx(0.0, s), 0.0}, {0.0, 0.6, 0.8}});
  const auto flagged = build_flagged(spec);
  CHECK(flagged.kraus_count() == 3 * 3);
  CHECK(flagged.cptp_residual() < 1e-12);
  const auto rho = random_state(2);
  CHECK((apply(flagged, rho) - flagged_oracle(spec, rho)).max_abs() < 1e-12);
  const auto plain = spec.unflagged();
  CHECK((apply(plain, rho) - (apply(spec.components()[0].channel, rho) * cplx(0.3) +
                              apply(spec.components()[1].channel, rho) * cplx(0.7)))
            .max_abs() < 1e-12);
}

TEST_CASE("orthogonal flags on unitary components are degradable") {
  const FlaggedSpec spec({{0.6, KrausChannel::unitary(kX)}, {0.4, KrausChannel::unitary(kZ)}},
                         {{1.0, 0.0}, {0.0, 1.0}});
  const auto rep = check_degradability(spec, 1e-10);
  CHECK(rep.passed);
  CHECK(rep.max_residual < 1e-14);
  CHECK(degrading_residual(spec) < 1e-12);
}

TEST_CASE("the swap condition detects violations") {
  SECTION("equal flags on anticommuting unitaries") {
    const FlaggedSpec spec({{0.5, KrausChannel::unitary(kX)}, {0.5, KrausChannel::unitary(kZ)}},
                           {{1.0, 0.0}, {1.0, 0.0}});
    const auto rep = check_degradability(spec, 1e-10);
    CHECK_FALSE(rep.passed);
    CHECK(rep.max_residual > 0.1);
    CHECK(degrading_residual(spec) > 1e-3);
  }
  SECTION("non-commuting Kraus operators inside one component") {
    const FlaggedSpec spec({{0.5, damping(0.3)}, {0.5, KrausChannel::identity(2)}},
                           {{1.0, 0.0}, {0.0, 1.0}});
    CHECK_FALSE(check_degradability(spec, 1e-10).passed);
  }
}

TEST_CASE("the degrading map lands on the canonical environment") {
  const FlaggedSpec spec({{0.6, KrausChannel::unitary(kX)}, {0.4, KrausChannel::unitary(kZ)}},
                         {{1.0, 0.0}, {0.0, 1.0}});
  const auto w = degrading_map(spec);
  const auto flagged = build_flagged(spec);
  CHECK(w.dim_in() == flagged.dim_out());
  CHECK(w.dim_out() == complementary(flagged).dim_out());
  CHECK(w.cptp_residual() < 1e-12);
}

TEST_CASE("unitary-mixture flags") {
  CHECK_THROWS(unitary_mixture_flags(0.4));
  CHECK_THROWS(unitary_mixture_flags(1.2));
  for (double u : {0.5, 0.6, 0.75, 0.9, 1.0}) {
    const auto f = unitary_mixture_flags(u);
    CHECK_THAT(std::norm(f.unitary_flag[0]) + std::norm(f.unitary_flag[1]), WithinAbs(1.0, 1e-14));
    // <1|phi_0> sqrt(u) = <0|phi_1> sqrt(1 - u)
    CHECK_THAT(f.unitary_flag[1].real() * std::sqrt(u), WithinAbs(std::sqrt(1.0 - u), 1e-14));
    const auto rest = random_channel(2, 2, 3);
    const auto spec = unitary_mixture_spec(u, rest);
    CHECK(check_degradability(spec, 1e-10).passed);
    CHECK(degrading_residual(spec) <= 1e-8);
  }
}

TEST_CASE("unitary-mixture bound sits above the channel's coherent information") {
  const auto rest = random_channel(2, 2, 2);
  for (double u : {0.6, 0.8}) {
    const auto spec = unitary_mixture_spec(u, rest);
    const double upper = unitary_mixture_bound(u, rest);
    const double lower = q1_maximize(spec.unflagged(), InputFamily::full_qubit).value;
    CHECK(upper >= lower - 1e-9);
    CHECK(upper <= 1.0 + 1e-12);
  }
  CHECK_THAT(unitary_mixture_bound(1.0, random_channel(2, 2, 2)), WithinAbs(1.0, 1e-9));
}

}  // namespace flagcap::test
