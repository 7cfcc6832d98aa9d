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

#include <cmath>
#include <string>

#include "flagcap/channel_zoo.hpp"
#include "flagcap/optimize.hpp"

namespace flagcap {

namespace {

const ComplexMatrix& pauli_x() {
  static const ComplexMatrix x = ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
  return x;
}

void check_unit(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw std::domain_error(std::string(what) + " must lie in [0, 1], got " + std::to_string(v));
  }
}

std::vector<ComplexMatrix> damping_kraus(double y) {
  check_unit(y, "damping probability y");
  ComplexMatrix k2(2, 2);
  k2(0, 1) = std::sqrt(y);
  return {ComplexMatrix::diagonal({1.0, std::sqrt(1.0 - y)}), std::move(k2)};
}

KrausChannel x_conjugated(const KrausChannel& ch) {
  std::vector<ComplexMatrix> kraus;
  for (const auto& k : ch.kraus()) kraus.push_back(conjugate(pauli_x(), k));
  return KrausChannel(std::move(kraus));
}

}  // namespace

double GadParams::s() const { return std::sqrt(1.0 - y); }

void GadParams::validate() const {
  check_unit(y, "GAD y");
  check_unit(N, "GAD N");
}

KrausChannel amplitude_damping(double y) { return KrausChannel(damping_kraus(y)); }

KrausChannel gad(const GadParams& params) {
  params.validate();
  const auto k = damping_kraus(params.y);
  const double a = std::sqrt(params.N);
  const double b = std::sqrt(1.0 - params.N);
  return KrausChannel({k[0] * cplx(a), k[1] * cplx(a), conjugate(pauli_x(), k[0]) * cplx(b),
                       conjugate(pauli_x(), k[1]) * cplx(b)});
}

std::vector<ComplexMatrix> gad_alt_kraus_operators(const GadParams& params, A3Form form) {
  params.validate();
  const double n = params.N;
  const double s = params.s();
  const double y = params.y;
  ComplexMatrix a1 = ComplexMatrix::identity(2) * cplx(std::sqrt(n * (1.0 - n)) * (1.0 + s));
  ComplexMatrix a2(2, 2);
  a2(1, 0) = std::sqrt((1.0 - n) * y);
  ComplexMatrix a3 = form == A3Form::corrected
                         ? ComplexMatrix::diagonal({n - (1.0 - n) * s, n * s - (1.0 - n)})
                         : ComplexMatrix::diagonal({(1.0 - n) - n * s, (1.0 - n) * s - n});
  ComplexMatrix a4(2, 2);
  a4(0, 1) = std::sqrt(n * y);
  return {std::move(a1), std::move(a2), std::move(a3), std::move(a4)};
}

KrausChannel gad_alt_kraus(const GadParams& params) {
  return KrausChannel(gad_alt_kraus_operators(params, A3Form::corrected), 1e-10);
}

double gad_unitary_weight(const GadParams& params) {
  params.validate();
  const double s = params.s();
  return params.N * (1.0 - params.N) * (1.0 + s) * (1.0 + s);
}

double ad_capacity(double y) {
  check_unit(y, "damping probability y");
  if (y >= 0.5) return 0.0;
  const optimize::ScalarProblem problem{
      [y](double tau) { return binary_entropy((1.0 - y) * tau) - binary_entropy(y * tau); }, 0.0,
      1.0, optimize::Goal::maximize};
  return clamp_bound(optimize::golden_section(problem, 1e-12).value);
}

PauliWeights gad_half_weights(double y) {
  check_unit(y, "damping probability y");
  const double s = std::sqrt(1.0 - y);
  const double big = (1.0 - 0.5 * y + s) / 2.0;
  const double small = std::max((1.0 - 0.5 * y - s) / 2.0, 0.0);
  // Canonical order I, Z, X, Y.
  return PauliWeights(2, 1, {big, small, y / 4.0, y / 4.0});
}

PairedMinimum gad_fmin_half_min(double y) {
  return paired_fmin(gad_half_weights(y), kGadHalfLayout);
}

double gad_fmin_half(double y) { return gad_fmin_half_min(y).value; }

double gad_conv_bound(double y, double N) {
  GadParams{y, N}.validate();
  const double n = N > 0.5 ? 1.0 - N : N;
  const double q_ad = ad_capacity(y);
  if (n == 0.0) return q_ad;
  return 2.0 * n * gad_fmin_half(y) + (1.0 - 2.0 * n) * q_ad;
}

double gad_orthogonal_flag_bound(double y) { return ad_capacity(y); }

FlaggedSpec gad_orthogonal_spec(const GadParams& params) {
  params.validate();
  const KrausChannel ad = amplitude_damping(params.y);
  return FlaggedSpec({{params.N, ad}, {1.0 - params.N, x_conjugated(ad)}},
                     {{1.0, 0.0}, {0.0, 1.0}});
}

KrausChannel gad_orthogonal_degrading_map(double y) {
  check_unit(y, "damping probability y");
  if (y > 0.5) throw std::domain_error("gad_orthogonal_degrading_map: needs y <= 1/2");
  const KrausChannel w = amplitude_damping((1.0 - 2.0 * y) / (1.0 - y));
  // Flagged output index c * l + i, environment index i * r + j, l = r = 2.
  constexpr std::size_t l = 2;
  constexpr std::size_t r = 2;
  std::vector<ComplexMatrix> kraus;
  for (std::size_t i = 0; i < l; ++i) {
    for (const auto& d : w.kraus()) {
      const ComplexMatrix local = i == 0 ? d : matmul(d, pauli_x());
      ComplexMatrix g(l * r, 2 * l);
      for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t c = 0; c < 2; ++c) g(i * r + j, c * l + i) = local(j, c);
      }
      kraus.push_back(std::move(g));
    }
  }
  return KrausChannel(std::move(kraus));
}

double gad_q1_lower(const GadParams& params) {
  return q1_maximize(gad(params), InputFamily::diagonal).value;
}

}  // namespace flagcap
