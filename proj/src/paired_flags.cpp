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
#include <numbers>
#include <string>

#include "flagcap/channel_zoo.hpp"

namespace flagcap {

namespace {

constexpr double kRadicandTol = 1e-12;

double root_ratio(double num, double den) { return den > 0.0 ? std::sqrt(num / den) : 0.0; }

std::optional<double> feasible_root(double radicand) {
  if (radicand < -kRadicandTol) return std::nullopt;
  return std::sqrt(std::max(radicand, 0.0));
}

void check_layout(const PauliWeights& w, const PairedLayout& layout) {
  if (w.d() != 2 || w.n() != 1) {
    throw std::invalid_argument("paired flags: only single-qubit Pauli weights");
  }
  if (std::abs(w[layout.canonical[1]] - w[layout.canonical[2]]) > 1e-12) {
    throw std::invalid_argument("paired flags: paired labels must carry equal weight");
  }
  if (w[layout.canonical[0]] <= 0.0) {
    throw std::invalid_argument("paired flags: identity weight must be positive");
  }
}

}  // namespace

std::optional<std::vector<FlagVector>> paired_flags(const PauliWeights& w,
                                                    const PairedLayout& layout,
                                                    const BB84FlagParams& params) {
  check_layout(w, layout);
  const auto& pos = layout.canonical;
  const double w0 = w[pos[0]];
  const double m = w[pos[1]];
  const double z = w[pos[3]];
  if (m == 0.0 && z > 0.0 && params.c != 0.0) return std::nullopt;

  const double alpha = params.a * root_ratio(m, w0);
  const double beta = params.b * root_ratio(z, w0);
  const double gamma = params.c * root_ratio(z, m);
  const auto r0 = feasible_root(1.0 - 2.0 * alpha * alpha - beta * beta);
  const auto r1 = feasible_root(1.0 - params.a * params.a - gamma * gamma);
  const auto r3 = feasible_root(1.0 - params.b * params.b - 2.0 * params.c * params.c);
  if (!r0 || !r1 || !r3) return std::nullopt;

  // Rows in family order (identity, paired, paired, single).
  const double family[4][4] = {
      {*r0, alpha, alpha, beta},
      {params.a, *r1, 0.0, -gamma},
      {params.a, 0.0, *r1, -gamma},
      {params.b, params.c, params.c, *r3},
  };
  std::vector<FlagVector> flags(4, FlagVector(4));
  for (std::size_t k = 0; k < 4; ++k) {
    for (std::size_t j = 0; j < 4; ++j) flags[pos[k]][pos[j]] = family[k][j];
  }
  return flags;
}

PairedMinimum paired_fmin(const PauliWeights& w, const PairedLayout& layout) {
  check_layout(w, layout);
  const double c_max = 1.0 / std::numbers::sqrt2;

  FlagFamily family;
  family.dimension = 3;
  family.lower = {-1.0, -1.0, -c_max};
  family.upper = {1.0, 1.0, c_max};
  family.flags = [&](std::span<const double> x) {
    return paired_flags(w, layout, {x[0], x[1], x[2]});
  };
  auto feasible = [&](const std::vector<double>& x) {
    return paired_flags(w, layout, {x[0], x[1], x[2]}).has_value();
  };
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      for (int k = 0; k < 5; ++k) {
        std::vector<double> x{-1.0 + 0.5 * i, -1.0 + 0.5 * j, -c_max + 0.5 * c_max * k};
        if (feasible(x)) family.starts.push_back(std::move(x));
      }
    }
  }
  if (std::vector<double> ref{1.0, 1.0, 0.0}; feasible(ref)) family.starts.push_back(ref);

  const auto best = pauli_bound_minimize(w, family);
  PairedMinimum out;
  out.value = best.value;
  out.params = {best.params[0], best.params[1], best.params[2]};
  out.flags = *paired_flags(w, layout, out.params);
  return out;
}

PauliWeights bb84_weights(double p) {
  if (!(p >= 0.0 && p <= 0.5)) {
    throw std::domain_error("bb84: p must lie in [0, 1/2], got " + std::to_string(p));
  }
  const double q = 1.0 - p;
  // Canonical order I, Z, X, Y.
  return PauliWeights(2, 1, {q * q, p * q, p * q, p * p});
}

KrausChannel bb84(double p) { return pauli_channel(bb84_weights(p)); }

PairedMinimum bb84_fmin(double p) { return paired_fmin(bb84_weights(p), kBB84Layout); }

double bb84_fmin_bound(double p) { return bb84_fmin(p).value; }

std::optional<double> bb84_reference_bound(double p) {
  const auto w = bb84_weights(p);
  const auto flags = paired_flags(w, kBB84Layout, {1.0, 1.0, 0.0});
  if (!flags) return std::nullopt;
  return flagged_pauli_value(w, *flags);
}

}  // namespace flagcap
