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

#include "flagcap/flagged_ext.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace flagcap {

namespace {

constexpr double kWeightTol = 1e-12;
constexpr double kFlagNormTol = 1e-10;

// Kraus operator j of flag slot i; slots past the component list behave as
// weight-zero identity channels.
const ComplexMatrix* slot_kraus(const FlaggedSpec& spec, std::size_t i, std::size_t j,
                                const ComplexMatrix& identity) {
  if (i >= spec.component_count()) return j == 0 ? &identity : nullptr;
  const auto& ks = spec.components()[i].channel.kraus();
  return j < ks.size() ? &ks[j] : nullptr;
}

double slot_weight(const FlaggedSpec& spec, std::size_t i) {
  return i < spec.component_count() ? spec.components()[i].weight : 0.0;
}

void require_flag_room(const FlaggedSpec& spec, const char* what) {
  if (spec.flag_dim() < spec.component_count()) {
    throw DimensionError(std::string(what) + ": flag dimension " +
                         std::to_string(spec.flag_dim()) + " < " +
                         std::to_string(spec.component_count()) + " components");
  }
}

}  // namespace

FlaggedSpec::FlaggedSpec(std::vector<FlagComponent> components, std::vector<FlagVector> flags)
    : components_(std::move(components)), flags_(std::move(flags)) {
  if (components_.empty()) throw std::invalid_argument("FlaggedSpec: no components");
  if (flags_.size() != components_.size()) {
    throw std::invalid_argument("FlaggedSpec: " + std::to_string(flags_.size()) + " flags for " +
                                std::to_string(components_.size()) + " components");
  }
  double total = 0.0;
  for (const auto& c : components_) {
    if (!(c.weight >= 0.0)) throw std::domain_error("FlaggedSpec: negative weight");
    if (c.channel.dim_in() != components_.front().channel.dim_in() ||
        c.channel.dim_out() != components_.front().channel.dim_out()) {
      throw DimensionError("FlaggedSpec: components act on different spaces");
    }
    total += c.weight;
  }
  if (std::abs(total - 1.0) > kWeightTol) {
    throw std::domain_error("FlaggedSpec: weights sum to " + std::to_string(total));
  }
  const std::size_t l = flags_.front().size();
  if (l == 0) throw DimensionError("FlaggedSpec: empty flag vector");
  for (std::size_t i = 0; i < flags_.size(); ++i) {
    if (flags_[i].size() != l) throw DimensionError("FlaggedSpec: flags of different dimension");
    double norm2 = 0.0;
    for (const auto& z : flags_[i]) norm2 += std::norm(z);
    if (std::abs(std::sqrt(norm2) - 1.0) > kFlagNormTol) {
      throw std::domain_error("FlaggedSpec: flag " + std::to_string(i) + " has norm " +
                              std::to_string(std::sqrt(norm2)));
    }
  }
}

std::size_t FlaggedSpec::max_kraus() const {
  std::size_t r = 0;
  for (const auto& c : components_) r = std::max(r, c.channel.kraus_count());
  return r;
}

KrausChannel FlaggedSpec::unflagged() const {
  std::vector<ComplexMatrix> kraus;
  for (const auto& c : components_) {
    for (const auto& k : c.channel.kraus()) kraus.push_back(k * cplx(std::sqrt(c.weight)));
  }
  return KrausChannel(std::move(kraus));
}

KrausChannel build_flagged(const FlaggedSpec& spec) {
  const std::size_t slots = std::max(spec.component_count(), spec.flag_dim());
  const std::size_t r = spec.max_kraus();
  const std::size_t rows = spec.dim_out() * spec.flag_dim();
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(slots * r);
  for (std::size_t i = 0; i < slots; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (i < spec.component_count() && j < spec.components()[i].channel.kraus_count()) {
        const auto& c = spec.components()[i];
        kraus.push_back(kron(c.channel.kraus()[j], ComplexMatrix::column(spec.flags()[i])) *
                        cplx(std::sqrt(c.weight)));
      } else {
        kraus.emplace_back(rows, spec.dim_in());
      }
    }
  }
  return KrausChannel(std::move(kraus));
}

DegradabilityReport check_degradability(const FlaggedSpec& spec, double tol) {
  require_flag_room(spec, "check_degradability");
  if (spec.dim_in() != spec.dim_out()) {
    throw DimensionError("check_degradability: components must map a space to itself");
  }
  const std::size_t l = spec.flag_dim();
  const std::size_t r = spec.max_kraus();
  const ComplexMatrix identity = ComplexMatrix::identity(spec.dim_in());

  double worst = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t ip = 0; ip < l; ++ip) {
      // <i'|phi_i> sqrt(p_i) and <i|phi_i'> sqrt(p_i'); zero for weightless slots.
      const cplx lhs_coef = i < spec.component_count()
                                ? spec.flags()[i][ip] * std::sqrt(slot_weight(spec, i))
                                : cplx(0.0);
      const cplx rhs_coef = ip < spec.component_count()
                                ? spec.flags()[ip][i] * std::sqrt(slot_weight(spec, ip))
                                : cplx(0.0);
      for (std::size_t j = 0; j < r; ++j) {
        const ComplexMatrix* k = slot_kraus(spec, i, j, identity);
        if (k == nullptr) continue;
        for (std::size_t jp = 0; jp < r; ++jp) {
          const ComplexMatrix* kp = slot_kraus(spec, ip, jp, identity);
          if (kp == nullptr) continue;
          const ComplexMatrix after = matmul(*kp, *k);   // K^(i')_j' K^(i)_j
          const ComplexMatrix before = matmul(*k, *kp);  // K^(i)_j K^(i')_j'
          scale = std::max({scale, after.operator_norm(), before.operator_norm()});
          const double res = (after * lhs_coef - before * rhs_coef).frobenius_norm();
          worst = std::max(worst, res);
        }
      }
    }
  }
  const double normalized = scale > 0.0 ? worst / scale : worst;
  return {normalized <= tol, normalized};
}

KrausChannel degrading_map(const FlaggedSpec& spec) {
  require_flag_room(spec, "degrading_map");
  if (spec.dim_in() != spec.dim_out()) {
    throw DimensionError("degrading_map: components must map a space to itself");
  }
  const std::size_t dim = spec.dim_out();
  const std::size_t l = spec.flag_dim();
  const std::size_t r = spec.max_kraus();
  const ComplexMatrix identity = ComplexMatrix::identity(dim);

  // W_a = (<a| (x) I_env) V', V'|c>|i> = sum_j K^(i)_j|c> (x) |i>|j>.
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(dim);
  for (std::size_t a = 0; a < dim; ++a) {
    ComplexMatrix w(l * r, dim * l);
    for (std::size_t i = 0; i < l; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        const ComplexMatrix* k = slot_kraus(spec, i, j, identity);
        if (k == nullptr) continue;
        for (std::size_t c = 0; c < dim; ++c) w(i * r + j, c * l + i) = (*k)(a, c);
      }
    }
    kraus.push_back(std::move(w));
  }
  return KrausChannel(std::move(kraus));
}

double degrading_residual(const FlaggedSpec& spec) {
  return degrading_residual(build_flagged(spec), degrading_map(spec));
}

UnitaryMixtureFlags unitary_mixture_flags(double u) {
  if (!(u >= 0.5 && u <= 1.0)) {
    throw std::domain_error("unitary_mixture_flags: unitary weight must lie in [1/2, 1], got " +
                            std::to_string(u));
  }
  const double q = 1.0 - u;
  return {{std::sqrt(std::max(0.0, (u - q) / u)), std::sqrt(q / u)}, {1.0, 0.0}};
}

FlaggedSpec unitary_mixture_spec(double u, const KrausChannel& rest) {
  auto flags = unitary_mixture_flags(u);
  std::vector<FlagComponent> comps;
  comps.push_back({u, KrausChannel::identity(rest.dim_in())});
  comps.push_back({1.0 - u, rest});
  return FlaggedSpec(std::move(comps), {std::move(flags.unitary_flag), std::move(flags.other_flag)});
}

double unitary_mixture_bound(double u, const KrausChannel& rest, InputFamily strategy) {
  return q1_maximize(build_flagged(unitary_mixture_spec(u, rest)), strategy).value;
}

}  // namespace flagcap
