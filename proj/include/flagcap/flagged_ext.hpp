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

#include <cstddef>
#include <vector>

#include "flagcap/channel_core.hpp"

namespace flagcap {

using FlagVector = std::vector<cplx>;

struct FlagComponent {
  double weight = 0.0;
  KrausChannel channel;
};

/// Convex decomposition sum_i p_i Lambda_i together with one flag state per
/// component. The flagged channel is sum_i p_i Lambda_i (x) |phi_i><phi_i|.
///
/// Flag basis vector |i> is paired with component i; the flag space may be
/// larger than the number of components.
class FlaggedSpec {
 public:
  FlaggedSpec(std::vector<FlagComponent> components, std::vector<FlagVector> flags);

  const std::vector<FlagComponent>& components() const { return components_; }
  const std::vector<FlagVector>& flags() const { return flags_; }
  std::size_t component_count() const { return components_.size(); }
  std::size_t flag_dim() const { return flags_.front().size(); }
  std::size_t dim_in() const { return components_.front().channel.dim_in(); }
  std::size_t dim_out() const { return components_.front().channel.dim_out(); }
  /// Largest Kraus count among components.
  std::size_t max_kraus() const;

  /// sum_i p_i Lambda_i without flags.
  KrausChannel unflagged() const;

 private:
  std::vector<FlagComponent> components_;
  std::vector<FlagVector> flags_;
};

/// Kraus operators sqrt(p_i) K_j^(i) (x) |phi_i>, indexed i * r + j with i
/// running over the whole flag basis and j over r = max_kraus(); absent
/// operators are zero. The environment of the canonical dilation is then
/// B (x) B-bar with dims (flag_dim, r).
KrausChannel build_flagged(const FlaggedSpec& spec);

struct DegradabilityReport {
  bool passed = false;
  /// Max over (i, j, i', j') of the Frobenius residual of the swap
  /// condition, divided by the largest operator norm of the products.
  double max_residual = 0.0;
};

/// Evaluates <i'|phi_i> sqrt(p_i) K'_j' K_j = <i|phi_i'> sqrt(p_i') K_j K'_j'
/// for all quadruples. Flag basis directions beyond the component count act
/// as weight-zero identity components.
DegradabilityReport check_degradability(const FlaggedSpec& spec, double tol);

/// Degrading map W with Stinespring V'|psi>|i>_F = V_i|psi>, mapping the
/// flagged output onto the environment of build_flagged(spec). Constructible
/// for any spec; W o flagged equals the complement only when the check passes.
KrausChannel degrading_map(const FlaggedSpec& spec);

/// Trace distance between Choi(W o flagged) and Choi(complement of flagged).
double degrading_residual(const FlaggedSpec& spec);

/// Flags for u * id + (1 - u) * Lambda_1: component 0 is the identity (flag
/// phi_0), component 1 the rest (flag phi_1 = |0>).
struct UnitaryMixtureFlags {
  FlagVector unitary_flag;
  FlagVector other_flag;
};

UnitaryMixtureFlags unitary_mixture_flags(double u);

FlaggedSpec unitary_mixture_spec(double u, const KrausChannel& rest);

/// Q1 of the flagged extension built from unitary_mixture_flags(u); an upper
/// bound on Q and P of u * id + (1 - u) * rest.
double unitary_mixture_bound(double u, const KrausChannel& rest,
                             InputFamily strategy = InputFamily::full_qubit);

}  // namespace flagcap
