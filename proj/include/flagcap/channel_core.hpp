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
#include <span>
#include <vector>

#include "flagcap/operators.hpp"

namespace flagcap {

/// CPTP map rho -> sum_j K_j rho K_j^dagger.
class KrausChannel {
 public:
  static constexpr double kDefaultTol = 1e-9;

  /// Validates shapes and sum_j K_j^dagger K_j = I within `tol`.
  explicit KrausChannel(std::vector<ComplexMatrix> kraus, double tol = kDefaultTol);

  static KrausChannel identity(std::size_t dim);
  static KrausChannel unitary(const ComplexMatrix& u);

  std::size_t dim_in() const { return dim_in_; }
  std::size_t dim_out() const { return dim_out_; }
  std::size_t kraus_count() const { return kraus_.size(); }
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }

  /// Largest entry of sum_j K_j^dagger K_j - I.
  double cptp_residual() const;

 private:
  std::vector<ComplexMatrix> kraus_;
  std::size_t dim_in_ = 0;
  std::size_t dim_out_ = 0;
};

/// sum_j K_j^dagger K_j for an arbitrary operator list (no validation).
ComplexMatrix kraus_completeness(std::span<const ComplexMatrix> kraus);

/// (Lambda (x) id)(|Omega><Omega|) with |Omega> = sum_k |k>|k> unnormalized;
/// the output factor comes first.
struct ChoiMatrix {
  ComplexMatrix mat;
  std::size_t dim_in = 0;
  std::size_t dim_out = 0;
};

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho);
/// Action on an arbitrary operator, no state validation.
ComplexMatrix apply(const KrausChannel& ch, const ComplexMatrix& x);

/// V = sum_j K_j (x) |j>_E, a (dim_out * r) x dim_in isometry. The
/// environment is the trailing factor.
ComplexMatrix stinespring(const KrausChannel& ch);

/// Channel into the environment of stinespring(ch); one Kraus operator per
/// output basis vector.
KrausChannel complementary(const KrausChannel& ch);

ChoiMatrix choi(const KrausChannel& ch);

/// Applies a channel through its Choi matrix:
/// Lambda(rho) = tr_in[C (I (x) rho^T)].
ComplexMatrix apply_choi(const ChoiMatrix& c, const ComplexMatrix& rho);

struct EqualityResult {
  bool equal = false;
  /// Trace distance between the Choi matrices.
  double residual = 0.0;
};

/// Equal iff trace_distance(choi(a), choi(b)) <= tol * dim_in.
EqualityResult channels_equal(const KrausChannel& a, const KrausChannel& b, double tol);

/// after o before; Kraus set is every product, count multiplies.
KrausChannel compose(const KrausChannel& after, const KrausChannel& before);

/// Trace distance between Choi(degrader o ch) and Choi(complementary(ch)).
/// Zero exactly when the degrader maps the output onto the canonical
/// environment.
double degrading_residual(const KrausChannel& ch, const KrausChannel& degrader);

/// S(Lambda rho) - S(complement rho), in bits.
double coherent_information(const KrausChannel& ch, const DensityMatrix& rho);
double coherent_information(const KrausChannel& ch, const KrausChannel& complement,
                            const ComplexMatrix& rho);

enum class InputFamily {
  /// diag(1 - t, t) on a qubit, golden-section over t after a coarse grid.
  diagonal,
  /// Whole Bloch ball, multistart simplex.
  full_qubit,
  /// Only I / d.
  maximally_mixed,
};

struct Q1Result {
  double value = 0.0;
  ComplexMatrix input;
};

/// Max of coherent information over the chosen input family. Equals Q1 = Q
/// when the channel is degradable and the family contains an optimizer.
Q1Result q1_maximize(const KrausChannel& ch, InputFamily strategy);

}  // namespace flagcap
