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
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "flagcap/flagged_ext.hpp"
#include "flagcap/pauli_algebra.hpp"

namespace flagcap {

/// Probability distribution over the d^{2n} Weyl labels, in
/// pauli_twirl_basis order.
class PauliWeights {
 public:
  PauliWeights(int d, std::size_t n, std::vector<double> w);

  int d() const { return d_; }
  std::size_t n() const { return n_; }
  std::size_t size() const { return w_.size(); }
  const std::vector<double>& values() const { return w_; }
  double operator[](std::size_t i) const { return w_[i]; }
  /// Shannon entropy S(w) in bits.
  double entropy() const;
  /// n log2 d
  double log_dim() const;

 private:
  int d_;
  std::size_t n_;
  std::vector<double> w_;
};

/// rho -> sum_x w_x W_x rho W_x^dagger, Kraus operators in canonical order.
KrausChannel pauli_channel(const PauliWeights& w);

/// The flagged Pauli channel as a FlaggedSpec with component x = W_x.
FlaggedSpec flagged_pauli_spec(const PauliWeights& w, const std::vector<FlagVector>& flags);

/// |Psi> = sum_x sqrt(w_x) |x>_C (x) |phi_x>_F on H_C (x) H_F, stored as the
/// coefficient matrix M[x][y] = <x, y|Psi>.
class PsiState {
 public:
  PsiState(int d, std::size_t n, ComplexMatrix coefficients);

  static PsiState from_flags(const PauliWeights& w, const std::vector<FlagVector>& flags);

  int d() const { return d_; }
  std::size_t n() const { return n_; }
  const ComplexMatrix& coefficients() const { return m_; }
  /// Amplitudes of |Psi> with C as the leading factor.
  std::vector<cplx> amplitudes() const;
  /// Row norms squared, i.e. the induced weights.
  std::vector<double> marginals() const;
  /// Normalized flags phi_x = M[x][.] / sqrt(w_x); |x> when w_x = 0.
  std::vector<FlagVector> flags() const;
  /// Tr_C |Psi><Psi|.
  ComplexMatrix flag_state() const;

 private:
  int d_;
  std::size_t n_;
  ComplexMatrix m_;
};

/// Orthogonal projector onto span{(|x>|y> - c_xy |y>|x>)/sqrt 2} over
/// unordered pairs x < y (canonical order) with <x, y> = j mod d. The phase
/// c_xy = exp(-2 pi i j / d) makes Psi orthogonal to every Pi_j exactly when
/// the flagged Pauli channel meets the swap degradability condition.
ComplexMatrix symplectic_projector(int d, std::size_t n, int j);

struct ConstraintReport {
  bool passed = false;
  /// max_j <Psi|Pi_j|Psi>
  double projector_residual = 0.0;
  /// max_x |<Psi|(|x><x| (x) I)|Psi> - w_x|
  double marginal_residual = 0.0;
};

ConstraintReport check_psi_constraints(const PsiState& psi, const PauliWeights& w, double tol);

struct PauliBound {
  double value = 0.0;
  /// False when the flags break the constraints; the value is then not a
  /// capacity bound.
  bool valid = false;
  double constraint_residual = 0.0;
};

/// n log2 d - S(w) + S(sum_x w_x |phi_x><phi_x|).
PauliBound flagged_pauli_q1(const PauliWeights& w, const std::vector<FlagVector>& flags);

/// Just the value, without constraint evaluation. Real flags take a faster
/// path.
double flagged_pauli_value(const PauliWeights& w, const std::vector<FlagVector>& flags);

/// Parametrized flag family whose members satisfy the constraints by
/// construction. `flags` returns nullopt outside the feasible region.
struct FlagFamily {
  std::size_t dimension = 1;
  std::vector<double> lower;
  std::vector<double> upper;
  std::function<std::optional<std::vector<FlagVector>>(std::span<const double>)> flags;
  /// Start points for dimension > 1.
  std::vector<std::vector<double>> starts;
};

struct MinimizeSettings {
  std::size_t grid_points = 64;
  double tol = 1e-10;
  std::size_t max_iter = 2000;
};

struct FamilyMinimum {
  double value = 0.0;
  std::vector<double> params;
};

/// Minimizes flagged_pauli_value over the family: coarse grid and golden
/// section for one parameter, multistart simplex otherwise.
FamilyMinimum pauli_bound_minimize(const PauliWeights& w, const FlagFamily& family,
                                   const MinimizeSettings& settings = {});

}  // namespace flagcap
