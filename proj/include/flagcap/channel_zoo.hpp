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

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "flagcap/channel_core.hpp"
#include "flagcap/curve.hpp"
#include "flagcap/flagged_ext.hpp"
#include "flagcap/pauli_bounds.hpp"

namespace flagcap {

/// Bounds are capacities, so negative values are reported as 0. NaN passes
/// through.
double clamp_bound(double v);

/// n log2 d - S(w): coherent information of a Pauli channel at I/d^n.
double hashing_value(const PauliWeights& w);

// Depolarizing channel -----------------------------------------------------

/// Weight 1 - (d^2 - 1) p / d^2 on the identity, p / d^2 on every other label.
PauliWeights depolarizing_weights(int d, double p);
KrausChannel depolarizing(int d, double p);

/// Real nonnegative amplitudes of the symmetric |Psi>: alpha on |0,0>, beta on
/// |0,x> and |x,0>, gamma on |x,x> for every nonzero label x.
struct DepFlagParams {
  double alpha = 1.0;
  double beta = 0.0;
  double gamma = 0.0;
};

/// Solves the marginal constraints with beta^2 = t. Throws std::domain_error
/// when a radicand is below -1e-12.
DepFlagParams dep_flag_params(int d, double p, double t);

/// Largest admissible t = beta^2.
double dep_max_beta_sq(int d, double p);

struct DepFlagSpectrum {
  double v_plus = 0.0;
  double v_minus = 0.0;
  /// gamma^2, with multiplicity d^2 - 2.
  double rest = 0.0;
};

DepFlagSpectrum dep_flag_spectrum(const DepFlagParams& params, int d);

/// Entropy of Tr_C |Psi><Psi| in bits, in closed form.
double dep_flag_entropy(const DepFlagParams& params, int d);

/// Flags phi_x in canonical label order; weight-zero labels get |x>.
std::vector<FlagVector> dep_flags(const DepFlagParams& params, int d, double p);

struct DepMinimum {
  double value = 0.0;
  double beta_sq = 0.0;
  DepFlagParams params;
};

/// Minimum of log2 d - S(w) + S(flags) over the one-parameter family.
DepMinimum dep_fmin(int d, double p);
double dep_fmin_bound(int d, double p);

/// (1 - 2p(d + 1)/d) log2 d, clamped at 0.
double no_cloning_bound(int d, double p);

// Paired-flag qubit Pauli channels (BB84, GAD at N = 1/2) -------------------

/// Flag-family coordinates; the amplitudes follow as alpha = a sqrt(m/w0),
/// beta = b sqrt(z/w0), gamma = c sqrt(z/m) for identity weight w0, paired
/// weight m and single weight z.
struct BB84FlagParams {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

/// Canonical label positions of (identity, first paired, second paired,
/// single) for a qubit Pauli channel whose two paired labels share a weight.
struct PairedLayout {
  std::array<std::size_t, 4> canonical;
};

/// (I, X, Z, Y): X and Z carry p(1 - p).
inline constexpr PairedLayout kBB84Layout{{0, 2, 1, 3}};
/// (I, X, Y, Z): X and Y carry y/4.
inline constexpr PairedLayout kGadHalfLayout{{0, 2, 3, 1}};

/// Flags in canonical order, or nullopt outside the feasible region.
std::optional<std::vector<FlagVector>> paired_flags(const PauliWeights& w,
                                                    const PairedLayout& layout,
                                                    const BB84FlagParams& params);

struct PairedMinimum {
  double value = 0.0;
  BB84FlagParams params;
  std::vector<FlagVector> flags;
};

/// Multistart simplex over (a, b, c) from the 5x5x5 grid on
/// [-1, 1] x [-1, 1] x [-1/sqrt 2, 1/sqrt 2] and (1, 1, 0), feasible ones only.
PairedMinimum paired_fmin(const PauliWeights& w, const PairedLayout& layout);

PauliWeights bb84_weights(double p);
KrausChannel bb84(double p);
PairedMinimum bb84_fmin(double p);
double bb84_fmin_bound(double p);
/// Value of the family at (a, b, c) = (1, 1, 0); nullopt once that point is
/// infeasible (identity weight below 1/2).
std::optional<double> bb84_reference_bound(double p);

// Generalized amplitude damping ---------------------------------------------

struct GadParams {
  double y = 0.0;
  double N = 0.0;

  double s() const;
  /// Throws std::domain_error outside [0, 1]^2.
  void validate() const;
};

/// {diag(1, s), sqrt(y) |0><1|}
KrausChannel amplitude_damping(double y);
/// {sqrt(N) K1, sqrt(N) K2, sqrt(1-N) X K1 X, sqrt(1-N) X K2 X}
KrausChannel gad(const GadParams& params);

enum class A3Form {
  /// diag(N - (1-N)s, Ns - (1-N))
  corrected,
  /// diag((1-N) - Ns, (1-N)s - N), not trace preserving unless N = 1/2.
  printed,
};

/// A1 = sqrt(N(1-N)) (1 + s) I, A2 = sqrt((1-N) y) |1><0|, A3,
/// A4 = sqrt(N y) |0><1|. Not validated.
std::vector<ComplexMatrix> gad_alt_kraus_operators(const GadParams& params,
                                                   A3Form form = A3Form::corrected);
/// The corrected set as a validated channel.
KrausChannel gad_alt_kraus(const GadParams& params);
/// N(1-N)(1+s)^2, the weight of the identity component of the alternative set.
double gad_unitary_weight(const GadParams& params);

/// Quantum capacity of the amplitude damping channel, 0 for y >= 1/2.
double ad_capacity(double y);

/// Pauli weights of the N = 1/2 channel in canonical order.
PauliWeights gad_half_weights(double y);
PairedMinimum gad_fmin_half_min(double y);
double gad_fmin_half(double y);

/// 2N Q_fmin(y) + (1 - 2N) Q(A_y), with N > 1/2 mapped to 1 - N.
double gad_conv_bound(double y, double N);

/// Q(A_y); bounds the GAD capacity at every N through the orthogonal-flag
/// extension.
double gad_orthogonal_flag_bound(double y);

/// N A_y (x) |0><0| + (1 - N) X A_y X (x) |1><1|.
FlaggedSpec gad_orthogonal_spec(const GadParams& params);

/// W_y (x) <0| + W_y X (x) <1| with W_y = A_{(1-2y)/(1-y)}, into the
/// environment of build_flagged(gad_orthogonal_spec). Requires y <= 1/2.
KrausChannel gad_orthogonal_degrading_map(double y);

/// Coherent information of the GAD maximized over diagonal inputs.
double gad_q1_lower(const GadParams& params);

// Pipelines -----------------------------------------------------------------

/// Thrown when a flagged extension fails verification; no bound is emitted.
class ExtensionCheckError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExtensionAudit {
  std::size_t checked = 0;
  double max_condition_residual = 0.0;
  double max_degrading_residual = 0.0;
};

struct PipelineResult {
  /// Parameter column name ("p" or "y").
  std::string parameter;
  std::vector<BoundCurve> curves;
  ExtensionAudit audit;

  const BoundCurve& curve(const std::string& label) const;
};

inline constexpr double kConditionTol = 1e-10;
inline constexpr double kDegradingTol = 1e-8;

/// Grid rows are independent and run on `threads` workers (0: one per
/// hardware thread). Results do not depend on the worker count; on failure
/// the error of the first failing row in grid order is rethrown.

/// Curves q1_lower, q_fmin, q_nocloning, q_conv.
PipelineResult dep_pipeline(int d, const std::vector<double>& p_grid, std::size_t threads = 0);
/// Curves q1_lower, q_fmin, q_at_110 (NaN where (1,1,0) is infeasible).
PipelineResult bb84_pipeline(const std::vector<double>& p_grid, std::size_t threads = 0);
/// Curves q1_lower, q_ad, q_fmin_half, q_conv.
PipelineResult gad_pipeline(double N, const std::vector<double>& y_grid, std::size_t threads = 0);

}  // namespace flagcap
