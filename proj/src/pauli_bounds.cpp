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

#include "flagcap/pauli_bounds.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "flagcap/optimize.hpp"

namespace flagcap {

namespace {

constexpr double kWeightSumTol = 1e-12;
constexpr double kConstraintTol = 1e-10;

std::size_t label_count(int d, std::size_t n) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < 2 * n; ++i) count *= static_cast<std::size_t>(d);
  return count;
}

int mod(int a, int m) { return ((a % m) + m) % m; }

// exp(-2 pi i j / d), the phase pairing |x>|y> with |y>|x> in Pi_j.
cplx pair_phase(int d, int j) {
  return std::polar(1.0, -2.0 * std::numbers::pi * j / d);
}

}  // namespace

PauliWeights::PauliWeights(int d, std::size_t n, std::vector<double> w)
    : d_(d), n_(n), w_(std::move(w)) {
  if (d < 2 || n == 0) throw std::invalid_argument("PauliWeights: need d >= 2, n >= 1");
  if (w_.size() != label_count(d, n)) {
    throw DimensionError("PauliWeights: expected " + std::to_string(label_count(d, n)) +
                         " weights, got " + std::to_string(w_.size()));
  }
  double total = 0.0;
  for (double v : w_) {
    if (!(v >= 0.0)) throw std::domain_error("PauliWeights: negative weight");
    total += v;
  }
  if (std::abs(total - 1.0) > kWeightSumTol) {
    throw std::domain_error("PauliWeights: weights sum to " + std::to_string(total));
  }
}

double PauliWeights::entropy() const { return shannon_entropy(w_); }

double PauliWeights::log_dim() const { return static_cast<double>(n_) * std::log2(d_); }

KrausChannel pauli_channel(const PauliWeights& w) {
  const auto basis = pauli_twirl_basis(w.d(), w.n());
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(basis.size());
  for (std::size_t x = 0; x < basis.size(); ++x) {
    kraus.push_back(weyl_operator(basis[x]) * cplx(std::sqrt(w[x])));
  }
  return KrausChannel(std::move(kraus));
}

FlaggedSpec flagged_pauli_spec(const PauliWeights& w, const std::vector<FlagVector>& flags) {
  const auto basis = pauli_twirl_basis(w.d(), w.n());
  std::vector<FlagComponent> comps;
  comps.reserve(basis.size());
  for (std::size_t x = 0; x < basis.size(); ++x) {
    comps.push_back({w[x], KrausChannel::unitary(weyl_operator(basis[x]))});
  }
  return FlaggedSpec(std::move(comps), flags);
}

PsiState::PsiState(int d, std::size_t n, ComplexMatrix coefficients)
    : d_(d), n_(n), m_(std::move(coefficients)) {
  const std::size_t labels = label_count(d, n);
  if (m_.rows() != labels || m_.cols() != labels) {
    throw DimensionError("PsiState: coefficient matrix must be " + std::to_string(labels) +
                         "x" + std::to_string(labels));
  }
  if (std::abs(m_.frobenius_norm() - 1.0) > kConstraintTol) {
    throw std::domain_error("PsiState: not normalized");
  }
}

PsiState PsiState::from_flags(const PauliWeights& w, const std::vector<FlagVector>& flags) {
  const std::size_t labels = w.size();
  if (flags.size() != labels) throw DimensionError("PsiState: need one flag per Weyl label");
  ComplexMatrix m(labels, labels);
  for (std::size_t x = 0; x < labels; ++x) {
    if (flags[x].size() != labels) {
      throw DimensionError("PsiState: flag space must have dimension d^{2n}");
    }
    const double amp = std::sqrt(w[x]);
    for (std::size_t y = 0; y < labels; ++y) m(x, y) = amp * flags[x][y];
  }
  return PsiState(w.d(), w.n(), std::move(m));
}

std::vector<cplx> PsiState::amplitudes() const {
  const auto e = m_.entries();
  return {e.begin(), e.end()};
}

std::vector<double> PsiState::marginals() const {
  std::vector<double> out(m_.rows(), 0.0);
  for (std::size_t x = 0; x < m_.rows(); ++x) {
    for (std::size_t y = 0; y < m_.cols(); ++y) out[x] += std::norm(m_(x, y));
  }
  return out;
}

std::vector<FlagVector> PsiState::flags() const {
  const auto w = marginals();
  std::vector<FlagVector> out(m_.rows(), FlagVector(m_.cols()));
  for (std::size_t x = 0; x < m_.rows(); ++x) {
    if (w[x] <= 0.0) {
      out[x][x] = 1.0;
      continue;
    }
    const double inv = 1.0 / std::sqrt(w[x]);
    for (std::size_t y = 0; y < m_.cols(); ++y) out[x][y] = m_(x, y) * inv;
  }
  return out;
}

ComplexMatrix PsiState::flag_state() const {
  // rho_F[y][y'] = sum_x M[x][y] conj(M[x][y'])
  ComplexMatrix conj_m = m_;
  for (auto& z : conj_m.entries()) z = std::conj(z);
  return matmul(m_.transpose(), conj_m);
}

ComplexMatrix symplectic_projector(int d, std::size_t n, int j) {
  if (j < 0 || j >= d) throw std::invalid_argument("symplectic_projector: j must lie in [0, d)");
  const auto basis = pauli_twirl_basis(d, n);
  const std::size_t labels = basis.size();
  const cplx c = pair_phase(d, j);
  const double s = 1.0 / std::numbers::sqrt2;
  ComplexMatrix proj(labels * labels, labels * labels);
  for (std::size_t x = 0; x < labels; ++x) {
    for (std::size_t y = x + 1; y < labels; ++y) {
      if (mod(symplectic_form(basis[x], basis[y]), d) != j) continue;
      const std::size_t xy = x * labels + y;
      const std::size_t yx = y * labels + x;
      // v = s|xy> - s c|yx>
      proj(xy, xy) += s * s;
      proj(yx, yx) += s * s;
      proj(xy, yx) += -s * s * std::conj(c);
      proj(yx, xy) += -s * s * c;
    }
  }
  return proj;
}

ConstraintReport check_psi_constraints(const PsiState& psi, const PauliWeights& w, double tol) {
  if (psi.d() != w.d() || psi.n() != w.n()) {
    throw DimensionError("check_psi_constraints: state and weights describe different systems");
  }
  const auto basis = pauli_twirl_basis(w.d(), w.n());
  const auto& m = psi.coefficients();
  const int d = w.d();
  std::vector<double> per_projector(static_cast<std::size_t>(d), 0.0);
  for (std::size_t x = 0; x < basis.size(); ++x) {
    for (std::size_t y = x + 1; y < basis.size(); ++y) {
      const int j = mod(symplectic_form(basis[x], basis[y]), d);
      // <v|Psi> with v = (|xy> - c|yx>)/sqrt 2
      const cplx overlap = (m(x, y) - std::conj(pair_phase(d, j)) * m(y, x)) / std::numbers::sqrt2;
      per_projector[static_cast<std::size_t>(j)] += std::norm(overlap);
    }
  }
  ConstraintReport report;
  for (double v : per_projector) report.projector_residual = std::max(report.projector_residual, v);
  const auto marg = psi.marginals();
  for (std::size_t x = 0; x < marg.size(); ++x) {
    report.marginal_residual = std::max(report.marginal_residual, std::abs(marg[x] - w[x]));
  }
  report.passed = report.projector_residual <= tol && report.marginal_residual <= tol;
  return report;
}

double flagged_pauli_value(const PauliWeights& w, const std::vector<FlagVector>& flags) {
  if (flags.size() != w.size()) throw DimensionError("flagged_pauli_value: one flag per label");
  const std::size_t l = flags.front().size();
  bool real = true;
  for (const auto& f : flags) {
    if (f.size() != l) throw DimensionError("flagged_pauli_value: ragged flags");
    for (const auto& z : f) real = real && z.imag() == 0.0;
  }
  std::vector<double> spectrum;
  if (real) {
    Eigen::MatrixXd rho = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(l),
                                                static_cast<Eigen::Index>(l));
    for (std::size_t x = 0; x < flags.size(); ++x) {
      if (w[x] == 0.0) continue;
      Eigen::VectorXd v(static_cast<Eigen::Index>(l));
      for (std::size_t y = 0; y < l; ++y) v(static_cast<Eigen::Index>(y)) = flags[x][y].real();
      rho.noalias() += w[x] * v * v.transpose();
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(rho, Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    spectrum.assign(ev.data(), ev.data() + ev.size());
  } else {
    ComplexMatrix rho(l, l);
    for (std::size_t x = 0; x < flags.size(); ++x) {
      if (w[x] == 0.0) continue;
      rho += ComplexMatrix::outer(flags[x]) * cplx(w[x]);
    }
    spectrum = eigvals_hermitian(rho);
  }
  return w.log_dim() - w.entropy() + spectrum_entropy(spectrum);
}

PauliBound flagged_pauli_q1(const PauliWeights& w, const std::vector<FlagVector>& flags) {
  PauliBound bound;
  bound.value = flagged_pauli_value(w, flags);
  const auto report = check_psi_constraints(PsiState::from_flags(w, flags), w, kConstraintTol);
  bound.valid = report.passed;
  bound.constraint_residual = std::max(report.projector_residual, report.marginal_residual);
  return bound;
}

FamilyMinimum pauli_bound_minimize(const PauliWeights& w, const FlagFamily& family,
                                   const MinimizeSettings& settings) {
  if (family.dimension == 0 || family.lower.size() != family.dimension ||
      family.upper.size() != family.dimension) {
    throw std::invalid_argument("pauli_bound_minimize: malformed family bounds");
  }
  auto objective = [&](std::span<const double> params) {
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (params[i] < family.lower[i] || params[i] > family.upper[i]) {
        return std::numeric_limits<double>::infinity();
      }
    }
    const auto flags = family.flags(params);
    return flags ? flagged_pauli_value(w, *flags) : std::numeric_limits<double>::infinity();
  };

  if (family.dimension == 1) {
    if (family.lower[0] > family.upper[0]) {
      throw optimize::OptimizationError("pauli_bound_minimize: empty feasible interval");
    }
    optimize::ScalarProblem problem{
        [&](double t) { return objective(std::span<const double>(&t, 1)); }, family.lower[0],
        family.upper[0], optimize::Goal::minimize};
    const auto best = optimize::coarse_grid_then_refine(problem, settings.grid_points, settings.tol);
    return {best.value, {best.arg}};
  }

  optimize::SimplexProblem problem;
  problem.objective = objective;
  problem.starts = family.starts;
  problem.goal = optimize::Goal::minimize;
  const auto best = optimize::multistart_simplex(problem, settings.tol, settings.max_iter);
  return {best.value, best.arg};
}

}  // namespace flagcap
