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

constexpr double kRadicandTol = 1e-12;

double checked_sqrt(double radicand, const char* what) {
  if (radicand < -kRadicandTol) {
    throw std::domain_error(std::string("infeasible depolarizing flag parameters: ") + what +
                            " = " + std::to_string(radicand));
  }
  return std::sqrt(std::max(radicand, 0.0));
}

double xlogx(double x) { return x > kEntropyClamp ? -x * std::log2(x) : 0.0; }

void check_probability(double p, const char* who) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error(std::string(who) + ": p must lie in [0, 1], got " + std::to_string(p));
  }
}

}  // namespace

double clamp_bound(double v) { return v < 0.0 ? 0.0 : v; }

double hashing_value(const PauliWeights& w) { return w.log_dim() - w.entropy(); }

PauliWeights depolarizing_weights(int d, double p) {
  check_probability(p, "depolarizing");
  if (d < 2) throw std::invalid_argument("depolarizing: d must be at least 2");
  const std::size_t labels = static_cast<std::size_t>(d) * static_cast<std::size_t>(d);
  const double off = p / static_cast<double>(labels);
  std::vector<double> w(labels, off);
  w[0] = 1.0 - static_cast<double>(labels - 1) * off;
  return PauliWeights(d, 1, std::move(w));
}

KrausChannel depolarizing(int d, double p) { return pauli_channel(depolarizing_weights(d, p)); }

double dep_max_beta_sq(int d, double p) {
  const double k = static_cast<double>(d) * d - 1.0;
  const double off = p / (k + 1.0);
  return std::min(off, (1.0 - k * off) / k);
}

DepFlagParams dep_flag_params(int d, double p, double t) {
  check_probability(p, "dep_flag_params");
  const double k = static_cast<double>(d) * d - 1.0;
  const double off = p / (k + 1.0);
  DepFlagParams out;
  out.beta = checked_sqrt(t, "beta^2");
  out.alpha = checked_sqrt(1.0 - k * off - k * t, "alpha^2");
  out.gamma = checked_sqrt(off - t, "gamma^2");
  return out;
}

DepFlagSpectrum dep_flag_spectrum(const DepFlagParams& params, int d) {
  if (params.alpha < 0.0 || params.beta < 0.0 || params.gamma < 0.0) {
    throw std::domain_error("dep_flag_spectrum: amplitudes must be nonnegative");
  }
  const double k = static_cast<double>(d) * d - 1.0;
  const double a2 = params.alpha * params.alpha;
  const double b2 = params.beta * params.beta;
  const double g2 = params.gamma * params.gamma;
  const double sum = params.alpha + params.gamma;
  const double disc = (a2 - g2) * (a2 - g2) + 4.0 * k * b2 * sum * sum;
  const double mean = a2 + g2 + 2.0 * k * b2;
  DepFlagSpectrum s;
  s.v_plus = 0.5 * (mean + std::sqrt(disc));
  s.v_minus = 0.5 * (mean - std::sqrt(disc));
  s.rest = g2;
  if (s.v_minus < -kRadicandTol) {
    throw std::domain_error("dep_flag_spectrum: negative eigenvalue, parameters infeasible");
  }
  s.v_minus = std::max(s.v_minus, 0.0);
  return s;
}

double dep_flag_entropy(const DepFlagParams& params, int d) {
  const auto s = dep_flag_spectrum(params, d);
  const double mult = static_cast<double>(d) * d - 2.0;
  return mult * xlogx(s.rest) + xlogx(s.v_plus) + xlogx(s.v_minus);
}

std::vector<FlagVector> dep_flags(const DepFlagParams& params, int d, double p) {
  const auto w = depolarizing_weights(d, p);
  const std::size_t labels = w.size();
  std::vector<FlagVector> flags(labels, FlagVector(labels));
  const double inv0 = 1.0 / std::sqrt(w[0]);
  flags[0][0] = params.alpha * inv0;
  for (std::size_t x = 1; x < labels; ++x) flags[0][x] = params.beta * inv0;
  const double off = w[1];
  for (std::size_t x = 1; x < labels; ++x) {
    if (off == 0.0) {
      flags[x][x] = 1.0;
      continue;
    }
    const double inv = 1.0 / std::sqrt(off);
    flags[x][0] = params.beta * inv;
    flags[x][x] = params.gamma * inv;
  }
  return flags;
}

DepMinimum dep_fmin(int d, double p) {
  const auto w = depolarizing_weights(d, p);
  const double base = hashing_value(w);
  const double t_max = std::max(dep_max_beta_sq(d, p), 0.0);
  auto value_at = [&](double t) { return base + dep_flag_entropy(dep_flag_params(d, p, t), d); };

  DepMinimum out;
  if (t_max == 0.0) {
    out.value = value_at(0.0);
    out.params = dep_flag_params(d, p, 0.0);
    return out;
  }
  const optimize::ScalarProblem problem{value_at, 0.0, t_max, optimize::Goal::minimize};
  const auto best = optimize::coarse_grid_then_refine(problem, 64, 1e-13);
  out.value = best.value;
  out.beta_sq = best.arg;
  out.params = dep_flag_params(d, p, best.arg);
  return out;
}

double dep_fmin_bound(int d, double p) { return dep_fmin(d, p).value; }

double no_cloning_bound(int d, double p) {
  check_probability(p, "no_cloning_bound");
  const double dd = static_cast<double>(d);
  return clamp_bound((dd - 2.0 * p * (dd + 1.0)) / dd * std::log2(dd));
}

}  // namespace flagcap
