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
#include <span>
#include <stdexcept>
#include <vector>

namespace flagcap::optimize {

enum class Goal { minimize, maximize };

/// One-dimensional problem on [lo, hi].
struct ScalarProblem {
  std::function<double(double)> objective;
  double lo = 0.0;
  double hi = 1.0;
  Goal goal = Goal::minimize;
};

struct ScalarResult {
  double arg = 0.0;
  double value = 0.0;
};

/// Thrown when an objective returns NaN or infinity where a finite value is
/// required, or when no feasible start exists.
class OptimizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Golden-section search; the bracket shrinks until its width is <= tol.
/// Assumes a unimodal objective. The returned value is the best evaluated
/// point, endpoints included.
ScalarResult golden_section(const ScalarProblem& problem, double tol);

/// Uniform scan with `grid_points` samples, then golden-section inside the
/// two cells around the best sample. Never returns worse than the best
/// sample.
ScalarResult coarse_grid_then_refine(const ScalarProblem& problem,
                                     std::size_t grid_points, double tol);

/// Low-dimensional (k <= 4) problem for the Nelder-Mead search.
struct SimplexProblem {
  std::function<double(std::span<const double>)> objective;
  /// Points failing this predicate get +inf (min) / -inf (max) and are
  /// rejected by the simplex moves. Empty means everything is feasible.
  std::function<bool(std::span<const double>)> feasible;
  std::vector<std::vector<double>> starts;
  Goal goal = Goal::minimize;
  /// Edge length of the initial simplex around each start.
  double initial_step = 0.1;
};

struct SimplexResult {
  std::vector<double> arg;
  double value = 0.0;
  std::size_t evaluations = 0;
};

/// Reflect/expand/contract/shrink simplex descent from every feasible start;
/// returns the best result. Deterministic given the starts.
SimplexResult multistart_simplex(const SimplexProblem& problem, double tol,
                                 std::size_t max_iter);

}  // namespace flagcap::optimize
