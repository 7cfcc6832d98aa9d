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

#include "flagcap/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace flagcap::optimize {

namespace {

constexpr double kInvPhi = 0.6180339887498949;  // (sqrt(5) - 1) / 2

// Internally everything is minimized.
double signed_eval(const ScalarProblem& p, double t) {
  const double v = p.objective(t);
  if (!std::isfinite(v)) {
    throw OptimizationError("objective is not finite at t = " + std::to_string(t));
  }
  return p.goal == Goal::minimize ? v : -v;
}

ScalarResult finish(const ScalarProblem& p, double arg, double signed_value) {
  return {arg, p.goal == Goal::minimize ? signed_value : -signed_value};
}

struct Bracketed {
  double arg;
  double value;  // signed
};

Bracketed golden_signed(const ScalarProblem& p, double lo, double hi, double tol) {
  double a = lo;
  double b = hi;
  Bracketed best{a, signed_eval(p, a)};
  const double fb = signed_eval(p, b);
  if (fb < best.value) best = {b, fb};

  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = signed_eval(p, x1);
  double f2 = signed_eval(p, x2);
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = signed_eval(p, x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = signed_eval(p, x2);
    }
    if (f1 < best.value) best = {x1, f1};
    if (f2 < best.value) best = {x2, f2};
  }
  return best;
}

}  // namespace

ScalarResult golden_section(const ScalarProblem& problem, double tol) {
  if (!(problem.lo < problem.hi)) {
    if (problem.lo == problem.hi) {
      return finish(problem, problem.lo, signed_eval(problem, problem.lo));
    }
    throw std::invalid_argument("golden_section: lo > hi");
  }
  const auto best = golden_signed(problem, problem.lo, problem.hi, tol);
  return finish(problem, best.arg, best.value);
}

ScalarResult coarse_grid_then_refine(const ScalarProblem& problem,
                                     std::size_t grid_points, double tol) {
  if (grid_points < 2) throw std::invalid_argument("coarse_grid_then_refine: need >= 2 grid points");
  if (problem.lo == problem.hi) return golden_section(problem, tol);
  if (problem.lo > problem.hi) throw std::invalid_argument("coarse_grid_then_refine: lo > hi");

  const double step = (problem.hi - problem.lo) / static_cast<double>(grid_points - 1);
  std::size_t best_i = 0;
  double best_v = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid_points; ++i) {
    const double t = i + 1 == grid_points ? problem.hi : problem.lo + step * i;
    const double v = signed_eval(problem, t);
    if (v < best_v) {
      best_v = v;
      best_i = i;
    }
  }
  Bracketed best{best_i + 1 == grid_points ? problem.hi : problem.lo + step * best_i, best_v};
  const double lo = best_i == 0 ? problem.lo : problem.lo + step * (best_i - 1);
  const double hi = best_i + 1 >= grid_points ? problem.hi : problem.lo + step * (best_i + 1);
  const auto refined = golden_signed(problem, lo, std::min(hi, problem.hi), tol);
  if (refined.value < best.value) best = refined;
  return finish(problem, best.arg, best.value);
}

namespace {

class SignedObjective {
 public:
  explicit SignedObjective(const SimplexProblem& p) : p_(p) {}

  double operator()(std::span<const double> x) {
    ++evaluations;
    if (p_.feasible && !p_.feasible(x)) return std::numeric_limits<double>::infinity();
    const double v = p_.objective(x);
    if (std::isnan(v)) return std::numeric_limits<double>::infinity();
    return p_.goal == Goal::minimize ? v : -v;
  }

  std::size_t evaluations = 0;

 private:
  const SimplexProblem& p_;
};

struct Vertex {
  std::vector<double> x;
  double f;
};

Vertex nelder_mead(SignedObjective& f, const std::vector<double>& start, double step,
                   double tol, std::size_t max_iter) {
  const std::size_t k = start.size();
  std::vector<Vertex> simplex;
  simplex.reserve(k + 1);
  simplex.push_back({start, f(start)});
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<double> x = start;
    x[i] += step;
    double fx = f(x);
    if (!std::isfinite(fx)) {
      // Try the opposite direction when the boundary is hit.
      x[i] = start[i] - step;
      fx = f(x);
    }
    simplex.push_back({std::move(x), fx});
  }

  auto order = [&] {
    std::stable_sort(simplex.begin(), simplex.end(),
                     [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
  };
  auto blend = [&](const std::vector<double>& a, const std::vector<double>& b, double t) {
    std::vector<double> out(k);
    for (std::size_t i = 0; i < k; ++i) out[i] = a[i] + t * (b[i] - a[i]);
    return out;
  };

  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    order();
    const double spread = simplex.back().f - simplex.front().f;
    double size = 0.0;
    for (std::size_t v = 1; v <= k; ++v) {
      for (std::size_t i = 0; i < k; ++i) {
        size = std::max(size, std::abs(simplex[v].x[i] - simplex[0].x[i]));
      }
    }
    if (size <= tol && (std::isfinite(spread) ? spread <= tol : false)) break;
    if (size <= tol * 1e-3) break;

    std::vector<double> centroid(k, 0.0);
    for (std::size_t v = 0; v < k; ++v) {
      for (std::size_t i = 0; i < k; ++i) centroid[i] += simplex[v].x[i] / static_cast<double>(k);
    }
    Vertex& worst = simplex.back();
    const auto xr = blend(centroid, worst.x, -1.0);
    const double fr = f(xr);
    if (fr < simplex.front().f) {
      const auto xe = blend(centroid, worst.x, -2.0);
      const double fe = f(xe);
      if (fe < fr) {
        worst = {xe, fe};
      } else {
        worst = {xr, fr};
      }
      continue;
    }
    if (fr < simplex[k - 1].f) {
      worst = {xr, fr};
      continue;
    }
    const bool outside = fr < worst.f;
    const auto xc = outside ? blend(centroid, xr, 0.5) : blend(centroid, worst.x, 0.5);
    const double fc = f(xc);
    if (fc < (outside ? fr : worst.f)) {
      worst = {xc, fc};
      continue;
    }
    for (std::size_t v = 1; v <= k; ++v) {
      simplex[v].x = blend(simplex[0].x, simplex[v].x, 0.5);
      simplex[v].f = f(simplex[v].x);
    }
  }
  order();
  return simplex.front();
}

}  // namespace

SimplexResult multistart_simplex(const SimplexProblem& problem, double tol,
                                 std::size_t max_iter) {
  if (problem.starts.empty()) throw std::invalid_argument("multistart_simplex: no starts");
  SignedObjective f(problem);
  bool any_feasible = false;
  Vertex best{{}, std::numeric_limits<double>::infinity()};
  for (const auto& start : problem.starts) {
    const double f0 = f(start);
    if (!std::isfinite(f0)) continue;
    any_feasible = true;
    // The best vertex never gets worse, so v.f <= f0.
    Vertex v = nelder_mead(f, start, problem.initial_step, tol, max_iter);
    if (v.f < best.f) best = std::move(v);
  }
  if (!any_feasible) throw OptimizationError("multistart_simplex: all starts infeasible");
  const double value = problem.goal == Goal::minimize ? best.f : -best.f;
  return {best.x, value, f.evaluations};
}

}  // namespace flagcap::optimize
