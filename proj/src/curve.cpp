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

#include "flagcap/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace flagcap {

BoundCurve::BoundCurve(std::string label, std::vector<CurveSample> samples)
    : label_(std::move(label)), samples_(std::move(samples)) {
  for (std::size_t i = 1; i < samples_.size(); ++i) {
    if (!(samples_[i].parameter > samples_[i - 1].parameter)) {
      throw std::invalid_argument("BoundCurve '" + label_ +
                                  "': parameters must be strictly increasing");
    }
  }
}

std::vector<double> BoundCurve::parameters() const {
  std::vector<double> out;
  out.reserve(samples_.size());
  for (const auto& s : samples_) out.push_back(s.parameter);
  return out;
}

std::vector<double> BoundCurve::values() const {
  std::vector<double> out;
  out.reserve(samples_.size());
  for (const auto& s : samples_) out.push_back(s.value);
  return out;
}

namespace {

// z-component of (b - a) x (c - a); <= 0 means b is not below the chord a-c.
double cross(const CurveSample& a, const CurveSample& b, const CurveSample& c) {
  return (b.parameter - a.parameter) * (c.value - a.value) -
         (b.value - a.value) * (c.parameter - a.parameter);
}

}  // namespace

BoundCurve convex_hull_combine(const std::vector<BoundCurve>& curves, std::string label) {
  if (curves.empty()) throw std::invalid_argument("convex_hull_combine: no curves");
  const std::size_t n = curves.front().size();
  for (const auto& c : curves) {
    if (c.size() != n) throw std::invalid_argument("convex_hull_combine: mismatched grids");
    for (std::size_t i = 0; i < n; ++i) {
      if (c[i].parameter != curves.front()[i].parameter) {
        throw std::invalid_argument("convex_hull_combine: mismatched grids");
      }
    }
  }

  std::vector<CurveSample> lower;
  lower.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    double v = std::numeric_limits<double>::infinity();
    for (const auto& c : curves) {
      if (!std::isnan(c[i].value)) v = std::min(v, c[i].value);
    }
    if (std::isfinite(v)) lower.push_back({curves.front()[i].parameter, v});
  }
  if (lower.empty()) throw std::invalid_argument("convex_hull_combine: no finite samples");

  // Andrew's monotone chain, lower half; the points are already sorted.
  std::vector<CurveSample> hull;
  for (const auto& s : lower) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), s) <= 0.0) {
      hull.pop_back();
    }
    hull.push_back(s);
  }

  std::vector<CurveSample> out;
  out.reserve(n);
  std::size_t seg = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = curves.front()[i].parameter;
    if (x < hull.front().parameter || x > hull.back().parameter) {
      out.push_back({x, std::numeric_limits<double>::quiet_NaN()});
      continue;
    }
    while (seg + 1 < hull.size() && hull[seg + 1].parameter < x) ++seg;
    if (seg + 1 == hull.size() || hull[seg].parameter == x) {
      out.push_back({x, hull[seg].value});
      continue;
    }
    const auto& a = hull[seg];
    const auto& b = hull[seg + 1];
    if (b.parameter == x) {
      out.push_back({x, b.value});
      continue;
    }
    const double t = (x - a.parameter) / (b.parameter - a.parameter);
    // Never above the pointwise minimum, even by rounding.
    double v = a.value + t * (b.value - a.value);
    for (const auto& c : curves) {
      if (!std::isnan(c[i].value)) v = std::min(v, c[i].value);
    }
    out.push_back({x, v});
  }
  return BoundCurve(std::move(label), std::move(out));
}

std::vector<double> linear_grid(double lo, double hi, std::size_t steps) {
  if (steps < 2) throw std::invalid_argument("linear_grid: need at least 2 steps");
  if (!(lo < hi)) throw std::invalid_argument("linear_grid: need lo < hi");
  std::vector<double> grid(steps);
  const double h = (hi - lo) / static_cast<double>(steps - 1);
  for (std::size_t i = 0; i < steps; ++i) grid[i] = lo + h * static_cast<double>(i);
  grid.back() = hi;
  return grid;
}

}  // namespace flagcap
