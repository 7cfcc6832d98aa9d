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

#include <string>
#include <vector>

namespace flagcap {

struct CurveSample {
  double parameter = 0.0;
  double value = 0.0;
};

/// A labelled bound sampled on a grid with strictly increasing parameters.
class BoundCurve {
 public:
  BoundCurve(std::string label, std::vector<CurveSample> samples);

  const std::string& label() const { return label_; }
  const std::vector<CurveSample>& samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }
  const CurveSample& operator[](std::size_t i) const { return samples_[i]; }
  std::vector<double> parameters() const;
  std::vector<double> values() const;

 private:
  std::string label_;
  std::vector<CurveSample> samples_;
};

/// Lower convex envelope of the pointwise minimum of curves sharing one grid,
/// evaluated back on that grid. NaN samples are ignored by the minimum.
BoundCurve convex_hull_combine(const std::vector<BoundCurve>& curves,
                               std::string label = "q_conv");

/// The grid lo, lo + h, ..., hi with `steps` points; the last point is hi
/// exactly.
std::vector<double> linear_grid(double lo, double hi, std::size_t steps);

}  // namespace flagcap
