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
#include <cstdio>
#include <limits>
#include <ostream>

#include "flagcap/cli.hpp"
#include "json.hpp"

namespace flagcap::cli {

namespace {

nlohmann::json number_or_null(double v) {
  return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}

}  // namespace

bool VerifyReport::passed() const {
  return cptp_residual <= tol && degcond_residual <= tol && degrading_residual <= tol;
}

std::string VerifyReport::to_json() const {
  nlohmann::json j;
  j["cptp_residual"] = number_or_null(cptp_residual);
  j["degcond_residual"] = number_or_null(degcond_residual);
  j["degrading_residual"] = number_or_null(degrading_residual);
  j["q1_bound"] = number_or_null(q1_bound);
  j["constraint_report"] = {
      {"condition_passed", condition_passed},
      {"tol", tol},
      {"passed", passed()},
  };
  return j.dump(2);
}

VerifyReport verify_config(const ChannelConfig& config, double tol) {
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  VerifyReport report;
  report.tol = tol;
  report.cptp_residual = config_cptp_residual(config);
  const FlaggedSpec spec = to_flagged_spec(config);
  if (!(report.cptp_residual <= tol)) {
    report.degcond_residual = nan;
    report.degrading_residual = nan;
    report.q1_bound = nan;
    return report;
  }
  const auto cond = check_degradability(spec, tol);
  report.degcond_residual = cond.max_residual;
  report.condition_passed = cond.passed;
  report.degrading_residual = degrading_residual(spec);
  const KrausChannel flagged = build_flagged(spec);
  const InputFamily family =
      spec.dim_in() == 2 ? InputFamily::full_qubit : InputFamily::maximally_mixed;
  report.q1_bound = q1_maximize(flagged, family).value;
  return report;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (v == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_csv(std::ostream& os, const PipelineResult& result) {
  os << result.parameter;
  for (const auto& c : result.curves) os << ',' << c.label();
  os << '\n';
  if (result.curves.empty()) return;
  const std::size_t rows = result.curves.front().size();
  for (std::size_t i = 0; i < rows; ++i) {
    os << format_number(result.curves.front()[i].parameter);
    for (const auto& c : result.curves) os << ',' << format_number(c[i].value);
    os << '\n';
  }
}

double sandwich_margin(const PipelineResult& result, const std::vector<std::string>& uppers) {
  const auto& lower = result.curve("q1_lower");
  double margin = std::numeric_limits<double>::infinity();
  for (const auto& label : uppers) {
    const auto& upper = result.curve(label);
    for (std::size_t i = 0; i < lower.size(); ++i) {
      if (std::isnan(upper[i].value) || std::isnan(lower[i].value)) continue;
      margin = std::min(margin, upper[i].value - lower[i].value);
    }
  }
  return margin;
}

}  // namespace flagcap::cli
