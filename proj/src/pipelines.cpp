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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <string>
#include <thread>

#include "flagcap/channel_zoo.hpp"

namespace flagcap {

namespace {

void audit_flagged(const FlaggedSpec& spec, ExtensionAudit& audit, const std::string& where) {
  const auto cond = check_degradability(spec, kConditionTol);
  const double residual = degrading_residual(spec);
  ++audit.checked;
  audit.max_condition_residual = std::max(audit.max_condition_residual, cond.max_residual);
  audit.max_degrading_residual = std::max(audit.max_degrading_residual, residual);
  if (!cond.passed || !(residual <= kDegradingTol)) {
    throw ExtensionCheckError(where + ": flagged extension failed verification (condition " +
                              std::to_string(cond.max_residual) + ", degrading " +
                              std::to_string(residual) + ")");
  }
}

void audit_degrader(const KrausChannel& ch, const KrausChannel& degrader, ExtensionAudit& audit,
                    const std::string& where) {
  const double residual = degrading_residual(ch, degrader);
  ++audit.checked;
  audit.max_degrading_residual = std::max(audit.max_degrading_residual, residual);
  if (!(residual <= kDegradingTol)) {
    throw ExtensionCheckError(where + ": degrading map residual " + std::to_string(residual));
  }
}

std::string at(const char* name, double v) { return std::string(name) + "=" + std::to_string(v); }

void merge(ExtensionAudit& into, const ExtensionAudit& row) {
  into.checked += row.checked;
  into.max_condition_residual = std::max(into.max_condition_residual, row.max_condition_residual);
  into.max_degrading_residual = std::max(into.max_degrading_residual, row.max_degrading_residual);
}

struct Row {
  std::vector<double> values;
  ExtensionAudit audit;
};

// Evaluates `row(x)` for every grid point on a small worker pool and returns
// the rows in grid order.
template <class Fn>
std::vector<Row> compute_rows(const std::vector<double>& grid, std::size_t threads, Fn row) {
  std::vector<Row> rows(grid.size());
  std::vector<std::exception_ptr> errors(grid.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      try {
        rows[i] = row(grid[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, grid.size());
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

// Splits row values into labelled curves over the grid.
std::vector<BoundCurve> to_curves(const std::vector<double>& grid, const std::vector<Row>& rows,
                                  const std::vector<std::string>& labels, ExtensionAudit& audit) {
  std::vector<std::vector<CurveSample>> samples(labels.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    merge(audit, rows[i].audit);
    for (std::size_t c = 0; c < labels.size(); ++c) samples[c].push_back({grid[i], rows[i].values[c]});
  }
  std::vector<BoundCurve> curves;
  for (std::size_t c = 0; c < labels.size(); ++c) curves.emplace_back(labels[c], std::move(samples[c]));
  return curves;
}

}  // namespace

const BoundCurve& PipelineResult::curve(const std::string& label) const {
  for (const auto& c : curves) {
    if (c.label() == label) return c;
  }
  throw std::out_of_range("PipelineResult: no curve labelled " + label);
}

PipelineResult dep_pipeline(int d, const std::vector<double>& p_grid, std::size_t threads) {
  const auto rows = compute_rows(p_grid, threads, [d](double p) {
    Row row;
    const auto w = depolarizing_weights(d, p);
    const auto best = dep_fmin(d, p);
    audit_flagged(flagged_pauli_spec(w, dep_flags(best.params, d, p)), row.audit,
                  "depolarizing " + at("p", p));
    row.values = {clamp_bound(hashing_value(w)), clamp_bound(best.value), no_cloning_bound(d, p)};
    return row;
  });
  PipelineResult out;
  out.parameter = "p";
  out.curves = to_curves(p_grid, rows, {"q1_lower", "q_fmin", "q_nocloning"}, out.audit);
  out.curves.push_back(convex_hull_combine({out.curves[1], out.curves[2]}, "q_conv"));
  return out;
}

PipelineResult bb84_pipeline(const std::vector<double>& p_grid, std::size_t threads) {
  const auto rows = compute_rows(p_grid, threads, [](double p) {
    Row row;
    const auto w = bb84_weights(p);
    const auto best = bb84_fmin(p);
    audit_flagged(flagged_pauli_spec(w, best.flags), row.audit, "bb84 " + at("p", p));
    const auto at_110 = bb84_reference_bound(p);
    row.values = {clamp_bound(hashing_value(w)), clamp_bound(best.value),
                  at_110 ? clamp_bound(*at_110) : std::numeric_limits<double>::quiet_NaN()};
    return row;
  });
  PipelineResult out;
  out.parameter = "p";
  out.curves = to_curves(p_grid, rows, {"q1_lower", "q_fmin", "q_at_110"}, out.audit);
  return out;
}

PipelineResult gad_pipeline(double N, const std::vector<double>& y_grid, std::size_t threads) {
  const double n = N > 0.5 ? 1.0 - N : N;
  const auto rows = compute_rows(y_grid, threads, [N, n](double y) {
    Row row;
    const GadParams params{y, N};
    params.validate();
    const auto half = gad_fmin_half_min(y);
    audit_flagged(flagged_pauli_spec(gad_half_weights(y), half.flags), row.audit,
                  "gad half " + at("y", y));
    if (y <= 0.5) {
      audit_degrader(build_flagged(gad_orthogonal_spec(params)), gad_orthogonal_degrading_map(y),
                     row.audit, "gad orthogonal " + at("y", y));
    }
    const double ad = gad_orthogonal_flag_bound(y);
    const double f = clamp_bound(half.value);
    row.values = {clamp_bound(gad_q1_lower(params)), ad, f,
                  clamp_bound(2.0 * n * f + (1.0 - 2.0 * n) * ad)};
    return row;
  });
  PipelineResult out;
  out.parameter = "y";
  out.curves = to_curves(y_grid, rows, {"q1_lower", "q_ad", "q_fmin_half", "q_conv"}, out.audit);
  return out;
}

}  // namespace flagcap
