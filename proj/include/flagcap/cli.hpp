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

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "flagcap/channel_zoo.hpp"
#include "flagcap/flagged_ext.hpp"

namespace flagcap::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kIoError = 3,
};

/// Malformed channel configuration; `path()` is a JSON pointer to the
/// offending element.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string path, const std::string& message);
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// Parsed channel configuration. Component channels are kept even when they
/// are not trace preserving so the residual can be reported.
struct ChannelConfig {
  std::size_t d = 0;
  std::vector<double> weights;
  std::vector<std::vector<ComplexMatrix>> kraus;
  std::vector<FlagVector> flags;
};

/// {"d": 2, "components": [{"weight": w, "kraus": [matrix, ...]}, ...],
///  "flags": [vector, ...]} with matrices as rows of [re, im] pairs.
ChannelConfig parse_channel_config(std::string_view text);

/// Largest |sum K^dagger K - I| entry over the components.
double config_cptp_residual(const ChannelConfig& config);

/// Throws ConfigError for weight, flag and dimension problems.
FlaggedSpec to_flagged_spec(const ChannelConfig& config);

struct VerifyReport {
  double cptp_residual = 0.0;
  double degcond_residual = 0.0;
  double degrading_residual = 0.0;
  double q1_bound = 0.0;
  bool condition_passed = false;
  double tol = 0.0;

  bool passed() const;
  std::string to_json() const;
};

VerifyReport verify_config(const ChannelConfig& config, double tol);

/// 12 significant digits, "nan" for NaN, never "-0".
std::string format_number(double v);

/// Parameter column followed by one column per curve, in curve order.
void write_csv(std::ostream& os, const PipelineResult& result);

/// Lowest upper-bound margin over the labelled upper bounds:
/// min(upper - q1_lower). NaN samples are skipped.
double sandwich_margin(const PipelineResult& result, const std::vector<std::string>& uppers);

/// Entry point shared by the executable and the tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flagcap::cli
