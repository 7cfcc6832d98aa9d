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
#include <fstream>
#include <functional>
#include <iterator>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "flagcap/cli.hpp"

namespace flagcap::cli {

namespace {

struct CurveOptions {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t steps = 0;
  std::string out;
  double tol = 1e-9;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void add_common(CLI::App& cmd, CurveOptions& opts) {
  cmd.add_option("--out", opts.out, "Output path (default: stdout)");
  cmd.add_option("--tol", opts.tol, "Slack for the lower/upper bound ordering")
      ->capture_default_str();
  cmd.add_option("--steps", opts.steps, "Number of grid points")->required();
}

void check_grid(const CurveOptions& opts, double min_lo, double max_hi, bool open_hi,
                const char* name) {
  const bool hi_ok = open_hi ? opts.hi < max_hi : opts.hi <= max_hi;
  if (!(opts.lo >= min_lo && opts.lo < opts.hi && hi_ok)) {
    throw UsageError(std::string("invalid ") + name + " range");
  }
  if (opts.steps < 2) throw UsageError("--steps must be at least 2");
  if (!(opts.tol > 0.0)) throw UsageError("--tol must be positive");
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open " + path + " for writing");
  file << text;
  file.flush();
  if (!file) throw IoError("failed writing " + path);
}

int finish_curves(const PipelineResult& result, const CurveOptions& opts,
                  const std::vector<std::string>& uppers, std::ostream& out, std::ostream& err) {
  std::ostringstream csv;
  write_csv(csv, result);
  emit(csv.str(), opts.out, out);
  const double margin = sandwich_margin(result, uppers);
  if (margin < -opts.tol) {
    err << "error: an upper bound falls below q1_lower by " << -margin << '\n';
    return kVerificationFailed;
  }
  return kOk;
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open " + path);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Upper and lower bounds on quantum channel capacities from flagged extensions"};
  app.name("flagcap");
  app.require_subcommand(1);

  CurveOptions dep_opts;
  int dep_d = 2;
  auto* dep = app.add_subcommand("depolarizing", "Depolarizing channel bound curves");
  dep->add_option("--d", dep_d, "Qudit dimension")->capture_default_str();
  dep->add_option("--p-min", dep_opts.lo, "Smallest p")->required();
  dep->add_option("--p-max", dep_opts.hi, "Largest p")->required();
  add_common(*dep, dep_opts);

  CurveOptions bb84_opts;
  auto* bb = app.add_subcommand("bb84", "BB84 channel bound curves");
  bb->add_option("--p-min", bb84_opts.lo, "Smallest p")->required();
  bb->add_option("--p-max", bb84_opts.hi, "Largest p, below 1/2")->required();
  add_common(*bb, bb84_opts);

  CurveOptions gad_opts;
  double gad_n = 0.0;
  auto* ga = app.add_subcommand("gad", "Generalized amplitude damping bound curves");
  ga->add_option("--N", gad_n, "Thermal mixing parameter in [0, 1]")->required();
  ga->add_option("--y-min", gad_opts.lo, "Smallest damping probability")->required();
  ga->add_option("--y-max", gad_opts.hi, "Largest damping probability")->required();
  add_common(*ga, gad_opts);

  std::string config_path;
  std::string verify_out;
  double verify_tol = 1e-9;
  auto* ver = app.add_subcommand("verify", "Verify a flagged extension given as JSON");
  ver->add_option("config", config_path, "Channel configuration file")->required();
  ver->add_option("--out", verify_out, "Output path (default: stdout)");
  ver->add_option("--tol", verify_tol, "Residual tolerance")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*dep) {
      check_grid(dep_opts, 0.0, 1.0, false, "p");
      if (dep_d < 2 || dep_d > 8) throw UsageError("--d must lie in [2, 8]");
      const auto result = dep_pipeline(dep_d, linear_grid(dep_opts.lo, dep_opts.hi, dep_opts.steps));
      return finish_curves(result, dep_opts, {"q_fmin", "q_nocloning", "q_conv"}, out, err);
    }
    if (*bb) {
      check_grid(bb84_opts, 0.0, 0.5, true, "p");
      const auto result = bb84_pipeline(linear_grid(bb84_opts.lo, bb84_opts.hi, bb84_opts.steps));
      return finish_curves(result, bb84_opts, {"q_fmin", "q_at_110"}, out, err);
    }
    if (*ga) {
      check_grid(gad_opts, 0.0, 1.0, false, "y");
      if (!(gad_n >= 0.0 && gad_n <= 1.0)) throw UsageError("--N must lie in [0, 1]");
      const auto result =
          gad_pipeline(gad_n, linear_grid(gad_opts.lo, gad_opts.hi, gad_opts.steps));
      return finish_curves(result, gad_opts, {"q_ad", "q_conv"}, out, err);
    }
    if (!(verify_tol > 0.0)) throw UsageError("--tol must be positive");
    const auto config = parse_channel_config(read_file(config_path));
    const auto report = verify_config(config, verify_tol);
    emit(report.to_json() + "\n", verify_out, out);
    return report.passed() ? kOk : kVerificationFailed;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DimensionError& e) {
    err << "dimension error: " << e.what() << '\n';
    return kUsageError;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kIoError;
  } catch (const ExtensionCheckError& e) {
    err << "verification failed: " << e.what() << '\n';
    return kVerificationFailed;
  }
}

}  // namespace flagcap::cli
