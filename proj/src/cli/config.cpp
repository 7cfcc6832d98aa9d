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
#include <limits>
#include <string>

#include "flagcap/cli.hpp"
#include "json.hpp"

namespace flagcap::cli {

namespace {

using nlohmann::json;

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

const json& require(const json& obj, const std::string& path, const char* key) {
  if (!obj.contains(key)) throw ConfigError(child(path, key), "missing field");
  return obj.at(key);
}

double number(const json& v, const std::string& path) {
  if (!v.is_number()) throw ConfigError(path, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError(path, "not finite");
  return x;
}

cplx complex_number(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 2) throw ConfigError(path, "expected [re, im]");
  return {number(v[0], child(path, 0)), number(v[1], child(path, 1))};
}

std::vector<cplx> complex_vector(const json& v, const std::string& path) {
  if (!v.is_array() || v.empty()) throw ConfigError(path, "expected a nonempty array");
  std::vector<cplx> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(complex_number(v[i], child(path, i)));
  return out;
}

ComplexMatrix complex_matrix(const json& v, const std::string& path) {
  if (!v.is_array() || v.empty()) throw ConfigError(path, "expected a nonempty array of rows");
  std::vector<std::vector<cplx>> rows;
  for (std::size_t r = 0; r < v.size(); ++r) {
    rows.push_back(complex_vector(v[r], child(path, r)));
    if (rows.back().size() != rows.front().size()) {
      throw ConfigError(child(path, r), "row length differs from row 0");
    }
  }
  ComplexMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

}  // namespace

ConfigError::ConfigError(std::string path, const std::string& message)
    : std::runtime_error((path.empty() ? std::string("<root>") : path) + ": " + message),
      path_(std::move(path)) {}

ChannelConfig parse_channel_config(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("", std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("", "expected an object");

  ChannelConfig config;
  const json& d = require(root, "", "d");
  if (!d.is_number_integer() || d.get<long long>() < 1) {
    throw ConfigError("/d", "expected a positive integer");
  }
  config.d = d.get<std::size_t>();

  const json& comps = require(root, "", "components");
  if (!comps.is_array() || comps.empty()) {
    throw ConfigError("/components", "expected a nonempty array");
  }
  std::size_t dim_out = 0;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string path = child("/components", i);
    const json& comp = comps[i];
    if (!comp.is_object()) throw ConfigError(path, "expected an object");
    const double w = number(require(comp, path, "weight"), child(path, "weight"));
    if (w < 0.0) throw ConfigError(child(path, "weight"), "negative weight");
    config.weights.push_back(w);

    const std::string kpath = child(path, "kraus");
    const json& kraus = require(comp, path, "kraus");
    if (!kraus.is_array() || kraus.empty()) throw ConfigError(kpath, "expected a nonempty array");
    std::vector<ComplexMatrix> ops;
    for (std::size_t j = 0; j < kraus.size(); ++j) {
      ComplexMatrix k = complex_matrix(kraus[j], child(kpath, j));
      if (k.cols() != config.d) {
        throw ConfigError(child(kpath, j), "has " + std::to_string(k.cols()) +
                                               " columns, expected d = " +
                                               std::to_string(config.d));
      }
      if (dim_out == 0) dim_out = k.rows();
      if (k.rows() != dim_out) {
        throw ConfigError(child(kpath, j), "output dimension differs from other components");
      }
      ops.push_back(std::move(k));
    }
    config.kraus.push_back(std::move(ops));
  }

  const json& flags = require(root, "", "flags");
  if (!flags.is_array()) throw ConfigError("/flags", "expected an array");
  for (std::size_t i = 0; i < flags.size(); ++i) {
    config.flags.push_back(complex_vector(flags[i], child("/flags", i)));
  }
  return config;
}

double config_cptp_residual(const ChannelConfig& config) {
  double residual = 0.0;
  for (const auto& ops : config.kraus) {
    const auto sum = kraus_completeness(ops);
    residual = std::max(residual, (sum - ComplexMatrix::identity(sum.rows())).max_abs());
  }
  return residual;
}

FlaggedSpec to_flagged_spec(const ChannelConfig& config) {
  if (config.flags.size() != config.kraus.size()) {
    throw ConfigError("/flags", "need one flag per component (" +
                                    std::to_string(config.kraus.size()) + "), got " +
                                    std::to_string(config.flags.size()));
  }
  double total = 0.0;
  for (double w : config.weights) total += w;
  if (std::abs(total - 1.0) > 1e-12) {
    throw ConfigError("/components", "weights sum to " + std::to_string(total));
  }
  for (std::size_t i = 0; i < config.flags.size(); ++i) {
    const auto& f = config.flags[i];
    if (f.size() != config.flags.front().size()) {
      throw ConfigError(child("/flags", i), "dimension differs from flag 0");
    }
    double norm = 0.0;
    for (const auto& z : f) norm += std::norm(z);
    if (std::abs(std::sqrt(norm) - 1.0) > 1e-10) {
      throw ConfigError(child("/flags", i), "not normalized");
    }
  }
  std::vector<FlagComponent> comps;
  for (std::size_t i = 0; i < config.kraus.size(); ++i) {
    // Trace preservation is reported, not enforced, here.
    comps.push_back({config.weights[i],
                     KrausChannel(config.kraus[i], std::numeric_limits<double>::infinity())});
  }
  try {
    return FlaggedSpec(std::move(comps), config.flags);
  } catch (const std::exception& e) {
    throw ConfigError("", e.what());
  }
}

}  // namespace flagcap::cli
