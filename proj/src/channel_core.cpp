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

#include "flagcap/channel_core.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "flagcap/optimize.hpp"

namespace flagcap {

namespace {

std::string dims(std::size_t a, std::size_t b) {
  return std::to_string(a) + "->" + std::to_string(b);
}

}  // namespace

KrausChannel::KrausChannel(std::vector<ComplexMatrix> kraus, double tol)
    : kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw std::invalid_argument("KrausChannel: empty Kraus list");
  dim_in_ = kraus_.front().cols();
  dim_out_ = kraus_.front().rows();
  if (dim_in_ == 0 || dim_out_ == 0) throw DimensionError("KrausChannel: zero dimension");
  for (const auto& k : kraus_) {
    if (k.cols() != dim_in_ || k.rows() != dim_out_) {
      throw DimensionError("KrausChannel: mixed Kraus shapes");
    }
  }
  const double residual = cptp_residual();
  if (residual > tol) {
    throw std::domain_error("KrausChannel: sum K^dagger K deviates from identity by " +
                            std::to_string(residual));
  }
}

KrausChannel KrausChannel::identity(std::size_t dim) {
  return KrausChannel({ComplexMatrix::identity(dim)});
}

KrausChannel KrausChannel::unitary(const ComplexMatrix& u) { return KrausChannel({u}); }

double KrausChannel::cptp_residual() const {
  return (kraus_completeness(kraus_) - ComplexMatrix::identity(dim_in_)).max_abs();
}

ComplexMatrix kraus_completeness(std::span<const ComplexMatrix> kraus) {
  if (kraus.empty()) return {};
  ComplexMatrix sum(kraus.front().cols(), kraus.front().cols());
  for (const auto& k : kraus) sum += matmul(k.adjoint(), k);
  return sum;
}

ComplexMatrix apply(const KrausChannel& ch, const ComplexMatrix& x) {
  if (x.rows() != ch.dim_in() || x.cols() != ch.dim_in()) {
    throw DimensionError("apply: input is " + std::to_string(x.rows()) +
                         "-dimensional, channel is " + dims(ch.dim_in(), ch.dim_out()));
  }
  ComplexMatrix out(ch.dim_out(), ch.dim_out());
  for (const auto& k : ch.kraus()) out += conjugate(k, x);
  return out;
}

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho) {
  return DensityMatrix(apply(ch, rho.matrix()));
}

ComplexMatrix stinespring(const KrausChannel& ch) {
  const std::size_t r = ch.kraus_count();
  ComplexMatrix v(ch.dim_out() * r, ch.dim_in());
  for (std::size_t j = 0; j < r; ++j) {
    const auto& k = ch.kraus()[j];
    for (std::size_t b = 0; b < ch.dim_out(); ++b) {
      for (std::size_t a = 0; a < ch.dim_in(); ++a) v(b * r + j, a) = k(b, a);
    }
  }
  return v;
}

KrausChannel complementary(const KrausChannel& ch) {
  const std::size_t r = ch.kraus_count();
  std::vector<ComplexMatrix> env;
  env.reserve(ch.dim_out());
  for (std::size_t b = 0; b < ch.dim_out(); ++b) {
    ComplexMatrix e(r, ch.dim_in());
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t a = 0; a < ch.dim_in(); ++a) e(j, a) = ch.kraus()[j](b, a);
    }
    env.push_back(std::move(e));
  }
  return KrausChannel(std::move(env));
}

ChoiMatrix choi(const KrausChannel& ch) {
  // Columns of `vecs` are row-major vec(K_j); C = vecs vecs^dagger.
  const std::size_t n = ch.dim_out() * ch.dim_in();
  const std::size_t r = ch.kraus_count();
  ComplexMatrix vecs(n, r);
  for (std::size_t j = 0; j < r; ++j) {
    const auto entries = ch.kraus()[j].entries();
    for (std::size_t i = 0; i < n; ++i) vecs(i, j) = entries[i];
  }
  return {matmul(vecs, vecs.adjoint()), ch.dim_in(), ch.dim_out()};
}

ComplexMatrix apply_choi(const ChoiMatrix& c, const ComplexMatrix& rho) {
  if (rho.rows() != c.dim_in || rho.cols() != c.dim_in) {
    throw DimensionError("apply_choi: input dimension mismatch");
  }
  const std::size_t din = c.dim_in;
  ComplexMatrix out(c.dim_out, c.dim_out);
  for (std::size_t b = 0; b < c.dim_out; ++b) {
    for (std::size_t bp = 0; bp < c.dim_out; ++bp) {
      cplx s = 0.0;
      for (std::size_t k = 0; k < din; ++k) {
        for (std::size_t kp = 0; kp < din; ++kp) s += c.mat(b * din + k, bp * din + kp) * rho(k, kp);
      }
      out(b, bp) = s;
    }
  }
  return out;
}

EqualityResult channels_equal(const KrausChannel& a, const KrausChannel& b, double tol) {
  if (a.dim_in() != b.dim_in() || a.dim_out() != b.dim_out()) {
    throw DimensionError("channels_equal: " + dims(a.dim_in(), a.dim_out()) + " vs " +
                         dims(b.dim_in(), b.dim_out()));
  }
  const double residual = trace_distance(choi(a).mat, choi(b).mat);
  return {residual <= tol * static_cast<double>(a.dim_in()), residual};
}

KrausChannel compose(const KrausChannel& after, const KrausChannel& before) {
  if (before.dim_out() != after.dim_in()) {
    throw DimensionError("compose: " + dims(before.dim_in(), before.dim_out()) + " then " +
                         dims(after.dim_in(), after.dim_out()));
  }
  std::vector<ComplexMatrix> products;
  products.reserve(after.kraus_count() * before.kraus_count());
  for (const auto& a : after.kraus()) {
    for (const auto& b : before.kraus()) products.push_back(matmul(a, b));
  }
  return KrausChannel(std::move(products));
}

double degrading_residual(const KrausChannel& ch, const KrausChannel& degrader) {
  return trace_distance(choi(compose(degrader, ch)).mat, choi(complementary(ch)).mat);
}

double coherent_information(const KrausChannel& ch, const KrausChannel& complement,
                            const ComplexMatrix& rho) {
  return von_neumann_entropy(apply(ch, rho)) - von_neumann_entropy(apply(complement, rho));
}

double coherent_information(const KrausChannel& ch, const DensityMatrix& rho) {
  return coherent_information(ch, complementary(ch), rho.matrix());
}

namespace {

ComplexMatrix bloch_state(double x, double y, double z) {
  const cplx i(0.0, 1.0);
  return ComplexMatrix::from_rows(
      {{0.5 * (1.0 + z), 0.5 * (x - i * y)}, {0.5 * (x + i * y), 0.5 * (1.0 - z)}});
}

void require_qubit(const KrausChannel& ch, const char* what) {
  if (ch.dim_in() != 2) {
    throw DimensionError(std::string("q1_maximize: ") + what + " strategy needs a qubit input");
  }
}

}  // namespace

Q1Result q1_maximize(const KrausChannel& ch, InputFamily strategy) {
  const KrausChannel comp = complementary(ch);
  switch (strategy) {
    case InputFamily::maximally_mixed: {
      auto rho = DensityMatrix::maximally_mixed(ch.dim_in()).matrix();
      return {coherent_information(ch, comp, rho), std::move(rho)};
    }
    case InputFamily::diagonal: {
      require_qubit(ch, "diagonal");
      optimize::ScalarProblem problem{
          [&](double t) {
            return coherent_information(ch, comp, ComplexMatrix::diagonal({1.0 - t, t}));
          },
          0.0, 1.0, optimize::Goal::maximize};
      const auto best = optimize::coarse_grid_then_refine(problem, 33, 1e-10);
      return {best.value, ComplexMatrix::diagonal({1.0 - best.arg, best.arg})};
    }
    case InputFamily::full_qubit: {
      require_qubit(ch, "full-qubit");
      optimize::SimplexProblem problem;
      problem.objective = [&](std::span<const double> r) {
        return coherent_information(ch, comp, bloch_state(r[0], r[1], r[2]));
      };
      problem.feasible = [](std::span<const double> r) {
        return r[0] * r[0] + r[1] * r[1] + r[2] * r[2] <= 1.0;
      };
      problem.goal = optimize::Goal::maximize;
      problem.initial_step = 0.25;
      problem.starts = {{0, 0, 0},  {0.5, 0, 0}, {-0.5, 0, 0}, {0, 0.5, 0},
                        {0, -0.5, 0}, {0, 0, 0.5}, {0, 0, -0.5}};
      std::mt19937_64 rng(20240531);
      std::uniform_real_distribution<double> u(-0.5, 0.5);
      problem.starts.push_back({u(rng), u(rng), u(rng)});
      const auto best = optimize::multistart_simplex(problem, 1e-9, 2000);
      return {best.value, bloch_state(best.arg[0], best.arg[1], best.arg[2])};
    }
  }
  throw std::invalid_argument("q1_maximize: unknown strategy");
}

}  // namespace flagcap
