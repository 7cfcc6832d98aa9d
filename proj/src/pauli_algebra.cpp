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

#include "flagcap/pauli_algebra.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace flagcap {

namespace {

int mod(long long a, int m) {
  const long long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

// Powers of exp(i pi / d), k = 0..2d-1. Entries on the axes are snapped so
// that e.g. Z for d = 2 and d = 4 is exactly real/imaginary.
std::vector<cplx> root_table(int d) {
  const int order = 2 * d;
  std::vector<cplx> table(order);
  for (int k = 0; k < order; ++k) {
    const double angle = std::numbers::pi * k / d;
    double re = std::cos(angle);
    double im = std::sin(angle);
    if (std::abs(re) < 1e-15) re = 0.0;
    if (std::abs(im) < 1e-15) im = 0.0;
    table[k] = {re, im};
  }
  return table;
}

void check_same_system(const PauliIndex& x, const PauliIndex& y) {
  if (x.d != y.d || x.n() != y.n()) {
    throw std::invalid_argument("PauliIndex: labels belong to different systems");
  }
}

}  // namespace

PauliIndex::PauliIndex(int d_, std::vector<int> q_, std::vector<int> p_)
    : d(d_), q(std::move(q_)), p(std::move(p_)) {
  if (d < 2) throw std::invalid_argument("PauliIndex: local dimension must be >= 2");
  if (q.size() != p.size() || q.empty()) {
    throw std::invalid_argument("PauliIndex: q and p must be non-empty and equal length");
  }
  const int big = phase_modulus(d);
  for (std::size_t j = 0; j < q.size(); ++j) {
    if (q[j] < 0 || q[j] >= big || p[j] < 0 || p[j] >= big) {
      throw std::invalid_argument("PauliIndex: entry outside Z_" + std::to_string(big));
    }
  }
}

PauliIndex PauliIndex::zero(int d, std::size_t n) {
  return {d, std::vector<int>(n, 0), std::vector<int>(n, 0)};
}

bool PauliIndex::is_zero() const {
  for (std::size_t j = 0; j < n(); ++j) {
    if (q[j] != 0 || p[j] != 0) return false;
  }
  return true;
}

PauliIndex PauliIndex::operator+(const PauliIndex& other) const {
  check_same_system(*this, other);
  const int big = phase_modulus(d);
  PauliIndex out = *this;
  for (std::size_t j = 0; j < n(); ++j) {
    out.q[j] = mod(q[j] + other.q[j], big);
    out.p[j] = mod(p[j] + other.p[j], big);
  }
  return out;
}

int phase_modulus(int d) { return d % 2 == 0 ? d : 2 * d; }

ComplexMatrix weyl_operator(const PauliIndex& x) {
  const int d = x.d;
  const int order = 2 * d;
  const auto roots = root_table(d);

  long long pq = 0;
  for (std::size_t j = 0; j < x.n(); ++j) pq += static_cast<long long>(x.p[j]) * x.q[j];
  const cplx global = roots[mod(-static_cast<long long>(d * d + 1) * pq, order)];

  ComplexMatrix w = ComplexMatrix::identity(1);
  for (std::size_t j = 0; j < x.n(); ++j) {
    // Z^p X^q |k> = exp(2 pi i p (k + q) / d) |k + q>
    ComplexMatrix local(d, d);
    for (int k = 0; k < d; ++k) {
      const int target = mod(k + x.q[j], d);
      local(target, k) = roots[mod(2LL * x.p[j] * (k + x.q[j]), order)];
    }
    w = kron(w, local);
  }
  return w * global;
}

int symplectic_form(const PauliIndex& x, const PauliIndex& y) {
  check_same_system(x, y);
  long long s = 0;
  for (std::size_t j = 0; j < x.n(); ++j) {
    s += static_cast<long long>(x.p[j]) * y.q[j] - static_cast<long long>(x.q[j]) * y.p[j];
  }
  return mod(s, phase_modulus(x.d));
}

std::vector<PauliIndex> pauli_twirl_basis(int d, std::size_t n) {
  if (d < 2 || n == 0) throw std::invalid_argument("pauli_twirl_basis: need d >= 2, n >= 1");
  std::size_t count = 1;
  for (std::size_t i = 0; i < 2 * n; ++i) count *= static_cast<std::size_t>(d);
  std::vector<PauliIndex> out;
  out.reserve(count);
  for (std::size_t flat = 0; flat < count; ++flat) {
    std::vector<int> digits(2 * n);
    std::size_t rest = flat;
    for (std::size_t i = 2 * n; i-- > 0;) {
      digits[i] = static_cast<int>(rest % d);
      rest /= d;
    }
    out.emplace_back(d, std::vector<int>(digits.begin(), digits.begin() + n),
                     std::vector<int>(digits.begin() + n, digits.end()));
  }
  return out;
}

std::size_t canonical_position(const PauliIndex& x) {
  std::size_t flat = 0;
  for (int v : x.q) flat = flat * x.d + static_cast<std::size_t>(mod(v, x.d));
  for (int v : x.p) flat = flat * x.d + static_cast<std::size_t>(mod(v, x.d));
  return flat;
}

}  // namespace flagcap
