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

#include <cstddef>
#include <vector>

#include "flagcap/operators.hpp"

namespace flagcap {

/// Label x = (q, p) of a Weyl-Heisenberg operator on n qudits of local
/// dimension d. Entries live in Z_D with D = d for even d and D = 2d for odd
/// d; channel-level labels only use {0, ..., d-1}.
struct PauliIndex {
  int d = 2;
  std::vector<int> q;
  std::vector<int> p;

  PauliIndex() = default;
  PauliIndex(int d, std::vector<int> q, std::vector<int> p);
  /// Single-qudit label.
  static PauliIndex single(int d, int q, int p) { return {d, {q}, {p}}; }
  static PauliIndex zero(int d, std::size_t n);

  std::size_t n() const { return q.size(); }
  bool is_zero() const;
  /// Componentwise sum mod D.
  PauliIndex operator+(const PauliIndex& other) const;

  bool operator==(const PauliIndex&) const = default;
};

/// D: d for even d, 2d for odd d.
int phase_modulus(int d);

/// W_(q,p) = exp(-(d^2+1) pi i (p.q) / d) * tensor_j Z^{p_j} X^{q_j}.
ComplexMatrix weyl_operator(const PauliIndex& x);

/// <x, y> = p.q' - q.p' mod D.
int symplectic_form(const PauliIndex& x, const PauliIndex& y);

/// All d^{2n} labels with entries in {0..d-1}, lexicographic in the digit
/// string (q_1..q_n, p_1..p_n). For d = 2, n = 1: I, Z, X, Y.
std::vector<PauliIndex> pauli_twirl_basis(int d, std::size_t n);

/// Position of a channel-level label (entries reduced mod d) in
/// pauli_twirl_basis order.
std::size_t canonical_position(const PauliIndex& x);

}  // namespace flagcap
