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

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace flagcap::kernels {

using cplx = std::complex<double>;

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

/// Best instruction set the running CPU supports among the compiled variants.
Isa detected_isa();

/// Instruction set used by the dispatching entry points. Defaults to
/// detected_isa(), or scalar when FLAGCAP_FORCE_SCALAR is set in the
/// environment.
Isa active_isa();

/// Overrides the dispatch choice. Requesting an ISA the CPU lacks falls back
/// to scalar. Intended for equivalence tests and benchmarking.
void set_active_isa(Isa isa);

// Row-major complex GEMM with accumulation: c[m x n] += a[m x k] * b[k x n].
void cgemm_acc(std::span<const cplx> a, std::span<const cplx> b,
               std::span<cplx> c, std::size_t m, std::size_t k, std::size_t n);

// sum_i conj(x_i) * y_i
cplx cdotc(std::span<const cplx> x, std::span<const cplx> y);

namespace scalar {
void cgemm_acc(const cplx* a, const cplx* b, cplx* c, std::size_t m,
               std::size_t k, std::size_t n);
cplx cdotc(const cplx* x, const cplx* y, std::size_t len);
}  // namespace scalar

namespace avx2 {
void cgemm_acc(const cplx* a, const cplx* b, cplx* c, std::size_t m,
               std::size_t k, std::size_t n);
cplx cdotc(const cplx* x, const cplx* y, std::size_t len);
}  // namespace avx2

}  // namespace flagcap::kernels
