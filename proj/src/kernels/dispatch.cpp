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

#include <atomic>
#include <cstdlib>
#include <stdexcept>

#include "flagcap/kernels.hpp"

namespace flagcap::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(FLAGCAP_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa initial_isa() {
  if (std::getenv("FLAGCAP_FORCE_SCALAR") != nullptr) return Isa::scalar;
  return detected_isa();
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

Isa detected_isa() {
  static const Isa isa = cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
  return isa;
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (isa == Isa::avx2 && detected_isa() != Isa::avx2) isa = Isa::scalar;
  current().store(isa, std::memory_order_relaxed);
}

void cgemm_acc(std::span<const cplx> a, std::span<const cplx> b,
               std::span<cplx> c, std::size_t m, std::size_t k, std::size_t n) {
  if (a.size() != m * k || b.size() != k * n || c.size() != m * n) {
    throw std::invalid_argument("cgemm_acc: buffer sizes do not match shape");
  }
#if defined(FLAGCAP_HAVE_AVX2)
  if (active_isa() == Isa::avx2) {
    avx2::cgemm_acc(a.data(), b.data(), c.data(), m, k, n);
    return;
  }
#endif
  scalar::cgemm_acc(a.data(), b.data(), c.data(), m, k, n);
}

cplx cdotc(std::span<const cplx> x, std::span<const cplx> y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("cdotc: length mismatch");
  }
#if defined(FLAGCAP_HAVE_AVX2)
  if (active_isa() == Isa::avx2) return avx2::cdotc(x.data(), y.data(), x.size());
#endif
  return scalar::cdotc(x.data(), y.data(), x.size());
}

#if !defined(FLAGCAP_HAVE_AVX2)
namespace avx2 {
void cgemm_acc(const cplx* a, const cplx* b, cplx* c, std::size_t m,
               std::size_t k, std::size_t n) {
  scalar::cgemm_acc(a, b, c, m, k, n);
}
cplx cdotc(const cplx* x, const cplx* y, std::size_t len) {
  return scalar::cdotc(x, y, len);
}
}  // namespace avx2
#endif

}  // namespace flagcap::kernels
