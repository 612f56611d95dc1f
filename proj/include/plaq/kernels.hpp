// Copyright 2026 The plaq authors
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

#ifndef PLAQ_KERNELS_HPP
#define PLAQ_KERNELS_HPP

#include <complex>
#include <cstddef>
#include <cstdint>

namespace plaq {

using cplx = std::complex<double>;

// Vector and Pauli-term kernels. The scalar variants are the reference
// implementation; SIMD variants must match them to tight tolerance and are
// selected at runtime (PLAQ_KERNELS=scalar|avx2 overrides autodetection).
//
// pauli_acc_* implements one Hermitian Pauli term of a real-matrix operator:
//   out[t] += c * sign(t) * in[t ^ xm],  sign(t) = (-1)^{|zm & t|}
// for all t in [0, dim); dim must be a multiple of 4.
struct Kernels {
  const char* name;

  void (*axpy_r)(double a, const double* x, double* y, std::size_t n);
  double (*dot_r)(const double* x, const double* y, std::size_t n);
  double (*nrm2sq_r)(const double* x, std::size_t n);
  void (*scal_r)(double a, double* x, std::size_t n);

  void (*axpy_c)(cplx a, const cplx* x, cplx* y, std::size_t n);
  cplx (*dotc_c)(const cplx* x, const cplx* y, std::size_t n);
  double (*nrm2sq_c)(const cplx* x, std::size_t n);
  void (*scal_c)(cplx a, cplx* x, std::size_t n);

  void (*pauli_acc_r)(double c, std::uint64_t xm, std::uint64_t zm,
                      const double* in, double* out, std::size_t dim);
  void (*pauli_acc_c)(double c, std::uint64_t xm, std::uint64_t zm,
                      const cplx* in, cplx* out, std::size_t dim);
};

// Currently selected kernel table.
const Kernels& kernels();

// Forces a variant by name ("scalar", "avx2"); nullptr restores the
// autodetected choice. Throws std::invalid_argument for unknown names and
// std::runtime_error if the variant is unavailable on this machine.
void set_kernels(const char* name);

const Kernels& scalar_kernels();
bool avx2_available();
#if defined(PLAQ_BUILD_AVX2)
const Kernels& avx2_kernels();
#endif

}  // namespace plaq

#endif  // PLAQ_KERNELS_HPP
