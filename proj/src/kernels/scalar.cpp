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

#include <bit>

#include "plaq/kernels.hpp"

namespace plaq {
namespace {

void axpy_r(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

double dot_r(const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

double nrm2sq_r(const double* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * x[i];
  return s;
}

void scal_r(double a, double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

void axpy_c(cplx a, const cplx* x, cplx* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

cplx dotc_c(const cplx* x, const cplx* y, std::size_t n) {
  cplx s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += std::conj(x[i]) * y[i];
  return s;
}

double nrm2sq_c(const cplx* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += std::norm(x[i]);
  return s;
}

void scal_c(cplx a, cplx* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

void pauli_acc_r(double c, std::uint64_t xm, std::uint64_t zm,
                 const double* in, double* out, std::size_t dim) {
  for (std::size_t t = 0; t < dim; ++t) {
    const double s = (std::popcount(zm & t) & 1) ? -c : c;
    out[t] += s * in[t ^ xm];
  }
}

void pauli_acc_c(double c, std::uint64_t xm, std::uint64_t zm,
                 const cplx* in, cplx* out, std::size_t dim) {
  for (std::size_t t = 0; t < dim; ++t) {
    const double s = (std::popcount(zm & t) & 1) ? -c : c;
    out[t] += s * in[t ^ xm];
  }
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels table{
      "scalar", axpy_r,  dot_r,  nrm2sq_r, scal_r,
      axpy_c,   dotc_c,  nrm2sq_c, scal_c,
      pauli_acc_r, pauli_acc_c,
  };
  return table;
}

}  // namespace plaq
