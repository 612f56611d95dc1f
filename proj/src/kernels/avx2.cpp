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

// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include <bit>
#include <immintrin.h>

#include "plaq/kernels.hpp"

namespace plaq {
namespace {

double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d shuf = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, shuf));
}

void axpy_r(double a, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d xv = _mm256_loadu_pd(x + i);
    __m256d yv = _mm256_loadu_pd(y + i);
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, xv, yv));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

double dot_r(const double* x, const double* y, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i),
                           acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4),
                           _mm256_loadu_pd(y + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i),
                           acc0);
  }
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

double nrm2sq_r(const double* x, std::size_t n) {
  return dot_r(x, x, n);
}

void scal_r(double a, double* x, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(x + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
  }
  for (; i < n; ++i) x[i] *= a;
}

void axpy_c(cplx a, const cplx* x, cplx* y, std::size_t n) {
  const double* xd = reinterpret_cast<const double*>(x);
  double* yd = reinterpret_cast<double*>(y);
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    __m256d t1 = _mm256_mul_pd(ar, xv);
    __m256d t2 = _mm256_mul_pd(ai, _mm256_permute_pd(xv, 0b0101));
    __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    _mm256_storeu_pd(yd + 2 * i,
                     _mm256_add_pd(yv, _mm256_addsub_pd(t1, t2)));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

cplx dotc_c(const cplx* x, const cplx* y, std::size_t n) {
  const double* xd = reinterpret_cast<const double*>(x);
  const double* yd = reinterpret_cast<const double*>(y);
  __m256d vp = _mm256_setzero_pd();
  __m256d vq = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    vp = _mm256_fmadd_pd(xv, yv, vp);
    vq = _mm256_fmadd_pd(_mm256_permute_pd(xv, 0b0101), yv, vq);
  }
  const __m256d alt = _mm256_set_pd(1.0, -1.0, 1.0, -1.0);
  double re = hsum(vp);
  double im = hsum(_mm256_mul_pd(vq, alt));
  for (; i < n; ++i) {
    const cplx t = std::conj(x[i]) * y[i];
    re += t.real();
    im += t.imag();
  }
  return {re, im};
}

double nrm2sq_c(const cplx* x, std::size_t n) {
  return nrm2sq_r(reinterpret_cast<const double*>(x), 2 * n);
}

void scal_c(cplx a, cplx* x, std::size_t n) {
  double* xd = reinterpret_cast<double*>(x);
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    __m256d t1 = _mm256_mul_pd(ar, xv);
    __m256d t2 = _mm256_mul_pd(ai, _mm256_permute_pd(xv, 0b0101));
    _mm256_storeu_pd(xd + 2 * i, _mm256_addsub_pd(t1, t2));
  }
  for (; i < n; ++i) x[i] *= a;
}

// Lane l of the output block at base reads in[(base ^ xhi) + (l ^ xl)] and
// carries sign (-1)^{|zm & base| + |zm & l|}; base is 4-aligned so the two
// parities separate.
void pauli_acc_r(double c, std::uint64_t xm, std::uint64_t zm,
                 const double* in, double* out, std::size_t dim) {
  const std::uint64_t xhi = xm & ~std::uint64_t{3};
  const int xl = static_cast<int>(xm & 3);
  const unsigned zl = static_cast<unsigned>(zm & 3);
  alignas(32) double lane_sign[4];
  for (unsigned l = 0; l < 4; ++l) {
    lane_sign[l] = (std::popcount(zl & l) & 1) ? -1.0 : 1.0;
  }
  const __m256d vlane = _mm256_load_pd(lane_sign);
  for (std::size_t base = 0; base < dim; base += 4) {
    const double sb = (std::popcount(zm & base) & 1) ? -c : c;
    __m256d v = _mm256_loadu_pd(in + (base ^ xhi));
    if (xl == 1) {
      v = _mm256_permute_pd(v, 0b0101);
    } else if (xl == 2) {
      v = _mm256_permute2f128_pd(v, v, 0x01);
    } else if (xl == 3) {
      v = _mm256_permute2f128_pd(_mm256_permute_pd(v, 0b0101),
                                 _mm256_permute_pd(v, 0b0101), 0x01);
    }
    const __m256d vc = _mm256_mul_pd(_mm256_set1_pd(sb), vlane);
    __m256d o = _mm256_loadu_pd(out + base);
    _mm256_storeu_pd(out + base, _mm256_fmadd_pd(v, vc, o));
  }
}

void pauli_acc_c(double c, std::uint64_t xm, std::uint64_t zm,
                 const cplx* in, cplx* out, std::size_t dim) {
  const double* ind = reinterpret_cast<const double*>(in);
  double* outd = reinterpret_cast<double*>(out);
  const std::uint64_t xhi = xm & ~std::uint64_t{1};
  const bool xl = (xm & 1) != 0;
  const double s1 = (zm & 1) ? -1.0 : 1.0;
  const __m256d vlane = _mm256_set_pd(s1, s1, 1.0, 1.0);
  for (std::size_t base = 0; base < dim; base += 2) {
    const double sb = (std::popcount(zm & base) & 1) ? -c : c;
    __m256d v = _mm256_loadu_pd(ind + 2 * (base ^ xhi));
    if (xl) v = _mm256_permute2f128_pd(v, v, 0x01);
    const __m256d vc = _mm256_mul_pd(_mm256_set1_pd(sb), vlane);
    __m256d o = _mm256_loadu_pd(outd + 2 * base);
    _mm256_storeu_pd(outd + 2 * base, _mm256_fmadd_pd(v, vc, o));
  }
}

}  // namespace

const Kernels& avx2_kernels() {
  static const Kernels table{
      "avx2", axpy_r,  dot_r,  nrm2sq_r, scal_r,
      axpy_c, dotc_c,  nrm2sq_c, scal_c,
      pauli_acc_r, pauli_acc_c,
  };
  return table;
}

}  // namespace plaq
