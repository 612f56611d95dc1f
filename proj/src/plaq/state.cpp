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

#include "plaq/state.hpp"

#include <cmath>
#include <stdexcept>

#include "plaq/kernels.hpp"

namespace plaq {

StateVector::StateVector(int n) : n_(n) {
  if (n < 1 || n > 26) {
    throw std::invalid_argument("state size out of supported range");
  }
  amp_.assign(std::size_t{1} << n, {0.0, 0.0});
}

StateVector StateVector::basis(int n, std::uint64_t index) {
  StateVector s(n);
  if (index >= s.dim()) {
    throw std::invalid_argument("basis index out of range");
  }
  s.amp_[index] = {1.0, 0.0};
  return s;
}

double StateVector::norm() const {
  return std::sqrt(kernels().nrm2sq_c(amp_.data(), amp_.size()));
}

void StateVector::normalize() {
  const double nrm = norm();
  if (nrm < 1e-12) {
    throw std::runtime_error("cannot normalize a zero state");
  }
  kernels().scal_c(1.0 / nrm, amp_.data(), amp_.size());
}

StateVector apply(const PauliString& p, const StateVector& in) {
  if (p.n() != in.n()) {
    throw std::invalid_argument("operator and state sizes differ");
  }
  StateVector out(in.n());
  apply_pauli(p, in.data(), out.data(), in.dim());
  return out;
}

StateVector apply(const OperatorHandle& op, const StateVector& in) {
  if (op.n() != in.n()) {
    throw std::invalid_argument("operator and state sizes differ");
  }
  StateVector out(in.n());
  op.matvec(in.data(), out.data());
  return out;
}

std::complex<double> overlap(const StateVector& a, const StateVector& b) {
  if (a.n() != b.n()) {
    throw std::invalid_argument("state sizes differ");
  }
  return kernels().dotc_c(a.data(), b.data(), a.dim());
}

std::complex<double> expect(const PauliString& p, const StateVector& s) {
  return overlap(s, apply(p, s));
}

double expect(const OperatorHandle& op, const StateVector& s) {
  return overlap(s, apply(op, s)).real();
}

void axpy(std::complex<double> c, const StateVector& x, StateVector& y) {
  if (x.n() != y.n()) {
    throw std::invalid_argument("state sizes differ");
  }
  kernels().axpy_c(c, x.data(), y.data(), x.dim());
}

void scale(std::complex<double> c, StateVector& s) {
  kernels().scal_c(c, s.data(), s.dim());
}

}  // namespace plaq
