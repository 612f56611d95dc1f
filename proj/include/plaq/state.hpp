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

#ifndef PLAQ_STATE_HPP
#define PLAQ_STATE_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "plaq/op.hpp"
#include "plaq/pauli.hpp"

namespace plaq {

// Dense complex amplitude vector over n <= 26 spins. Thin wrapper: the
// anyon and transport layers own the physics, this owns the arithmetic.
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(int n);  // all-zero amplitudes

  // Computational basis state |index> (bit j set = spin j down).
  static StateVector basis(int n, std::uint64_t index);

  int n() const { return n_; }
  std::size_t dim() const { return amp_.size(); }
  std::complex<double>* data() { return amp_.data(); }
  const std::complex<double>* data() const { return amp_.data(); }
  std::complex<double>& operator[](std::size_t i) { return amp_[i]; }
  const std::complex<double>& operator[](std::size_t i) const {
    return amp_[i];
  }

  double norm() const;
  // Throws std::runtime_error on a numerically zero vector.
  void normalize();

 private:
  int n_ = 0;
  std::vector<std::complex<double>> amp_;
};

// out = p |in>.
StateVector apply(const PauliString& p, const StateVector& in);
// out = H |in>.
StateVector apply(const OperatorHandle& op, const StateVector& in);

// <a|b>, conjugate on the first argument.
std::complex<double> overlap(const StateVector& a, const StateVector& b);

// <s|p|s> and <s|H|s> (the operator overload returns the real part; H is
// Hermitian by construction).
std::complex<double> expect(const PauliString& p, const StateVector& s);
double expect(const OperatorHandle& op, const StateVector& s);

// y += c x and s *= c.
void axpy(std::complex<double> c, const StateVector& x, StateVector& y);
void scale(std::complex<double> c, StateVector& s);

}  // namespace plaq

#endif  // PLAQ_STATE_HPP
