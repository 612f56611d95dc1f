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

#ifndef PLAQ_PAULI_HPP
#define PLAQ_PAULI_HPP

#include <complex>
#include <cstdint>
#include <string>

namespace plaq {

enum class Axis : int { X = 0, Y = 1, Z = 2 };

// Multi-qubit Pauli operator in symplectic form:
//
//   P = i^phase_exp * prod_j X_j^{x bit j} * prod_j Z_j^{z bit j}
//
// with all X factors to the left of all Z factors. A site carries Y iff it
// is set in both masks; the i of Y = i*X*Z is folded into phase_exp at
// construction, so single(n, j, Axis::Y) has phase_exp = 1. Site count is
// limited to 64 (bitmask representation).
class PauliString {
 public:
  PauliString() = default;

  // Identity on n sites.
  static PauliString identity(int n);

  // Single-site Pauli on n sites.
  static PauliString single(int n, int site, Axis axis);

  int n() const { return n_; }
  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }
  int phase_exp() const { return k_; }

  bool is_identity_mask() const { return x_ == 0 && z_ == 0; }
  int weight() const;

  // True iff P == P^dagger, i.e. phase_exp == |x & z| (mod 2).
  bool is_hermitian() const;

  // Multiplies the stored scalar by i^m.
  PauliString& mul_i(int m = 1);

  // Applies P to the computational basis state |s> (bit j set = spin j
  // down, so Z_j |s> = (-1)^{s_j} |s>). Output basis index is s ^ x_mask;
  // the scalar is i^{result.phase_exp}.
  struct BasisImage {
    std::uint64_t state;
    int phase_exp;
    std::complex<double> phase() const;
  };
  BasisImage apply_to_basis(std::uint64_t s) const;

  // Scalar i^phase_exp as a complex number.
  std::complex<double> scalar() const;

  // Renders as "i^k . L0 L1 ..." with per-site letters X/Y/Z and the scalar
  // shown relative to the Hermitian letter normal form; identity is "1".
  std::string to_string() const;

  friend bool operator==(const PauliString& a, const PauliString& b) = default;

 private:
  PauliString(int n, std::uint64_t x, std::uint64_t z, int k);

  int n_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
  int k_ = 0;  // phase exponent, mod 4

  friend PauliString multiply(const PauliString& a, const PauliString& b);
};

// Operator product a*b (b applied first). Phase rule:
//   k = k_a + k_b + 2*|z_a & x_b|  (mod 4),
// from commuting Z^{z_a} past X^{x_b}. Throws std::invalid_argument on
// mismatched site counts.
PauliString multiply(const PauliString& a, const PauliString& b);

// +1 if a and b commute, -1 if they anticommute:
//   (-1)^{|x_a & z_b| + |z_a & x_b|}.
int commutation_phase(const PauliString& a, const PauliString& b);

}  // namespace plaq

#endif  // PLAQ_PAULI_HPP
