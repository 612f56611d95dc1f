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

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "plaq/kernels.hpp"
#include "plaq/lattice.hpp"
#include "plaq/pauli.hpp"

namespace plaq {

// One generalized Pauli term, stored with the phase already folded into the
// coefficient: the term acts as out[s ^ x] += coeff * (-1)^|z & s| * in[s].
// A Hermitian weight * PauliString always folds to a purely real or purely
// imaginary coeff; real terms route through the vectorized kernels.
struct OperatorTerm {
  std::complex<double> coeff;
  std::uint64_t x = 0;
  std::uint64_t z = 0;
};

// Sparse-as-Pauli-sum Hermitian operator on n <= 64 spins. Holds only masks
// and coefficients; matvec cost is O(terms * 2^n) with no materialized matrix.
class OperatorHandle {
 public:
  OperatorHandle() = default;
  explicit OperatorHandle(int n);

  int n() const { return n_; }
  std::size_t dim() const { return std::size_t{1} << n_; }
  const std::vector<OperatorTerm>& terms() const { return terms_; }

  // Adds weight * p. Throws unless weight * p is Hermitian (weight real and
  // p Hermitian, so the folded coefficient is real or imaginary).
  void add(double weight, const PauliString& p);
  // Adds weight * identity.
  void add_scalar(double weight);

  // Merges terms with equal masks and drops coefficients below 1e-15.
  void compress();

  // True when every folded coefficient is real; such operators are real
  // symmetric matrices in the computational basis.
  bool is_real() const;

  // Sum of |coeff|; an upper bound on the spectral norm.
  double one_norm_bound() const;

  // out = H * in. The real overload requires is_real().
  void matvec(const double* in, double* out) const;
  void matvec(const std::complex<double>* in, std::complex<double>* out) const;

 private:
  int n_ = 0;
  std::vector<OperatorTerm> terms_;
};

// Replaces the coupling of individual links (e.g. one weakened z link acting
// as a trap) on top of the uniform per-type couplings.
struct LinkOverride {
  int link = 0;
  double j = 0.0;
};

struct CouplingConfig {
  double jx = 0.0;
  double jy = 0.0;
  double jz = 1.0;
  std::vector<LinkOverride> overrides;
};

// Applies a single PauliString to a dense vector: out = p * in. The real
// overload requires p's folded coefficient to be real (even Y count).
void apply_pauli(const PauliString& p, const double* in, double* out,
                 std::size_t dim);
void apply_pauli(const PauliString& p, const std::complex<double>* in,
                 std::complex<double>* out, std::size_t dim);

// Two-body spin Hamiltonian on the honeycomb lattice:
//   H = -sum_links J_type sigma^type_a sigma^type_b.
OperatorHandle assemble_honeycomb(const HoneycombLattice& lat,
                                  const CouplingConfig& config);

// Plaquette Hamiltonian on the effective square lattice with per-plaquette
// couplings: H = -sum_p j_p[p] Q_p.
OperatorHandle assemble_effective(const EffectiveLattice& eff,
                                  const std::vector<double>& j_p);
OperatorHandle assemble_effective(const EffectiveLattice& eff, double j);

}  // namespace plaq
