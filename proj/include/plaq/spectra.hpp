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

#include <cstdint>
#include <vector>

#include "plaq/lanczos.hpp"
#include "plaq/lattice.hpp"
#include "plaq/op.hpp"
#include "plaq/pauli.hpp"

namespace plaq {

struct SpectrumResult {
  std::vector<double> eigenvalues;                // ascending
  std::vector<double> residuals;                  // ||H x - theta x||
  std::vector<std::vector<double>> eigenvectors;  // matching order
  long matvecs = 0;
  bool converged = false;
  // Sector solves only:
  bool sector_empty = false;           // projector annihilated every seed
  double sector_purity_error = 0.0;    // max |<C> - sign| over constraints
};

// A symmetry sector: mutually commuting Hermitian strings squaring to +1,
// each pinned to a target eigenvalue. Every constraint must commute with
// every term of the operator being solved (checked).
struct SectorSpec {
  std::vector<PauliString> constraints;
  std::vector<int> signs;  // +1 or -1 per constraint
};

// k lowest eigenpairs of the full operator via restarted deflated Lanczos.
SpectrumResult lowest_eigenvalues(const OperatorHandle& op, int k, double tol,
                                  const LanczosOptions* base = nullptr);

// k lowest eigenpairs restricted to a symmetry sector. The solver projects
// the Krylov flow with P = prod_c (1 + s_c C_c)/2 instead of penalty shifts,
// so reported eigenvalues, residuals and expectation purities all refer to
// the original operator. If the projector annihilates the seeds the sector
// is empty and the result says so. May return fewer than k pairs when the
// sector dimension is smaller than k.
SpectrumResult lowest_eigenvalues_in_sector(const OperatorHandle& op,
                                            const SectorSpec& sector, int k,
                                            double tol,
                                            const LanczosOptions* base =
                                                nullptr);

// Ground-multiplet clustering: among spacings g >= 1e-9 whose preceding
// spacings are all < max(1e-9, cluster_tol * g), the last one is the gap and
// the states before it are the multiplet. Taking the last (coarsest) valid
// split keeps tiny multiplet-internal splittings from masquerading as the
// gap. Throws when no valid split exists (increase k).
double gap_above_ground_multiplet(const std::vector<double>& ascending,
                                  double cluster_tol = 1e-3);
int ground_multiplet_size(const std::vector<double>& ascending,
                          double cluster_tol = 1e-3);
double gap_above_ground_multiplet(const SpectrumResult& s,
                                  double cluster_tol = 1e-3);
int ground_multiplet_size(const SpectrumResult& s,
                          double cluster_tol = 1e-3);

// Fourth-order plaquette coupling jx^2 jy^2 / (16 jz^3); requires jz > 0.
double effective_coupling(const CouplingConfig& c);

enum class GapKind { YZ, X };

// Perturbative anyon gap: 4 J_eff for a YZ pair, 8 J_eff for an X pair.
double perturbative_gap(const CouplingConfig& c, GapKind kind);

// Conserved winding cycles of the honeycomb Hamiltonian at any coupling:
// the product over one cell row of sigma^y on both sublattice sites, and the
// product over one cell column of sigma^x on both sublattice sites. Both
// commute with every link term and every plaquette operator.
PauliString cycle_operator_x(const HoneycombLattice& lat, int iy);
PauliString cycle_operator_y(const HoneycombLattice& lat, int ix);

// Translation-equivalence classes of vortex placements on the nx x ny torus
// of plaquettes. rep_mask is the lexicographically smallest translate;
// multiplicity is the orbit size. Classes with the same spectrum need only
// one solve each.
struct VortexClass {
  std::uint64_t rep_mask = 0;
  int multiplicity = 0;
  std::vector<int> plaquettes;  // set bits of rep_mask
};
std::vector<VortexClass> vortex_classes(int nx, int ny, int n_vortices);

// Sector of the honeycomb operator: every plaquette operator pinned (+1, or
// -1 where vortex_mask has a bit), plus the two winding cycles pinned to
// loop_x_sign and loop_y_sign.
SectorSpec honeycomb_sector(const HoneycombLattice& lat,
                            std::uint64_t vortex_mask, int loop_x_sign,
                            int loop_y_sign);

}  // namespace plaq
