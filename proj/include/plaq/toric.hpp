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

#ifndef PLAQ_TORIC_HPP
#define PLAQ_TORIC_HPP

#include <array>
#include <vector>

#include "plaq/lattice.hpp"
#include "plaq/state.hpp"

namespace plaq {

// Anyon species. The two-bit encoding makes fusion a XOR.
enum class AnyonType : int { Vacuum = 0, X = 1, Y = 2, Z = 3 };

// Abelian fusion: Vacuum is the identity, every species is its own inverse,
// and any two distinct non-vacuum species fuse to the third.
AnyonType fuse(AnyonType a, AnyonType b);

struct FusionTable {
  std::array<std::array<AnyonType, 4>, 4> total;
};
FusionTable fusion_table();

struct Particle {
  StringKind type;
  std::vector<int> plaquettes;  // stabilizers flipped by the creation string
  StringPath path;
};

// Plaquette occupation snapshot plus the ledger of creation strings that
// produced it. Occupations recomputed from the state must match the ledger.
struct AnyonConfiguration {
  std::vector<int> occupations;  // +1 or -1 per plaquette
  std::vector<Particle> particles;
};

// Simultaneous +1 eigenstate of every plaquette stabilizer, built by
// projecting the all-up basis state with prod_p (1 + Q_p)/2. Throws
// std::runtime_error if the projector annihilates the reference state
// (inconsistent plaquette roles; cannot happen for valid lattices).
StateVector ground_state(const EffectiveLattice& eff);

// Reads every <Q_p> off the state. Each must be +-1 within 1e-9 (states
// reachable by strings from the ground state are stabilizer eigenstates);
// throws std::runtime_error otherwise. The particle ledger is left empty.
AnyonConfiguration measure_occupations(const EffectiveLattice& eff,
                                       const StateVector& s);

// Length-one creation string at one effective spin: Z excites the spin's
// diagonal pair, Y the antidiagonal pair, X all four plaquettes.
StringPath single_site_string(const EffectiveLattice& eff, int spin,
                              StringKind kind);

// Applies the path's operator (factor i per X move) and returns the new
// state plus the updated configuration. `before` carries the ledger of
// previously created particles; occupations are re-measured from the new
// state and checked against the ledger (std::logic_error on mismatch).
std::pair<StateVector, AnyonConfiguration> create_pair(
    const EffectiveLattice& eff, const StateVector& s, const StringPath& path,
    const AnyonConfiguration* before = nullptr);

// Closed transport loop around a plaquette region: the product of the
// region's stabilizers factored into single-site moves. Excites nothing;
// endpoints is empty.
StringPath loop_path(const EffectiveLattice& eff,
                     const std::vector<int>& region);

// Statistics phase picked up by carrying the loop's particle around the
// target's anyons: commutation phase of the loop operator with the product
// of the target's creation strings. The loop must excite no plaquettes
// (std::invalid_argument otherwise).
int braid_phase(const EffectiveLattice& eff, const StringPath& loop,
                const AnyonConfiguration& target);

// Canonical exchange choreography for two single-move X strings at spins
// e(a, b) and e(a, b+2): hop the facing fermion of s1 across the shared
// spin, then walk the facing fermion of s2 back around the east side.
// Throws std::invalid_argument unless the two strings sit in that relative
// arrangement.
std::vector<StringMove> exchange_moves(const EffectiveLattice& eff,
                                       const StringPath& s1,
                                       const StringPath& s2);

// Scalar by which the post-exchange state differs from the pre-exchange
// one. The moves must restore the excitation map (their net operator
// commutes with every stabilizer) and must not wind the torus (either
// raises std::invalid_argument). The overload without explicit moves uses
// exchange_moves.
int exchange_phase_xx(const EffectiveLattice& eff, const StringPath& s1,
                      const StringPath& s2);
int exchange_phase_xx(const EffectiveLattice& eff, const StringPath& s1,
                      const StringPath& s2,
                      const std::vector<StringMove>& moves);

// exp(-i theta Z_spin) |s> = cos(theta)|s> - i sin(theta) Z_spin|s>, exact
// two-term expansion.
StateVector one_qubit_rotation(const StateVector& s, int eff_spin,
                               double theta);

// Register placement for the controlled-phase experiment: anyon pairs are
// created at the control and target spins and the loop encircles the
// region. The loop must not touch the control's strings.
struct RegisterLayout {
  int control_spin = 0;
  int target_spin = 0;
  std::vector<int> loop_region;
};

// Control at e(0, 0), target at e(nx/2, ny/2), loop around the target's
// west+center plaquette pair. Requires nx >= 4 and ny >= 4 so the regions
// are disjoint.
RegisterLayout default_register_layout(const EffectiveLattice& eff);

// phase[a][b] for control species a and target species b (Vacuum, X, Y, Z):
// the exact scalar produced by transporting the control's particle around
// the loop region with species b's pair inside. A vacuum control transports
// nothing, so its row is +1.
struct ControlledPhaseTable {
  std::array<std::array<double, 4>, 4> phase;
  RegisterLayout layout;
};

ControlledPhaseTable controlled_phase_experiment(const EffectiveLattice& eff,
                                                 const RegisterLayout& layout);

}  // namespace plaq

#endif  // PLAQ_TORIC_HPP
