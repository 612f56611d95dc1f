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

#ifndef PLAQ_DYNAMICS_HPP
#define PLAQ_DYNAMICS_HPP

#include <vector>

#include "plaq/lattice.hpp"
#include "plaq/state.hpp"

namespace plaq {

// Plaquette coupling when one dimer's z coupling is changed to jz_prime:
//   jx^2 jy^2 / (4 (jz + jz_prime)^2 jz_prime).
// Reduces to the uniform coefficient jx^2 jy^2 / (16 jz^3) at
// jz_prime = jz. Throws std::domain_error unless jz, jz_prime > 0.
double trapped_coupling(double jx, double jy, double jz, double jz_prime);

// Couplings with base[p] lowered by V. V may be 0 (identity); V < 0 or
// V > base[p] throws std::invalid_argument.
std::vector<double> trap_well(const EffectiveLattice& eff,
                              std::vector<double> base, int p, double V);

// Moving-well protocol: the trapped plaquette walks along `waypoints` (each
// consecutive pair adjacent through one effective spin); per hop the well
// ramps down at the old site and up at the new one over time T while a
// transfer pulse -g(s) sigma_e with g = kappa V sin(pi s) acts on the
// shared spin. Couplings are in units of the uniform plaquette coupling
// (base 1 everywhere).
struct TrapSchedule {
  std::vector<int> waypoints;
  double well_depth = 0.5;  // V, in units of the base coupling
  double hop_time = 10.0;   // T per hop
  int steps_per_hop = 400;  // schedule discretization (midpoint rule)
};

struct TransportResult {
  StateVector final_state;
  // Squared projection onto the lowest eigencluster of the final
  // Hamiltonian whose members hold the pair at (last waypoint, partner).
  double fidelity = 0.0;
  double norm_drift = 0.0;
  int hops = 0;
};

// Evolves `initial` (the trapped pair eigenstate at waypoints[0] and
// `partner`) under the time-dependent well Hamiltonian. Throws
// std::invalid_argument on schedule violations: empty waypoints,
// non-adjacent consecutive waypoints, partner on the path, V or T out of
// range, or an initial state whose excitations are not at
// (waypoints[0], partner).
TransportResult adiabatic_transport(const EffectiveLattice& eff,
                                    const StateVector& initial, int partner,
                                    const TrapSchedule& sched);

// Ising z coupling generated by species-a tunneling between wells:
//   t_a^2 (1/u_aa - 1/(2 u_ab)).
// Throws std::domain_error unless u_aa, u_ab > 0.
double hubbard_ising_coupling(double t_a, double u_aa, double u_ab);

}  // namespace plaq

#endif  // PLAQ_DYNAMICS_HPP
