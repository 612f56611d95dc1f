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

#include "plaq/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "plaq/dense.hpp"
#include "plaq/kernels.hpp"
#include "plaq/op.hpp"

namespace plaq {
namespace {

constexpr double kTransferPulseScale = 0.5;  // kappa: peak g = kappa * V

// The effective spin whose single-site Pauli toggles exactly {p, q}.
StringMove hop_move(const EffectiveLattice& eff, int p, int q) {
  for (int e = 0; e < eff.n_spins(); ++e) {
    const EffectiveSpinAdjacency& adj = eff.adjacency[e];
    const bool z_hit = (adj.z_pair[0] == p && adj.z_pair[1] == q) ||
                       (adj.z_pair[0] == q && adj.z_pair[1] == p);
    if (z_hit) return {e, Axis::Z};
    const bool y_hit = (adj.y_pair[0] == p && adj.y_pair[1] == q) ||
                       (adj.y_pair[0] == q && adj.y_pair[1] == p);
    if (y_hit) return {e, Axis::Y};
  }
  throw std::invalid_argument("consecutive waypoints are not adjacent");
}

// psi <- exp(-i H dt) psi, scaled Taylor expansion. Each substep keeps
// |H| dt below 1/2 so the series converges in a few terms.
void evolve(const OperatorHandle& op, double dt,
            std::vector<std::complex<double>>& psi,
            std::vector<std::complex<double>>& term,
            std::vector<std::complex<double>>& ht) {
  if (dt == 0.0) return;
  const Kernels& K = kernels();
  const std::size_t dim = psi.size();
  const int nsub =
      std::max(1, static_cast<int>(std::ceil(op.one_norm_bound() * dt / 0.5)));
  const double delta = dt / nsub;
  for (int s = 0; s < nsub; ++s) {
    term = psi;
    for (int k = 1; k <= 64; ++k) {
      op.matvec(term.data(), ht.data());
      const std::complex<double> c{0.0, -delta / k};
      for (std::size_t i = 0; i < dim; ++i) term[i] = c * ht[i];
      K.axpy_c(1.0, term.data(), psi.data(), dim);
      if (std::sqrt(K.nrm2sq_c(term.data(), dim)) < 1e-15) break;
    }
  }
}

}  // namespace

double trapped_coupling(double jx, double jy, double jz, double jz_prime) {
  if (!(jz > 0.0) || !(jz_prime > 0.0)) {
    throw std::domain_error("trapped coupling requires jz, jz_prime > 0");
  }
  const double s = jz + jz_prime;
  return (jx * jx * jy * jy) / (4.0 * s * s * jz_prime);
}

std::vector<double> trap_well(const EffectiveLattice& eff,
                              std::vector<double> base, int p, double V) {
  if (static_cast<int>(base.size()) != eff.n_plaquettes()) {
    throw std::invalid_argument("coupling vector size mismatch");
  }
  if (p < 0 || p >= eff.n_plaquettes()) {
    throw std::invalid_argument("trap plaquette out of range");
  }
  if (V < 0.0 || V > base[p]) {
    throw std::invalid_argument("well depth must lie in [0, base coupling]");
  }
  base[p] -= V;
  return base;
}

TransportResult adiabatic_transport(const EffectiveLattice& eff,
                                    const StateVector& initial, int partner,
                                    const TrapSchedule& sched) {
  const int np = eff.n_plaquettes();
  if (initial.n() != eff.n_spins()) {
    throw std::invalid_argument("state size does not match the lattice");
  }
  if (sched.waypoints.empty()) {
    throw std::invalid_argument("schedule needs at least one waypoint");
  }
  if (!(sched.well_depth > 0.0) || sched.well_depth > 1.0) {
    throw std::invalid_argument("well depth must lie in (0, 1]");
  }
  if (!(sched.hop_time > 0.0) && sched.waypoints.size() > 1) {
    throw std::invalid_argument("hop time must be positive");
  }
  if (sched.steps_per_hop < 1) {
    throw std::invalid_argument("need at least one step per hop");
  }
  if (partner < 0 || partner >= np) {
    throw std::invalid_argument("partner plaquette out of range");
  }
  for (int w : sched.waypoints) {
    if (w < 0 || w >= np) {
      throw std::invalid_argument("waypoint out of range");
    }
    if (w == partner) {
      throw std::invalid_argument("the partner must stay off the path");
    }
  }

  // The initial state must hold the pair at (first waypoint, partner).
  for (int p = 0; p < np; ++p) {
    const double want =
        (p == sched.waypoints.front() || p == partner) ? -1.0 : 1.0;
    const std::complex<double> q =
        expect(eff.plaquette_operator(p), initial);
    if (std::abs(q - want) > 1e-9) {
      throw std::invalid_argument(
          "initial state is not the trapped pair eigenstate");
    }
  }

  const double V = sched.well_depth;
  std::vector<std::complex<double>> psi(initial.data(),
                                        initial.data() + initial.dim());
  std::vector<std::complex<double>> term(psi.size()), ht(psi.size());

  for (std::size_t h = 0; h + 1 < sched.waypoints.size(); ++h) {
    const int w_old = sched.waypoints[h];
    const int w_new = sched.waypoints[h + 1];
    const StringMove hop = hop_move(eff, w_old, w_new);
    const PauliString hop_op = eff.spin_operator(hop.spin, hop.axis);
    const double dt = sched.hop_time / sched.steps_per_hop;
    for (int i = 0; i < sched.steps_per_hop; ++i) {
      const double s = (i + 0.5) / sched.steps_per_hop;
      std::vector<double> j(np, 1.0);
      j = trap_well(eff, std::move(j), w_old, V * (1.0 - s));
      j = trap_well(eff, std::move(j), w_new, V * s);
      j = trap_well(eff, std::move(j), partner, V);
      OperatorHandle op = assemble_effective(eff, j);
      const double g =
          kTransferPulseScale * V * std::sin(std::numbers::pi * s);
      op.add(-g, hop_op);
      evolve(op, dt, psi, term, ht);
    }
  }

  TransportResult result;
  result.hops = static_cast<int>(sched.waypoints.size()) - 1;
  StateVector fin(eff.n_spins());
  std::copy(psi.begin(), psi.end(), fin.data());
  result.norm_drift = std::abs(fin.norm() - 1.0);

  // Fidelity: squared projection onto the lowest final-Hamiltonian
  // eigencluster holding the pair at (last waypoint, partner).
  const int w_last = sched.waypoints.back();
  std::vector<double> j(np, 1.0);
  j = trap_well(eff, std::move(j), w_last, V);
  j = trap_well(eff, std::move(j), partner, V);
  const OperatorHandle h_final = assemble_effective(eff, j);
  const DenseSpectrum dense = dense_spectrum(h_final, true);

  const std::size_t dim = fin.dim();
  std::vector<std::complex<double>> qv(dim);
  double cluster_energy = 0.0;
  bool have_cluster = false;
  double fidelity = 0.0;
  const PauliString q_new = eff.plaquette_operator(w_last);
  const PauliString q_partner = eff.plaquette_operator(partner);
  for (std::size_t k = 0; k < dense.eigenvalues.size(); ++k) {
    const std::complex<double>* v = dense.eigenvectors[k].data();
    apply_pauli(q_new, v, qv.data(), dim);
    const double occ_new = kernels().dotc_c(v, qv.data(), dim).real();
    apply_pauli(q_partner, v, qv.data(), dim);
    const double occ_partner = kernels().dotc_c(v, qv.data(), dim).real();
    if (occ_new > -0.5 || occ_partner > -0.5) continue;
    if (!have_cluster) {
      cluster_energy = dense.eigenvalues[k];
      have_cluster = true;
    }
    if (dense.eigenvalues[k] > cluster_energy + 1e-8) break;
    const std::complex<double> amp =
        kernels().dotc_c(v, fin.data(), dim);
    fidelity += std::norm(amp);
  }
  if (!have_cluster) {
    throw std::logic_error("no trapped pair eigenstates in the final well");
  }
  result.fidelity = fidelity;
  result.final_state = std::move(fin);
  return result;
}

double hubbard_ising_coupling(double t_a, double u_aa, double u_ab) {
  if (!(u_aa > 0.0) || !(u_ab > 0.0)) {
    throw std::domain_error("interaction energies must be positive");
  }
  return t_a * t_a * (1.0 / u_aa - 1.0 / (2.0 * u_ab));
}

}  // namespace plaq
