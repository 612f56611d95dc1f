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

#include "plaq/toric.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace plaq {
namespace {

StringKind to_string_kind(AnyonType t) {
  switch (t) {
    case AnyonType::X:
      return StringKind::X;
    case AnyonType::Y:
      return StringKind::Y;
    case AnyonType::Z:
      return StringKind::Z;
    default:
      throw std::invalid_argument("vacuum has no creation string");
  }
}

// (ix, iy) of an effective spin / plaquette index.
std::pair<int, int> coords(const EffectiveLattice& eff, int idx) {
  return {idx % eff.nx, idx / eff.nx};
}

PauliString move_operator(const EffectiveLattice& eff, const StringMove& m) {
  PauliString p = eff.spin_operator(m.spin, m.axis);
  if (m.axis == Axis::X) p.mul_i();
  return p;
}

}  // namespace

AnyonType fuse(AnyonType a, AnyonType b) {
  const int ia = static_cast<int>(a);
  const int ib = static_cast<int>(b);
  if (ia < 0 || ia > 3 || ib < 0 || ib > 3) {
    throw std::invalid_argument("unknown anyon type");
  }
  return static_cast<AnyonType>(ia ^ ib);
}

FusionTable fusion_table() {
  FusionTable t;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      t.total[a][b] = fuse(static_cast<AnyonType>(a), static_cast<AnyonType>(b));
    }
  }
  return t;
}

StateVector ground_state(const EffectiveLattice& eff) {
  const int n = eff.n_spins();
  StateVector psi = StateVector::basis(n, 0);
  for (int p = 0; p < eff.n_plaquettes(); ++p) {
    StateVector tmp = apply(eff.plaquette_operator(p), psi);
    scale(0.5, psi);
    axpy(0.5, tmp, psi);
  }
  if (psi.norm() < 1e-9) {
    throw std::runtime_error(
        "stabilizer projector annihilated the reference state");
  }
  psi.normalize();
  for (int p = 0; p < eff.n_plaquettes(); ++p) {
    const std::complex<double> q = expect(eff.plaquette_operator(p), psi);
    if (std::abs(q - 1.0) > 1e-9) {
      throw std::logic_error("ground state is not a +1 stabilizer eigenstate");
    }
  }
  return psi;
}

AnyonConfiguration measure_occupations(const EffectiveLattice& eff,
                                       const StateVector& s) {
  AnyonConfiguration cfg;
  cfg.occupations.resize(eff.n_plaquettes());
  int minus = 0;
  for (int p = 0; p < eff.n_plaquettes(); ++p) {
    const std::complex<double> q = expect(eff.plaquette_operator(p), s);
    if (std::abs(q.imag()) > 1e-9 ||
        std::min(std::abs(q.real() - 1.0), std::abs(q.real() + 1.0)) > 1e-9) {
      throw std::runtime_error(
          "state is not a stabilizer eigenstate; occupation undefined");
    }
    cfg.occupations[p] = q.real() > 0.0 ? 1 : -1;
    minus += cfg.occupations[p] < 0;
  }
  if (minus % 2 != 0) {
    throw std::logic_error("odd excitation count on the torus");
  }
  return cfg;
}

StringPath single_site_string(const EffectiveLattice& eff, int spin,
                              StringKind kind) {
  if (spin < 0 || spin >= eff.n_spins()) {
    throw std::invalid_argument("spin index out of range");
  }
  const EffectiveSpinAdjacency& adj = eff.adjacency[spin];
  StringPath path;
  path.kind = kind;
  switch (kind) {
    case StringKind::Z:
      path.moves = {{spin, Axis::Z}};
      path.endpoints = {adj.z_pair[0], adj.z_pair[1]};
      break;
    case StringKind::Y:
      path.moves = {{spin, Axis::Y}};
      path.endpoints = {adj.y_pair[0], adj.y_pair[1]};
      break;
    case StringKind::X:
      path.moves = {{spin, Axis::X}};
      path.endpoints = {adj.z_pair[0], adj.z_pair[1], adj.y_pair[0],
                        adj.y_pair[1]};
      break;
  }
  std::sort(path.endpoints.begin(), path.endpoints.end());
  return path;
}

std::pair<StateVector, AnyonConfiguration> create_pair(
    const EffectiveLattice& eff, const StateVector& s, const StringPath& path,
    const AnyonConfiguration* before) {
  StateVector out = apply(string_operator(eff, path), s);
  AnyonConfiguration cfg = measure_occupations(eff, out);
  if (before) cfg.particles = before->particles;
  Particle created;
  created.type = path.kind;
  created.plaquettes = path.endpoints;
  created.path = path;
  cfg.particles.push_back(std::move(created));

  // The ledger must reproduce the measured occupations by toggling each
  // particle's plaquettes starting from the vacuum.
  std::vector<int> expected(eff.n_plaquettes(), 1);
  for (const Particle& part : cfg.particles) {
    for (int p : part.plaquettes) expected[p] = -expected[p];
  }
  if (expected != cfg.occupations) {
    throw std::logic_error("particle ledger disagrees with the state");
  }
  return {std::move(out), std::move(cfg)};
}

StringPath loop_path(const EffectiveLattice& eff,
                     const std::vector<int>& region) {
  std::set<int> seen;
  PauliString prod = PauliString::identity(eff.n_spins());
  for (int p : region) {
    if (p < 0 || p >= eff.n_plaquettes()) {
      throw std::invalid_argument("loop region plaquette out of range");
    }
    if (!seen.insert(p).second) {
      throw std::invalid_argument("loop region lists a plaquette twice");
    }
    prod = multiply(eff.plaquette_operator(p), prod);
  }
  StringPath path;
  path.kind = StringKind::X;
  for (int j = 0; j < eff.n_spins(); ++j) {
    const bool xb = (prod.x_mask() >> j) & 1;
    const bool zb = (prod.z_mask() >> j) & 1;
    if (!xb && !zb) continue;
    const Axis axis = xb && zb ? Axis::Y : (xb ? Axis::X : Axis::Z);
    path.moves.push_back({j, axis});
  }
  return path;
}

int braid_phase(const EffectiveLattice& eff, const StringPath& loop,
                const AnyonConfiguration& target) {
  const PauliString lop = string_operator(eff, loop);
  for (int p = 0; p < eff.n_plaquettes(); ++p) {
    if (commutation_phase(lop, eff.plaquette_operator(p)) != 1) {
      throw std::invalid_argument("loop is not closed: it excites plaquettes");
    }
  }
  PauliString prod = PauliString::identity(eff.n_spins());
  for (const Particle& part : target.particles) {
    prod = multiply(string_operator(eff, part.path), prod);
  }
  return commutation_phase(lop, prod);
}

std::vector<StringMove> exchange_moves(const EffectiveLattice& eff,
                                       const StringPath& s1,
                                       const StringPath& s2) {
  if (s1.kind != StringKind::X || s2.kind != StringKind::X) {
    throw std::invalid_argument("exchange requires two X strings");
  }
  if (s1.moves.size() != 1 || s2.moves.size() != 1) {
    throw std::invalid_argument(
        "canonical exchange needs single-move creation strings");
  }
  auto [a1, b1] = coords(eff, s1.moves[0].spin);
  auto [a2, b2] = coords(eff, s2.moves[0].spin);
  if (b2 == (b1 + 2) % eff.ny) {
    // keep order
  } else if (b1 == (b2 + 2) % eff.ny) {
    std::swap(a1, a2);
    std::swap(b1, b2);
  } else {
    throw std::invalid_argument(
        "exchange arrangement must be two rows apart in one column");
  }
  if (a1 != a2) {
    throw std::invalid_argument(
        "exchange arrangement must be two rows apart in one column");
  }
  const int a = a1;
  const int b = b1;
  // Hop the facing fermion of s1 across the shared spin, then bring the
  // facing fermion of s2 back around the east side. The columns east of the
  // pair and the three rows b..b+2 form the spanned loop.
  std::vector<StringMove> moves;
  moves.push_back({eff.index(a, b + 1), Axis::X});
  moves.push_back({eff.index(a + 1, b + 1), Axis::Z});
  moves.push_back({eff.index(a + 1, b), Axis::Y});
  moves.push_back({eff.index(a, b), Axis::Z});
  moves.push_back({eff.index(a, b + 2), Axis::Y});
  moves.push_back({eff.index(a + 1, b + 2), Axis::Z});
  moves.push_back({eff.index(a + 1, b + 1), Axis::Y});
  return moves;
}

int exchange_phase_xx(const EffectiveLattice& eff, const StringPath& s1,
                      const StringPath& s2,
                      const std::vector<StringMove>& moves) {
  if (s1.kind != StringKind::X || s2.kind != StringKind::X) {
    throw std::invalid_argument("exchange requires two X strings");
  }
  StateVector psi = ground_state(eff);
  AnyonConfiguration cfg;
  std::tie(psi, cfg) = create_pair(eff, psi, s1);
  std::tie(psi, cfg) = create_pair(eff, psi, s2, &cfg);

  PauliString net = PauliString::identity(eff.n_spins());
  for (const StringMove& m : moves) {
    net = multiply(move_operator(eff, m), net);
  }
  for (int p = 0; p < eff.n_plaquettes(); ++p) {
    if (commutation_phase(net, eff.plaquette_operator(p)) != 1) {
      throw std::invalid_argument(
          "exchange moves do not restore the excitation map");
    }
  }
  const std::complex<double> phi = overlap(psi, apply(net, psi));
  if (std::abs(std::abs(phi) - 1.0) > 1e-9) {
    throw std::invalid_argument(
        "exchange trajectory winds the torus or leaves the state");
  }
  if (std::abs(phi.imag()) > 1e-9) {
    throw std::invalid_argument("exchange produced a non-real phase");
  }
  return phi.real() > 0.0 ? 1 : -1;
}

int exchange_phase_xx(const EffectiveLattice& eff, const StringPath& s1,
                      const StringPath& s2) {
  return exchange_phase_xx(eff, s1, s2, exchange_moves(eff, s1, s2));
}

StateVector one_qubit_rotation(const StateVector& s, int eff_spin,
                               double theta) {
  if (eff_spin < 0 || eff_spin >= s.n()) {
    throw std::invalid_argument("spin index out of range");
  }
  StateVector out = s;
  scale(std::cos(theta), out);
  StateVector flipped =
      apply(PauliString::single(s.n(), eff_spin, Axis::Z), s);
  axpy(std::complex<double>{0.0, -std::sin(theta)}, flipped, out);
  return out;
}

RegisterLayout default_register_layout(const EffectiveLattice& eff) {
  if (eff.nx < 4 || eff.ny < 4) {
    throw std::invalid_argument(
        "controlled-phase layout needs at least a 4x4 effective torus");
  }
  RegisterLayout layout;
  layout.control_spin = eff.index(0, 0);
  layout.target_spin = eff.index(eff.nx / 2, eff.ny / 2);
  layout.loop_region = {eff.index(eff.nx / 2 - 1, eff.ny / 2),
                        eff.index(eff.nx / 2, eff.ny / 2)};
  return layout;
}

ControlledPhaseTable controlled_phase_experiment(
    const EffectiveLattice& eff, const RegisterLayout& layout) {
  const StringPath loop = loop_path(eff, layout.loop_region);
  const PauliString lop = string_operator(eff, loop);
  for (int p = 0; p < eff.n_plaquettes(); ++p) {
    if (commutation_phase(lop, eff.plaquette_operator(p)) != 1) {
      throw std::invalid_argument("transport loop is not closed");
    }
  }
  for (StringKind k : {StringKind::X, StringKind::Y, StringKind::Z}) {
    const PauliString cs = string_operator(
        eff, single_site_string(eff, layout.control_spin, k));
    if (commutation_phase(lop, cs) != 1) {
      throw std::invalid_argument(
          "transport loop braids with the control's own strings");
    }
  }

  const StateVector vac = ground_state(eff);
  ControlledPhaseTable table;
  table.layout = layout;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      StateVector psi = vac;
      AnyonConfiguration cfg = measure_occupations(eff, psi);
      if (a != 0) {
        std::tie(psi, cfg) = create_pair(
            eff, psi,
            single_site_string(eff, layout.control_spin,
                               to_string_kind(static_cast<AnyonType>(a))),
            &cfg);
      }
      if (b != 0) {
        std::tie(psi, cfg) = create_pair(
            eff, psi,
            single_site_string(eff, layout.target_spin,
                               to_string_kind(static_cast<AnyonType>(b))),
            &cfg);
      }
      if (a == 0) {
        // No particle on the control: nothing is transported.
        table.phase[a][b] = 1.0;
        continue;
      }
      const std::complex<double> phi = overlap(psi, apply(lop, psi));
      if (std::abs(phi.imag()) > 1e-9 ||
          std::abs(std::abs(phi.real()) - 1.0) > 1e-9) {
        throw std::logic_error("transport loop phase is not a sign");
      }
      table.phase[a][b] = phi.real() > 0.0 ? 1.0 : -1.0;
    }
  }
  return table;
}

}  // namespace plaq
