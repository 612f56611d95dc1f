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

#ifndef PLAQ_LATTICE_HPP
#define PLAQ_LATTICE_HPP

#include <array>
#include <string>
#include <vector>

#include "plaq/pauli.hpp"

namespace plaq {

enum class LinkType : int { X = 0, Y = 1, Z = 2 };

// Periodic brick-wall lattice of hexagons with a two-site (A, B) unit cell.
// Cells are indexed (ix, iy) with ix in [0, nx), iy in [0, ny); site index
// is 2*(iy*nx + ix) + sublattice. Link axes by geometry:
//   z: A(ix, iy) - B(ix, iy)      (intra-cell)
//   x: B(ix, iy) - A(ix+1, iy)
//   y: B(ix, iy) - A(ix, iy+1)
// Links are stored z-block first, so the z-link index equals the cell index
// and doubles as the effective spin index.
struct HoneycombSite {
  int ix;
  int iy;
  int sub;  // 0 = A, 1 = B
};

struct HoneycombLink {
  int a;
  int b;
  LinkType type;
};

// Hexagon (ix, iy): ring starts at A(ix, iy) and runs clockwise; ring_links
// give the link type between consecutive ring sites; outward_axis is the
// axis of each ring site's third link, i.e. the Pauli axis the site
// contributes to the plaquette operator.
struct HoneycombPlaquette {
  int ix;
  int iy;
  std::array<int, 6> ring;
  std::array<LinkType, 6> ring_links;
  std::array<Axis, 6> outward_axis;
};

struct HoneycombLattice {
  int nx = 0;
  int ny = 0;
  std::vector<HoneycombSite> sites;            // 2 nx ny
  std::vector<HoneycombLink> links;            // 3 nx ny
  std::vector<HoneycombPlaquette> plaquettes;  // nx ny

  int n_sites() const { return static_cast<int>(sites.size()); }
  int n_cells() const { return nx * ny; }
  int site_index(int ix, int iy, int sub) const;
  int cell_index(int ix, int iy) const;

  // Hexagon operator: product of each ring site's outward-axis Pauli.
  PauliString plaquette_operator(int p) const;
};

// Throws std::invalid_argument unless nx >= 2, ny >= 2 and 2*nx*ny <= 64.
HoneycombLattice build_honeycomb(int nx, int ny);

// One effective spin per z-link. On the effective space the dressed
// operators act as plain single-site Paulis:
//   x~ = X, y~ = Y, z~ = Z
// (the microscopic composites are sx sx, sy sx and sz 1 on the dimer's A, B
// sites; their manifold action matches the plain Paulis phase for phase).
// Plaquette p(ix, iy) couples four effective spins:
//   left  = e(ix,   iy)    with Y
//   top   = e(ix+1, iy)    with Z
//   right = e(ix+1, iy-1)  with Y
//   bottom= e(ix,   iy-1)  with Z
// Moving excitations: Z at e(a, b) toggles {p(a, b), p(a-1, b+1)} (its two
// Y-role plaquettes), Y at e(a, b) toggles {p(a-1, b), p(a, b+1)}, X toggles
// all four. Plaquette parity (ix+iy) mod 2 splits the toggle pairs into two
// sublattices.
struct EffectivePlaquette {
  int left;
  int top;
  int right;
  int bottom;
};

struct EffectiveSpinAdjacency {
  std::array<int, 2> z_pair;  // plaquettes toggled by Z at this spin
  std::array<int, 2> y_pair;  // plaquettes toggled by Y at this spin
};

struct EffectiveLattice {
  int nx = 0;
  int ny = 0;
  std::vector<EffectivePlaquette> plaquettes;     // nx ny, index iy*nx+ix
  std::vector<EffectiveSpinAdjacency> adjacency;  // nx ny
  std::vector<int> a_site;  // microscopic A-site id per effective spin

  int n_spins() const { return nx * ny; }
  int n_plaquettes() const { return nx * ny; }
  int index(int ix, int iy) const;  // shared cell indexing, wrapped
  int plaquette_parity(int p) const;

  // Four-spin stabilizer Y_left Z_top Y_right Z_bottom on the effective
  // space (Hermitian, squares to identity).
  PauliString plaquette_operator(int p) const;

  PauliString spin_operator(int spin, Axis axis) const;
};

EffectiveLattice effective_lattice(const HoneycombLattice& lat);

enum class StringKind : int { X = 0, Y = 1, Z = 2 };

struct StringMove {
  int spin;
  Axis axis;
};

// Open anyon string: moves apply right to left (moves[0] first); X moves
// carry an extra factor i each. endpoints lists the plaquettes whose
// stabilizer eigenvalue the full string flips.
struct StringPath {
  StringKind kind;
  std::vector<StringMove> moves;
  std::vector<int> endpoints;
};

// Shortest deterministic string whose endpoints are p_a and p_b.
// Y strings step along (+1,+1) diagonals, Z strings along (+1,-1); the
// endpoints must share the corresponding diagonal (equivalently plaquette
// parity class), else std::invalid_argument. X strings are vertical
// interleavings of Y and Z moves: p_a and p_b name the right-hand cells of
// the two horizontal fermion pairs {p(c-1, r), p(c, r)} and must share
// column c. Ties between the two wrap directions break toward increasing
// coordinate.
StringPath string_between(const EffectiveLattice& eff, int p_a, int p_b,
                          StringKind kind);

// The string's operator on the effective space (X moves contribute i each).
PauliString string_operator(const EffectiveLattice& eff,
                            const StringPath& path);

// JSON round-trip (schema version embedded).
std::string honeycomb_to_json(const HoneycombLattice& lat);
HoneycombLattice honeycomb_from_json(const std::string& text);
std::string effective_to_json(const EffectiveLattice& eff);

}  // namespace plaq

#endif  // PLAQ_LATTICE_HPP
