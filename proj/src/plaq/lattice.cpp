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

#include "plaq/lattice.hpp"

#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace plaq {
namespace {

int wrap(int v, int m) {
  v %= m;
  return v < 0 ? v + m : v;
}

}  // namespace

int HoneycombLattice::site_index(int ix, int iy, int sub) const {
  return 2 * (wrap(iy, ny) * nx + wrap(ix, nx)) + sub;
}

int HoneycombLattice::cell_index(int ix, int iy) const {
  return wrap(iy, ny) * nx + wrap(ix, nx);
}

PauliString HoneycombLattice::plaquette_operator(int p) const {
  const HoneycombPlaquette& hex = plaquettes.at(p);
  PauliString op = PauliString::identity(n_sites());
  for (int j = 0; j < 6; ++j) {
    op = multiply(op, PauliString::single(n_sites(), hex.ring[j],
                                          hex.outward_axis[j]));
  }
  return op;
}

HoneycombLattice build_honeycomb(int nx, int ny) {
  if (nx < 2 || ny < 2) {
    throw std::invalid_argument("honeycomb extent must be at least 2x2");
  }
  if (2 * nx * ny > 64) {
    throw std::invalid_argument("honeycomb site count exceeds 64");
  }
  HoneycombLattice lat;
  lat.nx = nx;
  lat.ny = ny;
  lat.sites.reserve(2 * nx * ny);
  for (int iy = 0; iy < ny; ++iy) {
    for (int ix = 0; ix < nx; ++ix) {
      lat.sites.push_back({ix, iy, 0});
      lat.sites.push_back({ix, iy, 1});
    }
  }
  // z-links first: z-link index == cell index == effective spin index.
  for (int iy = 0; iy < ny; ++iy) {
    for (int ix = 0; ix < nx; ++ix) {
      lat.links.push_back({lat.site_index(ix, iy, 0),
                           lat.site_index(ix, iy, 1), LinkType::Z});
    }
  }
  for (int iy = 0; iy < ny; ++iy) {
    for (int ix = 0; ix < nx; ++ix) {
      lat.links.push_back({lat.site_index(ix, iy, 1),
                           lat.site_index(ix + 1, iy, 0), LinkType::X});
    }
  }
  for (int iy = 0; iy < ny; ++iy) {
    for (int ix = 0; ix < nx; ++ix) {
      lat.links.push_back({lat.site_index(ix, iy, 1),
                           lat.site_index(ix, iy + 1, 0), LinkType::Y});
    }
  }
  // Hexagon ring, clockwise from the left A site; outward axis is the link
  // type not used by the two ring links at each site.
  for (int iy = 0; iy < ny; ++iy) {
    for (int ix = 0; ix < nx; ++ix) {
      HoneycombPlaquette hex;
      hex.ix = ix;
      hex.iy = iy;
      hex.ring = {lat.site_index(ix, iy, 0),     lat.site_index(ix, iy - 1, 1),
                  lat.site_index(ix + 1, iy - 1, 0),
                  lat.site_index(ix + 1, iy - 1, 1),
                  lat.site_index(ix + 1, iy, 0), lat.site_index(ix, iy, 1)};
      hex.ring_links = {LinkType::Y, LinkType::X, LinkType::Z,
                        LinkType::Y, LinkType::X, LinkType::Z};
      hex.outward_axis = {Axis::X, Axis::Z, Axis::Y,
                          Axis::X, Axis::Z, Axis::Y};
      lat.plaquettes.push_back(hex);
    }
  }
  return lat;
}

int EffectiveLattice::index(int ix, int iy) const {
  return wrap(iy, ny) * nx + wrap(ix, nx);
}

int EffectiveLattice::plaquette_parity(int p) const {
  return ((p % nx) + (p / nx)) & 1;
}

PauliString EffectiveLattice::plaquette_operator(int p) const {
  const EffectivePlaquette& q = plaquettes.at(p);
  PauliString op = PauliString::single(n_spins(), q.left, Axis::Y);
  op = multiply(op, PauliString::single(n_spins(), q.top, Axis::Z));
  op = multiply(op, PauliString::single(n_spins(), q.right, Axis::Y));
  op = multiply(op, PauliString::single(n_spins(), q.bottom, Axis::Z));
  return op;
}

PauliString EffectiveLattice::spin_operator(int spin, Axis axis) const {
  return PauliString::single(n_spins(), spin, axis);
}

EffectiveLattice effective_lattice(const HoneycombLattice& lat) {
  EffectiveLattice eff;
  eff.nx = lat.nx;
  eff.ny = lat.ny;
  eff.plaquettes.resize(eff.n_plaquettes());
  eff.adjacency.resize(eff.n_spins());
  eff.a_site.resize(eff.n_spins());
  for (int iy = 0; iy < eff.ny; ++iy) {
    for (int ix = 0; ix < eff.nx; ++ix) {
      const int p = eff.index(ix, iy);
      eff.plaquettes[p] = {eff.index(ix, iy), eff.index(ix + 1, iy),
                           eff.index(ix + 1, iy - 1), eff.index(ix, iy - 1)};
      eff.adjacency[p] = {
          {eff.index(ix, iy), eff.index(ix - 1, iy + 1)},
          {eff.index(ix - 1, iy), eff.index(ix, iy + 1)},
      };
      eff.a_site[p] = lat.site_index(ix, iy, 0);
    }
  }
  return eff;
}

namespace {

struct Diag {
  int dx;
  int dy;
};

// Walks t steps of (dx, dy) from cell a; returns the visited spins for a
// vortex-carrying string (Z strings use the z toggle pair, Y strings the y
// pair). The move spin for one step from (cx, cy) follows the toggle maps in
// the header.
std::vector<StringMove> diagonal_moves(const EffectiveLattice& eff, int ax,
                                       int ay, int t, Diag d, Axis axis) {
  std::vector<StringMove> moves;
  int cx = ax;
  int cy = ay;
  for (int i = 0; i < t; ++i) {
    int spin;
    if (axis == Axis::Z) {
      // Z at e(u, v) toggles {p(u, v), p(u-1, v+1)}.
      spin = (d.dx > 0) ? eff.index(cx + 1, cy - 1) : eff.index(cx, cy);
    } else {
      // Y at e(u, v) toggles {p(u-1, v), p(u, v+1)}.
      spin = (d.dx > 0) ? eff.index(cx + 1, cy) : eff.index(cx, cy - 1);
    }
    moves.push_back({spin, axis});
    cx = wrap(cx + d.dx, eff.nx);
    cy = wrap(cy + d.dy, eff.ny);
  }
  return moves;
}

}  // namespace

StringPath string_between(const EffectiveLattice& eff, int p_a, int p_b,
                          StringKind kind) {
  const int np = eff.n_plaquettes();
  if (p_a < 0 || p_a >= np || p_b < 0 || p_b >= np) {
    throw std::invalid_argument("plaquette index out of range");
  }
  if (p_a == p_b) {
    throw std::invalid_argument("string endpoints must differ");
  }
  const int ax = p_a % eff.nx, ay = p_a / eff.nx;
  const int bx = p_b % eff.nx, by = p_b / eff.nx;

  StringPath path;
  path.kind = kind;

  if (kind == StringKind::X) {
    if (bx != ax) {
      throw std::invalid_argument(
          "x string endpoints must share a column (fermion pairs are "
          "horizontal, transport is vertical)");
    }
    const int up = wrap(by - ay, eff.ny);
    const int down = eff.ny - up;
    const bool go_up = up <= down;
    const int steps = go_up ? up : down;
    const int start = go_up ? ay : by;
    for (int i = 0; i < steps; ++i) {
      path.moves.push_back({eff.index(ax, start + i), Axis::X});
    }
    path.endpoints = {eff.index(ax - 1, ay), eff.index(ax, ay),
                      eff.index(ax - 1, by), eff.index(ax, by)};
    return path;
  }

  // Y strings live on (+1,+1) diagonals, Z strings on (+1,-1) diagonals.
  const int dy_fwd = (kind == StringKind::Y) ? 1 : -1;
  const int period = std::lcm(eff.nx, eff.ny);
  int t_fwd = -1;
  for (int t = 1; t < period; ++t) {
    if (wrap(ax + t, eff.nx) == bx && wrap(ay + dy_fwd * t, eff.ny) == by) {
      t_fwd = t;
      break;
    }
  }
  if (t_fwd < 0) {
    throw std::invalid_argument(
        "endpoints are not connected by moves of this kind (they lie on "
        "different diagonals)");
  }
  const int t_bwd = period - t_fwd;
  const Axis axis = (kind == StringKind::Y) ? Axis::Y : Axis::Z;
  if (t_fwd <= t_bwd) {
    path.moves = diagonal_moves(eff, ax, ay, t_fwd, {1, dy_fwd}, axis);
  } else {
    path.moves = diagonal_moves(eff, ax, ay, t_bwd, {-1, -dy_fwd}, axis);
  }
  path.endpoints = {p_a, p_b};
  return path;
}

PauliString string_operator(const EffectiveLattice& eff,
                            const StringPath& path) {
  PauliString op = PauliString::identity(eff.n_spins());
  for (const StringMove& m : path.moves) {
    PauliString factor = eff.spin_operator(m.spin, m.axis);
    if (m.axis == Axis::X) factor.mul_i();
    op = multiply(factor, op);  // later moves act on the left
  }
  return op;
}

namespace {

nlohmann::json honeycomb_json(const HoneycombLattice& lat) {
  nlohmann::json j;
  j["schema"] = "honeycomb-lattice/1";
  j["nx"] = lat.nx;
  j["ny"] = lat.ny;
  j["sites"] = nlohmann::json::array();
  for (const auto& s : lat.sites) {
    j["sites"].push_back({{"ix", s.ix}, {"iy", s.iy}, {"sub", s.sub}});
  }
  j["links"] = nlohmann::json::array();
  for (const auto& l : lat.links) {
    j["links"].push_back(
        {{"a", l.a}, {"b", l.b}, {"type", static_cast<int>(l.type)}});
  }
  j["plaquettes"] = nlohmann::json::array();
  for (const auto& p : lat.plaquettes) {
    nlohmann::json hex;
    hex["ix"] = p.ix;
    hex["iy"] = p.iy;
    hex["ring"] = p.ring;
    nlohmann::json rl = nlohmann::json::array();
    nlohmann::json oa = nlohmann::json::array();
    for (int k = 0; k < 6; ++k) {
      rl.push_back(static_cast<int>(p.ring_links[k]));
      oa.push_back(static_cast<int>(p.outward_axis[k]));
    }
    hex["ring_links"] = rl;
    hex["outward_axis"] = oa;
    j["plaquettes"].push_back(hex);
  }
  return j;
}

}  // namespace

std::string honeycomb_to_json(const HoneycombLattice& lat) {
  return honeycomb_json(lat).dump(2);
}

HoneycombLattice honeycomb_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (j.at("schema").get<std::string>() != "honeycomb-lattice/1") {
    throw std::invalid_argument("unsupported lattice schema");
  }
  HoneycombLattice lat =
      build_honeycomb(j.at("nx").get<int>(), j.at("ny").get<int>());
  if (honeycomb_json(lat) != j) {
    throw std::invalid_argument("lattice payload does not match its extent");
  }
  return lat;
}

std::string effective_to_json(const EffectiveLattice& eff) {
  nlohmann::json j;
  j["schema"] = "effective-lattice/1";
  j["nx"] = eff.nx;
  j["ny"] = eff.ny;
  j["plaquettes"] = nlohmann::json::array();
  for (const auto& p : eff.plaquettes) {
    j["plaquettes"].push_back({{"left", p.left},
                               {"top", p.top},
                               {"right", p.right},
                               {"bottom", p.bottom}});
  }
  j["adjacency"] = nlohmann::json::array();
  for (const auto& a : eff.adjacency) {
    j["adjacency"].push_back({{"z_pair", a.z_pair}, {"y_pair", a.y_pair}});
  }
  j["a_site"] = eff.a_site;
  return j.dump(2);
}

}  // namespace plaq
