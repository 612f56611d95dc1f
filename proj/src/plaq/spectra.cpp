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

#include "plaq/spectra.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

#include "plaq/kernels.hpp"

namespace plaq {
namespace {

SpectrumResult from_lanczos(LanczosResult&& lr) {
  SpectrumResult s;
  s.eigenvalues = std::move(lr.eigenvalues);
  s.residuals = std::move(lr.residuals);
  s.eigenvectors = std::move(lr.eigenvectors);
  s.matvecs = lr.matvecs;
  s.converged = lr.converged;
  return s;
}

void check_masks_commute(const OperatorHandle& op, const PauliString& c) {
  for (const OperatorTerm& t : op.terms()) {
    const int anti = (std::popcount(c.x_mask() & t.z) +
                      std::popcount(c.z_mask() & t.x)) &
                     1;
    if (anti) {
      throw std::invalid_argument(
          "sector constraint does not commute with the operator");
    }
  }
}

}  // namespace

SpectrumResult lowest_eigenvalues(const OperatorHandle& op, int k, double tol,
                                  const LanczosOptions* base) {
  LanczosOptions opts = base ? *base : LanczosOptions{};
  opts.k = k;
  opts.tol = tol;
  return from_lanczos(lowest_eigenpairs(op, opts));
}

SpectrumResult lowest_eigenvalues_in_sector(const OperatorHandle& op,
                                            const SectorSpec& sector, int k,
                                            double tol,
                                            const LanczosOptions* base) {
  const std::size_t dim = op.dim();
  const std::size_t nc = sector.constraints.size();
  if (sector.signs.size() != nc) {
    throw std::invalid_argument("sector signs do not match constraints");
  }
  for (std::size_t c = 0; c < nc; ++c) {
    const PauliString& p = sector.constraints[c];
    if (p.n() != op.n()) {
      throw std::invalid_argument("sector constraint size mismatch");
    }
    if (sector.signs[c] != 1 && sector.signs[c] != -1) {
      throw std::invalid_argument("sector signs must be +1 or -1");
    }
    if (!p.is_hermitian()) {
      throw std::invalid_argument("sector constraints must be Hermitian");
    }
    const PauliString sq = multiply(p, p);
    if (!sq.is_identity_mask() || sq.scalar() != std::complex<double>{1.0}) {
      throw std::invalid_argument("sector constraints must square to +1");
    }
    for (std::size_t c2 = c + 1; c2 < nc; ++c2) {
      if (commutation_phase(p, sector.constraints[c2]) != 1) {
        throw std::invalid_argument("sector constraints must commute");
      }
    }
    check_masks_commute(op, p);
  }

  const Kernels& K = kernels();
  std::vector<double> tmp(dim);
  auto project = [&](std::vector<double>& v) {
    for (std::size_t c = 0; c < nc; ++c) {
      apply_pauli(sector.constraints[c], v.data(), tmp.data(), dim);
      K.scal_r(0.5, v.data(), dim);
      K.axpy_r(0.5 * sector.signs[c], tmp.data(), v.data(), dim);
    }
  };

  LanczosOptions opts = base ? *base : LanczosOptions{};
  opts.k = k;
  opts.tol = tol;
  opts.random_fallback = false;

  // Build exactly k in-sector seeds: caller-provided warm starts first, then
  // deterministic random draws; everything is projected into the sector.
  std::vector<std::vector<double>> seeds;
  std::mt19937_64 unused;  // seeds below are derived from opts.seed streams
  int empty_draws = 0;
  for (int j = 0; j < k; ++j) {
    std::vector<double> v(dim);
    bool ok = false;
    for (int attempt = 0; attempt < 4 && !ok; ++attempt) {
      if (j < static_cast<int>(opts.initial.size()) && attempt == 0) {
        if (opts.initial[j].size() != dim) {
          throw std::invalid_argument("warm start has wrong dimension");
        }
        v = opts.initial[j];
      } else {
        std::mt19937_64 gen(opts.seed + 7919u * static_cast<std::uint64_t>(j) +
                            static_cast<std::uint64_t>(attempt) + 1u);
        std::normal_distribution<double> dist(0.0, 1.0);
        for (double& x : v) x = dist(gen);
      }
      project(v);
      const double nrm = std::sqrt(K.nrm2sq_r(v.data(), dim));
      if (nrm > 1e-7) {
        K.scal_r(1.0 / nrm, v.data(), dim);
        ok = true;
      }
    }
    if (!ok) {
      ++empty_draws;
      break;  // projector annihilates random vectors: sector is empty
    }
    seeds.push_back(std::move(v));
  }
  if (seeds.empty()) {
    SpectrumResult s;
    s.sector_empty = true;
    s.converged = false;
    return s;
  }
  opts.initial = std::move(seeds);

  auto apply = [&](const double* in, double* out) {
    op.matvec(in, out);
    // Re-project to keep rounding noise from leaking out of the sector; the
    // operator commutes with every constraint, so this is a no-op in exact
    // arithmetic.
    for (std::size_t c = 0; c < nc; ++c) {
      apply_pauli(sector.constraints[c], out, tmp.data(), dim);
      K.scal_r(0.5, out, dim);
      K.axpy_r(0.5 * sector.signs[c], tmp.data(), out, dim);
    }
  };

  SpectrumResult s = from_lanczos(lowest_eigenpairs(dim, apply, opts));

  // Re-certify against the raw operator and measure sector purity.
  std::vector<double> w(dim);
  for (std::size_t j = 0; j < s.eigenvectors.size(); ++j) {
    const std::vector<double>& x = s.eigenvectors[j];
    op.matvec(x.data(), w.data());
    const double theta = K.dot_r(x.data(), w.data(), dim);
    K.axpy_r(-theta, x.data(), w.data(), dim);
    s.eigenvalues[j] = theta;
    s.residuals[j] = std::sqrt(K.nrm2sq_r(w.data(), dim));
    for (std::size_t c = 0; c < nc; ++c) {
      apply_pauli(sector.constraints[c], x.data(), tmp.data(), dim);
      const double e = K.dot_r(x.data(), tmp.data(), dim);
      s.sector_purity_error =
          std::max(s.sector_purity_error, std::abs(e - sector.signs[c]));
    }
  }
  // The raw-operator residual is the one that counts.
  if (s.converged) {
    for (double r : s.residuals) {
      if (!(r <= 10 * tol)) s.converged = false;
    }
    if (s.sector_purity_error > 1e-8) s.converged = false;
  }
  return s;
}

double gap_above_ground_multiplet(const std::vector<double>& ascending,
                                  double cluster_tol) {
  const std::size_t n = ascending.size();
  if (n < 2) {
    throw std::invalid_argument("need at least two eigenvalues for a gap");
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (ascending[i] < ascending[i - 1] - 1e-12) {
      throw std::invalid_argument("eigenvalues must be ascending");
    }
  }
  // Coarsest self-consistent split: the last spacing g >= 1e-9 such that
  // every earlier spacing is below max(1e-9, cluster_tol * g). Splittings
  // tiny relative to the gap are treated as multiplet-internal.
  long split = -1;
  double gap = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double g = std::max(ascending[i + 1] - ascending[i], 0.0);
    if (g < 1e-9) continue;
    const double thr = std::max(1e-9, cluster_tol * g);
    bool ok = true;
    for (std::size_t j = 0; j < i && ok; ++j) {
      if (ascending[j + 1] - ascending[j] >= thr) ok = false;
    }
    if (ok) {
      split = static_cast<long>(i);
      gap = g;
    }
  }
  if (split < 0) {
    throw std::runtime_error(
        "all eigenvalues lie in one cluster; increase k to expose the gap");
  }
  return gap;
}

int ground_multiplet_size(const std::vector<double>& ascending,
                          double cluster_tol) {
  const std::size_t n = ascending.size();
  if (n < 2) {
    throw std::invalid_argument("need at least two eigenvalues for a gap");
  }
  long split = -1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double g = std::max(ascending[i + 1] - ascending[i], 0.0);
    if (g < 1e-9) continue;
    const double thr = std::max(1e-9, cluster_tol * g);
    bool ok = true;
    for (std::size_t j = 0; j < i && ok; ++j) {
      if (ascending[j + 1] - ascending[j] >= thr) ok = false;
    }
    if (ok) split = static_cast<long>(i);
  }
  if (split < 0) {
    throw std::runtime_error(
        "all eigenvalues lie in one cluster; increase k to expose the gap");
  }
  return static_cast<int>(split) + 1;
}

double gap_above_ground_multiplet(const SpectrumResult& s,
                                  double cluster_tol) {
  return gap_above_ground_multiplet(s.eigenvalues, cluster_tol);
}

int ground_multiplet_size(const SpectrumResult& s, double cluster_tol) {
  return ground_multiplet_size(s.eigenvalues, cluster_tol);
}

double effective_coupling(const CouplingConfig& c) {
  if (!(c.jz > 0)) {
    throw std::domain_error("effective coupling requires jz > 0");
  }
  return (c.jx * c.jx * c.jy * c.jy) / (16.0 * c.jz * c.jz * c.jz);
}

double perturbative_gap(const CouplingConfig& c, GapKind kind) {
  const double j_eff = effective_coupling(c);
  return kind == GapKind::YZ ? 4.0 * j_eff : 8.0 * j_eff;
}

PauliString cycle_operator_x(const HoneycombLattice& lat, int iy) {
  PauliString op = PauliString::identity(lat.n_sites());
  for (int ix = 0; ix < lat.nx; ++ix) {
    op = multiply(op, PauliString::single(lat.n_sites(),
                                          lat.site_index(ix, iy, 0), Axis::Y));
    op = multiply(op, PauliString::single(lat.n_sites(),
                                          lat.site_index(ix, iy, 1), Axis::Y));
  }
  return op;
}

PauliString cycle_operator_y(const HoneycombLattice& lat, int ix) {
  PauliString op = PauliString::identity(lat.n_sites());
  for (int iy = 0; iy < lat.ny; ++iy) {
    op = multiply(op, PauliString::single(lat.n_sites(),
                                          lat.site_index(ix, iy, 0), Axis::X));
    op = multiply(op, PauliString::single(lat.n_sites(),
                                          lat.site_index(ix, iy, 1), Axis::X));
  }
  return op;
}

std::vector<VortexClass> vortex_classes(int nx, int ny, int n_vortices) {
  const int np = nx * ny;
  if (np < 1 || np > 32) {
    throw std::invalid_argument("plaquette count out of supported range");
  }
  if (n_vortices < 0 || n_vortices > np) {
    throw std::invalid_argument("vortex count out of range");
  }
  // Precompute the plaquette permutation for each torus translation.
  std::vector<std::vector<int>> perms;
  perms.reserve(np);
  for (int dy = 0; dy < ny; ++dy) {
    for (int dx = 0; dx < nx; ++dx) {
      std::vector<int> perm(np);
      for (int p = 0; p < np; ++p) {
        const int ix = (p % nx + dx) % nx;
        const int iy = (p / nx + dy) % ny;
        perm[p] = iy * nx + ix;
      }
      perms.push_back(std::move(perm));
    }
  }
  auto canonical = [&](std::uint64_t mask) {
    std::uint64_t best = ~std::uint64_t{0};
    for (const auto& perm : perms) {
      std::uint64_t m = 0;
      std::uint64_t rest = mask;
      while (rest) {
        const int p = std::countr_zero(rest);
        rest &= rest - 1;
        m |= std::uint64_t{1} << perm[p];
      }
      best = std::min(best, m);
    }
    return best;
  };

  std::map<std::uint64_t, int> orbit_count;
  if (n_vortices == 0) {
    orbit_count[0] = 1;
  } else {
    // Gosper's hack over np-bit masks with exactly n_vortices bits.
    std::uint64_t mask = (std::uint64_t{1} << n_vortices) - 1;
    const std::uint64_t limit = std::uint64_t{1} << np;
    while (mask < limit) {
      orbit_count[canonical(mask)] += 1;
      const std::uint64_t c = mask & -mask;
      const std::uint64_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }

  std::vector<VortexClass> classes;
  classes.reserve(orbit_count.size());
  for (const auto& [rep, count] : orbit_count) {
    VortexClass vc;
    vc.rep_mask = rep;
    vc.multiplicity = count;
    std::uint64_t rest = rep;
    while (rest) {
      vc.plaquettes.push_back(std::countr_zero(rest));
      rest &= rest - 1;
    }
    classes.push_back(std::move(vc));
  }
  return classes;
}

SectorSpec honeycomb_sector(const HoneycombLattice& lat,
                            std::uint64_t vortex_mask, int loop_x_sign,
                            int loop_y_sign) {
  SectorSpec spec;
  const int np = lat.n_cells();
  if (np < 64 && (vortex_mask >> np) != 0) {
    throw std::invalid_argument("vortex mask references missing plaquettes");
  }
  for (int p = 0; p < np; ++p) {
    spec.constraints.push_back(lat.plaquette_operator(p));
    spec.signs.push_back((vortex_mask >> p) & 1 ? -1 : 1);
  }
  spec.constraints.push_back(cycle_operator_x(lat, 0));
  spec.signs.push_back(loop_x_sign);
  spec.constraints.push_back(cycle_operator_y(lat, 0));
  spec.signs.push_back(loop_y_sign);
  return spec;
}

}  // namespace plaq
