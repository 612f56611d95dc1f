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

#include "plaq/op.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <map>
#include <stdexcept>
#include <utility>

namespace plaq {
namespace {

std::complex<double> fold_phase(int k, std::uint64_t x, std::uint64_t z) {
  int e = (k + 2 * (std::popcount(x & z) & 1)) & 3;
  static const std::complex<double> table[4] = {
      {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
  return table[e];
}

}  // namespace

OperatorHandle::OperatorHandle(int n) : n_(n) {
  if (n < 1 || n > 64) {
    throw std::invalid_argument("operator spin count must be in [1, 64]");
  }
}

void OperatorHandle::add(double weight, const PauliString& p) {
  if (n_ == 0) {
    throw std::logic_error("operator not initialized with a spin count");
  }
  if (p.n() != n_) {
    throw std::invalid_argument("pauli string size does not match operator");
  }
  if (!p.is_hermitian()) {
    throw std::invalid_argument("operator terms must be Hermitian");
  }
  const std::complex<double> c =
      weight * fold_phase(p.phase_exp(), p.x_mask(), p.z_mask());
  terms_.push_back({c, p.x_mask(), p.z_mask()});
}

void OperatorHandle::add_scalar(double weight) {
  if (n_ == 0) {
    throw std::logic_error("operator not initialized with a spin count");
  }
  terms_.push_back({{weight, 0.0}, 0, 0});
}

void OperatorHandle::compress() {
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::complex<double>> acc;
  for (const OperatorTerm& t : terms_) {
    acc[{t.x, t.z}] += t.coeff;
  }
  terms_.clear();
  for (const auto& [masks, c] : acc) {
    if (std::abs(c) > 1e-15) {
      terms_.push_back({c, masks.first, masks.second});
    }
  }
}

bool OperatorHandle::is_real() const {
  for (const OperatorTerm& t : terms_) {
    if (t.coeff.imag() != 0.0) return false;
  }
  return true;
}

double OperatorHandle::one_norm_bound() const {
  double s = 0.0;
  for (const OperatorTerm& t : terms_) s += std::abs(t.coeff);
  return s;
}

void OperatorHandle::matvec(const double* in, double* out) const {
  const std::size_t d = dim();
  std::memset(out, 0, d * sizeof(double));
  if (!is_real()) {
    throw std::logic_error("real matvec requires real term coefficients");
  }
  const Kernels& k = kernels();
  for (const OperatorTerm& t : terms_) {
    if (d >= 4) {
      k.pauli_acc_r(t.coeff.real(), t.x, t.z, in, out, d);
    } else {
      for (std::size_t s = 0; s < d; ++s) {
        const double sgn = (std::popcount(t.z & s) & 1) ? -1.0 : 1.0;
        out[s] += t.coeff.real() * sgn * in[s ^ t.x];
      }
    }
  }
}

void OperatorHandle::matvec(const std::complex<double>* in,
                            std::complex<double>* out) const {
  const std::size_t d = dim();
  std::memset(out, 0, d * sizeof(std::complex<double>));
  const Kernels& k = kernels();
  for (const OperatorTerm& t : terms_) {
    if (t.coeff.imag() == 0.0 && d >= 4) {
      k.pauli_acc_c(t.coeff.real(), t.x, t.z, in, out, d);
    } else {
      for (std::size_t s = 0; s < d; ++s) {
        const double sgn = (std::popcount(t.z & s) & 1) ? -1.0 : 1.0;
        out[s] += t.coeff * sgn * in[s ^ t.x];
      }
    }
  }
}

void apply_pauli(const PauliString& p, const double* in, double* out,
                 std::size_t dim) {
  if (dim != (std::size_t{1} << p.n())) {
    throw std::invalid_argument("vector dimension does not match string");
  }
  const std::complex<double> c =
      fold_phase(p.phase_exp(), p.x_mask(), p.z_mask());
  if (c.imag() != 0.0) {
    throw std::invalid_argument(
        "string with odd Y count is not a real matrix; use the complex "
        "overload");
  }
  std::memset(out, 0, dim * sizeof(double));
  if (dim >= 4) {
    kernels().pauli_acc_r(c.real(), p.x_mask(), p.z_mask(), in, out, dim);
  } else {
    for (std::size_t s = 0; s < dim; ++s) {
      const double sgn = (std::popcount(p.z_mask() & s) & 1) ? -1.0 : 1.0;
      out[s] += c.real() * sgn * in[s ^ p.x_mask()];
    }
  }
}

void apply_pauli(const PauliString& p, const std::complex<double>* in,
                 std::complex<double>* out, std::size_t dim) {
  if (dim != (std::size_t{1} << p.n())) {
    throw std::invalid_argument("vector dimension does not match string");
  }
  const std::complex<double> c =
      fold_phase(p.phase_exp(), p.x_mask(), p.z_mask());
  std::memset(out, 0, dim * sizeof(std::complex<double>));
  if (c.imag() == 0.0 && dim >= 4) {
    kernels().pauli_acc_c(c.real(), p.x_mask(), p.z_mask(), in, out, dim);
  } else {
    for (std::size_t s = 0; s < dim; ++s) {
      const double sgn = (std::popcount(p.z_mask() & s) & 1) ? -1.0 : 1.0;
      out[s] += c * sgn * in[s ^ p.x_mask()];
    }
  }
}

OperatorHandle assemble_honeycomb(const HoneycombLattice& lat,
                                  const CouplingConfig& config) {
  OperatorHandle op(lat.n_sites());
  std::vector<double> j(lat.links.size());
  for (std::size_t l = 0; l < lat.links.size(); ++l) {
    switch (lat.links[l].type) {
      case LinkType::X: j[l] = config.jx; break;
      case LinkType::Y: j[l] = config.jy; break;
      case LinkType::Z: j[l] = config.jz; break;
    }
  }
  for (const LinkOverride& o : config.overrides) {
    if (o.link < 0 || o.link >= static_cast<int>(lat.links.size())) {
      throw std::invalid_argument("link override index out of range");
    }
    j[o.link] = o.j;
  }
  for (std::size_t l = 0; l < lat.links.size(); ++l) {
    if (j[l] == 0.0) continue;
    const HoneycombLink& link = lat.links[l];
    const Axis axis = static_cast<Axis>(static_cast<int>(link.type));
    PauliString p = multiply(PauliString::single(lat.n_sites(), link.a, axis),
                             PauliString::single(lat.n_sites(), link.b, axis));
    op.add(-j[l], p);
  }
  return op;
}

OperatorHandle assemble_effective(const EffectiveLattice& eff,
                                  const std::vector<double>& j_p) {
  if (static_cast<int>(j_p.size()) != eff.n_plaquettes()) {
    throw std::invalid_argument("per-plaquette coupling count mismatch");
  }
  OperatorHandle op(eff.n_spins());
  for (int p = 0; p < eff.n_plaquettes(); ++p) {
    if (j_p[p] == 0.0) continue;
    op.add(-j_p[p], eff.plaquette_operator(p));
  }
  return op;
}

OperatorHandle assemble_effective(const EffectiveLattice& eff, double j) {
  return assemble_effective(eff,
                            std::vector<double>(eff.n_plaquettes(), j));
}

}  // namespace plaq
