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

#include "plaq/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace plaq {
namespace {

void check_site_count(int n) {
  if (n < 1 || n > 64) {
    throw std::invalid_argument("site count must be in [1, 64]");
  }
}

std::complex<double> i_power(int k) {
  switch (k & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

PauliString::PauliString(int n, std::uint64_t x, std::uint64_t z, int k)
    : n_(n), x_(x), z_(z), k_(k & 3) {}

PauliString PauliString::identity(int n) {
  check_site_count(n);
  return PauliString(n, 0, 0, 0);
}

PauliString PauliString::single(int n, int site, Axis axis) {
  check_site_count(n);
  if (site < 0 || site >= n) {
    throw std::invalid_argument("site index out of range");
  }
  const std::uint64_t bit = std::uint64_t{1} << site;
  switch (axis) {
    case Axis::X: return PauliString(n, bit, 0, 0);
    case Axis::Y: return PauliString(n, bit, bit, 1);  // Y = i*X*Z
    case Axis::Z: return PauliString(n, 0, bit, 0);
  }
  throw std::invalid_argument("bad axis");
}

int PauliString::weight() const {
  return std::popcount(x_ | z_);
}

bool PauliString::is_hermitian() const {
  // P^dagger = (-i)^k (-1)^{|x&z|} X^x Z^z; equal to P iff k == |x&z| mod 2.
  return ((k_ ^ std::popcount(x_ & z_)) & 1) == 0;
}

PauliString& PauliString::mul_i(int m) {
  k_ = (k_ + (m % 4) + 4) & 3;
  return *this;
}

std::complex<double> PauliString::scalar() const {
  return i_power(k_);
}

std::complex<double> PauliString::BasisImage::phase() const {
  return i_power(phase_exp);
}

PauliString::BasisImage PauliString::apply_to_basis(std::uint64_t s) const {
  const int k = (k_ + 2 * std::popcount(z_ & s)) & 3;
  return BasisImage{s ^ x_, k};
}

std::string PauliString::to_string() const {
  // Letters absorb one i per Y site, so the displayed scalar exponent is
  // k - |x&z| mod 4.
  const int display = (k_ - std::popcount(x_ & z_)) & 3;
  std::string out;
  if (display != 0) {
    out += "i^";
    out += static_cast<char>('0' + display);
    out += " \xC2\xB7 ";
  }
  if (is_identity_mask()) {
    out += "1";
    return out;
  }
  bool first = true;
  for (int j = 0; j < n_; ++j) {
    const std::uint64_t bit = std::uint64_t{1} << j;
    const bool xb = (x_ & bit) != 0;
    const bool zb = (z_ & bit) != 0;
    if (!xb && !zb) continue;
    if (!first) out += ' ';
    first = false;
    out += (xb && zb) ? 'Y' : (xb ? 'X' : 'Z');
    out += std::to_string(j);
  }
  return out;
}

PauliString multiply(const PauliString& a, const PauliString& b) {
  if (a.n() == 0 || b.n() == 0) {
    throw std::invalid_argument("uninitialized operand");
  }
  if (a.n() != b.n()) {
    throw std::invalid_argument("site count mismatch");
  }
  const int k =
      a.k_ + b.k_ + 2 * std::popcount(a.z_ & b.x_);
  return PauliString(a.n_, a.x_ ^ b.x_, a.z_ ^ b.z_, k);
}

int commutation_phase(const PauliString& a, const PauliString& b) {
  if (a.n() != b.n()) {
    throw std::invalid_argument("site count mismatch");
  }
  const int swaps = std::popcount(a.x_mask() & b.z_mask()) +
                    std::popcount(a.z_mask() & b.x_mask());
  return (swaps & 1) ? -1 : 1;
}

}  // namespace plaq
