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
#include <functional>
#include <vector>

#include "plaq/op.hpp"

namespace plaq {

struct LanczosOptions {
  int k = 1;                 // number of lowest eigenpairs to lock
  double tol = 1e-10;        // certified residual norm ||A x - theta x||
  int max_basis = 200;       // Krylov vectors per restart cycle
  int max_cycles = 80;       // restarts per eigenpair
  std::uint64_t seed = 0x9e3779b97f4a7c15ull;
  // Optional start vectors, tried in order before falling back to random
  // starts. Each is orthogonalized against already locked eigenvectors.
  std::vector<std::vector<double>> initial;
  // When false, a start vector that vanishes after deflation ends the solve
  // early (fewer than k pairs) instead of drawing a random replacement.
  // Sector-projected solves rely on this to detect exhausted sectors.
  bool random_fallback = true;
};

struct LanczosResult {
  std::vector<double> eigenvalues;               // ascending as locked
  std::vector<std::vector<double>> eigenvectors; // unit norm, orthonormal
  std::vector<double> residuals;                 // explicit ||A x - theta x||
  std::vector<bool> locked_converged;
  long matvecs = 0;
  bool converged = false;  // all k reached tol
};

// Restarted Lanczos with full two-pass reorthogonalization and hard locking
// of converged eigenpairs. Eigenvalues come out in nondecreasing order only
// when the operator's lowest eigenvalues are found in order, which locking
// enforces for separated clusters; degenerate copies are found by restarting
// from fresh random vectors orthogonal to everything locked.
LanczosResult lowest_eigenpairs(
    std::size_t dim, const std::function<void(const double*, double*)>& apply,
    const LanczosOptions& opts);

LanczosResult lowest_eigenpairs(const OperatorHandle& op,
                                const LanczosOptions& opts);

}  // namespace plaq
