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

#include <complex>
#include <vector>

#include "plaq/op.hpp"

namespace plaq {

// Full spectrum from a materialized matrix. This is the slow, trusted route
// used to validate the iterative solver; it refuses dimensions above 2^13.
struct DenseSpectrum {
  std::vector<double> eigenvalues;                            // ascending
  std::vector<std::vector<std::complex<double>>> eigenvectors;  // column j
};

DenseSpectrum dense_spectrum(const OperatorHandle& op, bool with_vectors);

std::vector<double> dense_eigenvalues(const OperatorHandle& op);

}  // namespace plaq
