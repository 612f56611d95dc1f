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

#include "plaq/dense.hpp"

#include <bit>
#include <stdexcept>

#include <Eigen/Dense>

namespace plaq {
namespace {

constexpr std::size_t kMaxDenseDim = std::size_t{1} << 13;

// H(s ^ x, s) += coeff * (-1)^|z & s|, the same contraction the kernels use.
template <typename Matrix, typename Scalar>
Matrix materialize(const OperatorHandle& op) {
  const std::size_t d = op.dim();
  Matrix h = Matrix::Zero(d, d);
  for (const OperatorTerm& t : op.terms()) {
    for (std::size_t s = 0; s < d; ++s) {
      const double sgn = (std::popcount(t.z & s) & 1) ? -1.0 : 1.0;
      if constexpr (std::is_same_v<Scalar, double>) {
        h(s ^ t.x, s) += t.coeff.real() * sgn;
      } else {
        h(s ^ t.x, s) += t.coeff * sgn;
      }
    }
  }
  return h;
}

}  // namespace

DenseSpectrum dense_spectrum(const OperatorHandle& op, bool with_vectors) {
  const std::size_t d = op.dim();
  if (d > kMaxDenseDim) {
    throw std::invalid_argument("dense spectrum limited to 2^13 dimensions");
  }
  DenseSpectrum out;
  const auto job = with_vectors ? Eigen::ComputeEigenvectors
                                : Eigen::EigenvaluesOnly;
  if (op.is_real()) {
    Eigen::MatrixXd h = materialize<Eigen::MatrixXd, double>(op);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h, job);
    if (es.info() != Eigen::Success) {
      throw std::runtime_error("dense eigensolver failed to converge");
    }
    out.eigenvalues.assign(es.eigenvalues().data(),
                           es.eigenvalues().data() + d);
    if (with_vectors) {
      out.eigenvectors.resize(d);
      for (std::size_t j = 0; j < d; ++j) {
        out.eigenvectors[j].resize(d);
        for (std::size_t i = 0; i < d; ++i) {
          out.eigenvectors[j][i] = es.eigenvectors()(i, j);
        }
      }
    }
  } else {
    Eigen::MatrixXcd h =
        materialize<Eigen::MatrixXcd, std::complex<double>>(op);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, job);
    if (es.info() != Eigen::Success) {
      throw std::runtime_error("dense eigensolver failed to converge");
    }
    out.eigenvalues.assign(es.eigenvalues().data(),
                           es.eigenvalues().data() + d);
    if (with_vectors) {
      out.eigenvectors.resize(d);
      for (std::size_t j = 0; j < d; ++j) {
        out.eigenvectors[j].resize(d);
        for (std::size_t i = 0; i < d; ++i) {
          out.eigenvectors[j][i] = es.eigenvectors()(i, j);
        }
      }
    }
  }
  return out;
}

std::vector<double> dense_eigenvalues(const OperatorHandle& op) {
  return dense_spectrum(op, false).eigenvalues;
}

}  // namespace plaq
