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

#include "plaq/lanczos.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>

#include "plaq/kernels.hpp"

namespace plaq {
namespace {

void fill_random(std::vector<double>& v, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  for (double& x : v) x = dist(gen);
}

// Two classical Gram-Schmidt passes; enough for orthogonality at working
// precision when vectors are not pathologically aligned.
void project_out(std::vector<double>& u,
                 const std::vector<std::vector<double>>& basis,
                 std::size_t count, std::size_t dim) {
  const Kernels& K = kernels();
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t i = 0; i < count; ++i) {
      const double c = K.dot_r(basis[i].data(), u.data(), dim);
      K.axpy_r(-c, basis[i].data(), u.data(), dim);
    }
  }
}

}  // namespace

LanczosResult lowest_eigenpairs(
    std::size_t dim, const std::function<void(const double*, double*)>& apply,
    const LanczosOptions& opts) {
  if (dim < 1) throw std::invalid_argument("dimension must be positive");
  if (opts.k < 1 || static_cast<std::size_t>(opts.k) > dim) {
    throw std::invalid_argument("requested eigenpair count out of range");
  }
  if (!(opts.tol > 0)) throw std::invalid_argument("tolerance must be > 0");

  const Kernels& K = kernels();
  LanczosResult res;
  std::vector<std::vector<double>> basis;
  std::vector<double> w(dim), x(dim);

  for (int j = 0; j < opts.k; ++j) {
    // Start vector: provided, else deterministic random stream.
    std::vector<double> v(dim);
    bool have_start = false;
    int draw = 0;
    while (!have_start) {
      if (j < static_cast<int>(opts.initial.size()) && draw == 0) {
        if (opts.initial[j].size() != dim) {
          throw std::invalid_argument("start vector has wrong dimension");
        }
        v = opts.initial[j];
      } else {
        if (!opts.random_fallback && draw > 0) break;
        if (!opts.random_fallback &&
            j >= static_cast<int>(opts.initial.size())) {
          break;
        }
        fill_random(v, opts.seed + 0x9e37u * static_cast<std::uint64_t>(j) +
                           static_cast<std::uint64_t>(draw));
      }
      project_out(v, res.eigenvectors, res.eigenvectors.size(), dim);
      const double nrm = std::sqrt(K.nrm2sq_r(v.data(), dim));
      if (nrm > 1e-8) {
        K.scal_r(1.0 / nrm, v.data(), dim);
        have_start = true;
      }
      ++draw;
      if (draw > 8) break;
    }
    if (!have_start) break;  // deflated space exhausted

    const int max_m = std::min<std::size_t>(
        opts.max_basis, dim - res.eigenvectors.size());
    double theta = 0.0;
    double rnorm = std::numeric_limits<double>::infinity();
    bool locked = false;

    for (int cycle = 0; cycle < opts.max_cycles && !locked; ++cycle) {
      basis.clear();
      basis.push_back(v);
      std::vector<double> alpha, beta;
      for (int i = 0; i < max_m; ++i) {
        apply(basis[i].data(), w.data());
        ++res.matvecs;
        if (i > 0) K.axpy_r(-beta[i - 1], basis[i - 1].data(), w.data(), dim);
        const double a = K.dot_r(basis[i].data(), w.data(), dim);
        alpha.push_back(a);
        K.axpy_r(-a, basis[i].data(), w.data(), dim);
        project_out(w, res.eigenvectors, res.eigenvectors.size(), dim);
        project_out(w, basis, basis.size(), dim);
        if (i + 1 >= max_m) break;
        const double b = std::sqrt(K.nrm2sq_r(w.data(), dim));
        if (b < 1e-13) break;  // invariant subspace reached
        beta.push_back(b);
        std::vector<double> next = w;
        K.scal_r(1.0 / b, next.data(), dim);
        basis.push_back(std::move(next));
      }

      const int m = static_cast<int>(alpha.size());
      Eigen::VectorXd d(m), sub(std::max(m - 1, 0));
      for (int i = 0; i < m; ++i) d[i] = alpha[i];
      for (int i = 0; i + 1 < m; ++i) sub[i] = beta[i];
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
      es.computeFromTridiagonal(d, sub, Eigen::ComputeEigenvectors);
      if (es.info() != Eigen::Success) {
        throw std::runtime_error("tridiagonal eigensolver failed");
      }

      // Lowest Ritz vector, refreshed Rayleigh quotient, honest residual.
      std::fill(x.begin(), x.end(), 0.0);
      for (int i = 0; i < m; ++i) {
        K.axpy_r(es.eigenvectors()(i, 0), basis[i].data(), x.data(), dim);
      }
      const double xn = std::sqrt(K.nrm2sq_r(x.data(), dim));
      if (xn < 1e-13) throw std::runtime_error("lanczos produced null ritz");
      K.scal_r(1.0 / xn, x.data(), dim);
      apply(x.data(), w.data());
      ++res.matvecs;
      theta = K.dot_r(x.data(), w.data(), dim);
      K.axpy_r(-theta, x.data(), w.data(), dim);
      rnorm = std::sqrt(K.nrm2sq_r(w.data(), dim));
      v = x;
      locked = rnorm <= opts.tol;
    }

    res.eigenvalues.push_back(theta);
    res.eigenvectors.push_back(v);
    res.residuals.push_back(rnorm);
    res.locked_converged.push_back(locked);
  }

  // Locking order is ascending for separated levels, but quasi-degenerate
  // pairs may land out of order; report sorted.
  std::vector<std::size_t> perm(res.eigenvalues.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return res.eigenvalues[a] < res.eigenvalues[b];
  });
  LanczosResult sorted;
  sorted.matvecs = res.matvecs;
  for (std::size_t p : perm) {
    sorted.eigenvalues.push_back(res.eigenvalues[p]);
    sorted.eigenvectors.push_back(std::move(res.eigenvectors[p]));
    sorted.residuals.push_back(res.residuals[p]);
    sorted.locked_converged.push_back(res.locked_converged[p]);
  }
  sorted.converged =
      sorted.eigenvalues.size() == static_cast<std::size_t>(opts.k) &&
      std::all_of(sorted.locked_converged.begin(),
                  sorted.locked_converged.end(), [](bool b) { return b; });
  return sorted;
}

LanczosResult lowest_eigenpairs(const OperatorHandle& op,
                                const LanczosOptions& opts) {
  return lowest_eigenpairs(
      op.dim(), [&op](const double* in, double* out) { op.matvec(in, out); },
      opts);
}

}  // namespace plaq
