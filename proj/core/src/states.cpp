// Copyright 2026 The aqnn Authors
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

#include "aqnn/states.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace aqnn {

namespace {

ComplexMatrix gaussian_matrix(Index rows, Index cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  ComplexMatrix g(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
  try {
    require_hermitian(m_, "DensityMatrix");
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidState, e.what());
  }
  const double tr_err = std::abs(m_.trace() - Complex(1.0));
  if (tr_err > tol::trace) {
    throw Error(ErrorCode::InvalidState,
                "DensityMatrix: trace deviates from 1 by " + std::to_string(tr_err));
  }
  const ComplexMatrix h = 0.5 * (m_ + m_.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues()(0) < -tol::psd) {
    throw Error(ErrorCode::InvalidState,
                "DensityMatrix: negative eigenvalue " +
                    std::to_string(solver.eigenvalues()(0)));
  }
}

DensityMatrix DensityMatrix::trusted(ComplexMatrix m) {
  return DensityMatrix(std::move(m), NoCheck{});
}

double DensityMatrix::purity() const {
  return (m_ * m_).trace().real();
}

PureState::PureState(ComplexVector amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.size() == 0) throw Error(ErrorCode::BadDimension, "PureState: empty");
  const double norm = amps_.norm();
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > 1e-12) {
    throw Error(ErrorCode::InvalidState,
                "PureState: norm " + std::to_string(norm) + " is not 1");
  }
}

DensityMatrix PureState::density() const {
  return DensityMatrix::trusted(amps_ * amps_.adjoint());
}

MaximallyCoherentState::MaximallyCoherentState(std::vector<double> phases)
    : phases_(std::move(phases)) {
  if (phases_.size() < 2) {
    throw Error(ErrorCode::BadDimension, "maximally coherent state needs N >= 2");
  }
  constexpr double two_pi = 2.0 * std::numbers::pi;
  for (auto& theta : phases_) {
    if (!std::isfinite(theta)) throw Error(ErrorCode::NonFinite, "phase is not finite");
    theta = std::fmod(theta, two_pi);
    if (theta < 0.0) theta += two_pi;
  }
}

MaximallyCoherentState MaximallyCoherentState::zero_phase(Index dim) {
  if (dim < 2) throw Error(ErrorCode::BadDimension, "maximally coherent state needs N >= 2");
  return MaximallyCoherentState(std::vector<double>(static_cast<std::size_t>(dim), 0.0));
}

PureState MaximallyCoherentState::ket() const {
  const Index n = dim();
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  ComplexVector v(n);
  for (Index j = 0; j < n; ++j) v(j) = std::polar(amp, phases_[static_cast<std::size_t>(j)]);
  v.normalize();
  return PureState(std::move(v));
}

ComplexMatrix dephase(const ComplexMatrix& m) {
  require_square(m, "dephase");
  return m.diagonal().asDiagonal();
}

DensityMatrix dephase(const DensityMatrix& rho) {
  return DensityMatrix::trusted(dephase(rho.matrix()));
}

DensityMatrix maximally_coherent(Index dim, std::span<const double> phases) {
  if (dim < 2) throw Error(ErrorCode::BadDimension, "maximally_coherent: N < 2");
  if (static_cast<Index>(phases.size()) != dim) {
    throw Error(ErrorCode::DimensionMismatch, "maximally_coherent: need N phases");
  }
  return MaximallyCoherentState({phases.begin(), phases.end()}).density();
}

Purification purify(const DensityMatrix& rho) {
  const auto eig = herm_eig(rho.matrix());
  const Index n = rho.dim();
  Index rank = 0;
  while (rank < n && eig.eigenvalues(rank) > 1e-12) ++rank;
  if (rank == 0) throw Error(ErrorCode::InvalidState, "purify: zero matrix");

  // |psi> = sum_k sqrt(p_k) |phi_k> |k>, index i * rank + k.
  ComplexVector psi = ComplexVector::Zero(n * rank);
  for (Index k = 0; k < rank; ++k) {
    const double w = std::sqrt(eig.eigenvalues(k));
    for (Index i = 0; i < n; ++i) psi(i * rank + k) = w * eig.eigenvectors(i, k);
  }
  // Dropped eigenvalues leave a deficit of at most n * 1e-12 in the norm.
  psi.normalize();
  return {PureState(std::move(psi)), rank};
}

DensityMatrix random_density(Index dim, Index rank, std::uint64_t seed) {
  if (dim < 1) throw Error(ErrorCode::BadDimension, "random_density: N < 1");
  if (rank < 1 || rank > dim) {
    throw Error(ErrorCode::BadRank, "random_density: rank " + std::to_string(rank) +
                                        " outside [1, " + std::to_string(dim) + "]");
  }
  const ComplexMatrix g = gaussian_matrix(dim, rank, seed);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix::trusted(std::move(rho));
}

PureState random_pure(Index dim, std::uint64_t seed) {
  if (dim < 1) throw Error(ErrorCode::BadDimension, "random_pure: N < 1");
  ComplexVector v = gaussian_matrix(dim, 1, seed).col(0);
  v.normalize();
  return PureState(std::move(v));
}

DensityMatrix basis_state(Index dim, Index i) {
  if (dim < 1 || i < 0 || i >= dim) {
    throw Error(ErrorCode::BadDimension, "basis_state: index out of range");
  }
  return DensityMatrix::trusted(matrix_unit(dim, i, i));
}

}  // namespace aqnn
