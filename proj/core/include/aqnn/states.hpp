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

#ifndef AQNN_STATES_HPP
#define AQNN_STATES_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "aqnn/linalg.hpp"

namespace aqnn {

/// Hermitian, unit-trace, positive semidefinite N x N matrix. The incoherent
/// (attractor) basis is always the computational basis.
class DensityMatrix {
 public:
  /// Validates hermiticity (1e-12), trace (1e-10) and positivity (-1e-10).
  explicit DensityMatrix(ComplexMatrix m);

  /// Skips validation. For results that are valid by construction, e.g.
  /// outputs of a channel already checked to be CPTP.
  static DensityMatrix trusted(ComplexMatrix m);

  Index dim() const { return m_.rows(); }
  const ComplexMatrix& matrix() const { return m_; }
  Complex operator()(Index i, Index j) const { return m_(i, j); }

  double purity() const;

 private:
  struct NoCheck {};
  DensityMatrix(ComplexMatrix m, NoCheck) : m_(std::move(m)) {}

  ComplexMatrix m_;
};

class PureState {
 public:
  /// Amplitudes must have unit 2-norm within 1e-12.
  explicit PureState(ComplexVector amplitudes);

  Index dim() const { return amps_.size(); }
  const ComplexVector& amplitudes() const { return amps_; }
  DensityMatrix density() const;

 private:
  ComplexVector amps_;
};

/// (1/sqrt N) sum_j exp(i theta_j) |j>.
class MaximallyCoherentState {
 public:
  /// Phases are reduced into [0, 2 pi).
  explicit MaximallyCoherentState(std::vector<double> phases);
  static MaximallyCoherentState zero_phase(Index dim);

  Index dim() const { return static_cast<Index>(phases_.size()); }
  const std::vector<double>& phases() const { return phases_; }
  PureState ket() const;
  DensityMatrix density() const { return ket().density(); }

 private:
  std::vector<double> phases_;
};

/// A purification on H (x) A with the ancilla as second factor.
struct Purification {
  PureState state;
  Index ancilla_dim;
};

/// Erases every off-diagonal entry.
DensityMatrix dephase(const DensityMatrix& rho);
ComplexMatrix dephase(const ComplexMatrix& m);

DensityMatrix maximally_coherent(Index dim, std::span<const double> phases);

/// Ancilla dimension equals the rank of rho (eigenvalues below 1e-12 dropped).
Purification purify(const DensityMatrix& rho);

/// Hilbert-Schmidt (Ginibre) ensemble: G G^dagger / Tr with G an N x r
/// matrix of standard complex Gaussians. Deterministic in `seed`.
DensityMatrix random_density(Index dim, Index rank, std::uint64_t seed);

/// Haar-random pure state.
PureState random_pure(Index dim, std::uint64_t seed);

DensityMatrix basis_state(Index dim, Index i);

}  // namespace aqnn

#endif  // AQNN_STATES_HPP
