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

#ifndef AQNN_DILATION_HPP
#define AQNN_DILATION_HPP

#include <cstdint>
#include <vector>

#include "aqnn/channels.hpp"

namespace aqnn {

/// Unit vectors c_mu in C^{d_A} with <c_nu|c_mu> = 1 + alpha_munu.
struct GramVectors {
  Index dim;
  Index ancilla_dim;
  std::vector<ComplexVector> vectors;

  /// G(mu, nu) = <c_mu|c_nu>.
  ComplexMatrix gram() const;
};

/// Factorises G = 1 + alpha^T through its eigendecomposition, dropping
/// eigenvalues below 1e-10. Throws NotPSD when G has a negative eigenvalue.
GramVectors gram_factorize(const AlphaMatrix& alpha);

/// Unitary on H (x) A, system factor first (index mu * d_A + a), with the
/// ancilla prepared in basis state `ancilla_start`.
class DilationUnitary {
 public:
  /// Requires U^dagger U = 1 within 1e-9.
  DilationUnitary(Index system_dim, Index ancilla_dim, ComplexMatrix matrix,
                  Index ancilla_start = 0);

  Index system_dim() const { return n_; }
  Index ancilla_dim() const { return d_; }
  Index ancilla_start() const { return start_; }
  const ComplexMatrix& matrix() const { return u_; }

  /// max |U^dagger U - 1|.
  double unitarity_residual() const;

  /// Tr_A[U (rho (x) |a_s><a_s|) U^dagger].
  ComplexMatrix output(const ComplexMatrix& rho) const;

 private:
  Index n_;
  Index d_;
  ComplexMatrix u_;
  Index start_;
};

/// Block-diagonal sum_mu |mu><mu| (x) U_mu with U_mu |a_0> = |c_mu>, each U_mu
/// a rotation in span{a_0, c_mu}. Ideal variant only.
DilationUnitary build_gio_dilation(const ChannelSpec& spec);

/// Permutation-form dilation of an eps_gamma channel on the parameter
/// boundary |1 + alpha_munu| = 1 - eps (phase-consistent) and
/// |gamma| = eps / (N - 1). Throws ConstraintInfeasible elsewhere.
DilationUnitary build_sio_dilation(const ChannelSpec& spec);

/// The isometry sum_a K_a (x) |a> completed to a unitary, d_A = #operators.
DilationUnitary build_generic_dilation(const KrausSet& kraus);

/// Largest trace-norm gap between the dilation output and the channel over
/// `trials` seeded random full-rank states.
double verify_dilation(const DilationUnitary& u, const ChannelSpec& spec,
                       int trials = 100, std::uint64_t seed = 0);

}  // namespace aqnn

#endif  // AQNN_DILATION_HPP
