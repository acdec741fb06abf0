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

#ifndef AQNN_CHANNELS_HPP
#define AQNN_CHANNELS_HPP

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "aqnn/linalg.hpp"
#include "aqnn/states.hpp"

namespace aqnn {

/// Off-diagonal coupling coefficients of an attractor channel. Stored as a
/// full N x N matrix with zero diagonal and alpha(nu, mu) = conj(alpha(mu, nu)).
class AlphaMatrix {
 public:
  /// `full` must have a zero diagonal and a lower triangle that is either
  /// all zero (then it is filled from the upper one) or the conjugate
  /// transpose of the upper triangle.
  explicit AlphaMatrix(ComplexMatrix full);

  static AlphaMatrix uniform(Index dim, Complex alpha);

  Index dim() const { return m_.rows(); }
  Complex operator()(Index mu, Index nu) const { return m_(mu, nu); }
  const ComplexMatrix& matrix() const { return m_; }

  /// The common upper-triangle value if every alpha(mu < nu) agrees within tol.
  std::optional<Complex> uniform_value(double tol = 1e-12) const;

 private:
  ComplexMatrix m_;
};

enum class Variant { Ideal, FaultyEpsGamma, FaultyEpsGammaLambda };

std::string_view to_string(Variant v);

/// One member of the three attractor channel families.
///
///   Ideal                 rho_mumu kept, rho_munu -> (1 + alpha_munu) rho_munu
///   FaultyEpsGamma        populations leak eps/(N-1) to every other level,
///                         rho_munu (mu < nu) also feeds gamma |nu><mu|
///   FaultyEpsGammaLambda  additionally rho_munu (mu < nu) feeds
///                         lambda |mu+1><nu+1| with indices taken mod N
///
/// Construction checks structure only (dimensions, variant/parameter
/// consistency, eps in [0, 1]); complete positivity is decided by is_cptp.
class ChannelSpec {
 public:
  ChannelSpec(Variant variant, AlphaMatrix alpha, double epsilon = 0.0,
              Complex gamma = 0.0, Complex lambda_shift = 0.0);

  static ChannelSpec ideal(AlphaMatrix alpha);
  static ChannelSpec eps_gamma(AlphaMatrix alpha, double epsilon, Complex gamma);
  static ChannelSpec eps_gamma_lambda(AlphaMatrix alpha, double epsilon,
                                      Complex gamma, Complex lambda_shift);

  Index dim() const { return alpha_.dim(); }
  Variant variant() const { return variant_; }
  const AlphaMatrix& alpha() const { return alpha_; }
  double epsilon() const { return epsilon_; }
  Complex gamma() const { return gamma_; }
  Complex lambda_shift() const { return lambda_; }

 private:
  Variant variant_;
  AlphaMatrix alpha_;
  double epsilon_;
  Complex gamma_;
  Complex lambda_;
};

/// J = sum_ij |i><j| (x) L(|i><j|), input factor first, trace N.
class ChoiState {
 public:
  ChoiState(Index dim_in, ComplexMatrix matrix);

  Index dim_in() const { return dim_; }
  const ComplexMatrix& matrix() const { return j_; }

  /// L(|i><j|), read off the (i, j) block.
  ComplexMatrix action_on_unit(Index i, Index j) const {
    return j_.block(i * dim_, j * dim_, dim_, dim_);
  }

 private:
  Index dim_;
  ComplexMatrix j_;
};

class KrausSet {
 public:
  /// Requires sum_k K_k^dagger K_k = 1 within 1e-8.
  explicit KrausSet(std::vector<ComplexMatrix> operators);

  Index dim() const { return ops_.front().rows(); }
  std::size_t size() const { return ops_.size(); }
  const std::vector<ComplexMatrix>& operators() const { return ops_; }
  const ComplexMatrix& operator[](std::size_t k) const { return ops_[k]; }

  ComplexMatrix apply(const ComplexMatrix& rho) const;
  double completeness_residual() const;

 private:
  std::vector<ComplexMatrix> ops_;
};

struct CptpVerdict {
  bool cptp;
  double min_eigenvalue;
  double tp_residual;
};

/// Whether `apply` re-verifies complete positivity before acting.
enum class Safety { Checked, Unchecked };

using LinearMap = std::function<ComplexMatrix(const ComplexMatrix&)>;

/// The channel as a linear map on arbitrary N x N matrices. No CPTP check.
ComplexMatrix apply_linear(const ChannelSpec& spec, const ComplexMatrix& x);

DensityMatrix apply(const ChannelSpec& spec, const DensityMatrix& rho,
                    Safety safety = Safety::Checked);

/// r-fold application; the CPTP check (if any) runs once.
DensityMatrix iterate(const ChannelSpec& spec, const DensityMatrix& rho, int r,
                      Safety safety = Safety::Checked);

/// (L (x) id)(psi) for psi on H (x) A, channel on the first factor.
DensityMatrix apply_extended(const ChannelSpec& spec, const DensityMatrix& psi,
                             Index ancilla_dim, Safety safety = Safety::Checked);
ComplexMatrix apply_extended_linear(const LinearMap& map, Index dim,
                                    const ComplexMatrix& psi, Index ancilla_dim);

/// Closed-form Choi state.
ChoiState choi(const ChannelSpec& spec);
/// Nonzero entries of the closed-form Choi state.
std::vector<SparseEntry> choi_entries(const ChannelSpec& spec);
/// Choi state assembled from the action of `map` on all N^2 matrix units.
ChoiState choi_from_map(Index dim, const LinearMap& map);
ChoiState choi(const KrausSet& kraus);

/// CPTP iff min Choi eigenvalue >= -1e-10 and ||Tr_out J - 1||_max <= 1e-10.
CptpVerdict is_cptp(const ChannelSpec& spec);
CptpVerdict is_cptp(const ChoiState& j);

/// Throws NotCPTP with the witness in the message.
void require_cptp(const ChannelSpec& spec);

/// K_i = sqrt(l_i) mat(v_i) over Choi eigenpairs with l_i > 1e-10, ordered by
/// descending eigenvalue. Eigenvectors are localised on direct-sum blocks of J.
KrausSet kraus_from_choi(const ChoiState& j);

}  // namespace aqnn

#endif  // AQNN_CHANNELS_HPP
