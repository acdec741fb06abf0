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

#ifndef AQNN_DIAMOND_HPP
#define AQNN_DIAMOND_HPP

#include <cstdint>
#include <optional>
#include <string_view>

#include "aqnn/channels.hpp"

namespace aqnn {

/// min lambda  s.t.  Z >= J_diff,  lambda 1 >= Tr_out Z,  Z >= 0.
/// The optimum is the diamond distance (with the factor 1/2 included).
class DiamondProgram {
 public:
  /// J_diff must be an N^2 x N^2 Hermitian matrix (input factor first).
  DiamondProgram(Index dim, ComplexMatrix j_diff);
  static DiamondProgram between(const ChoiState& a, const ChoiState& b);

  Index dim() const { return n_; }
  const ComplexMatrix& j_diff() const { return j_; }

 private:
  Index n_;
  ComplexMatrix j_;
};

enum class DiamondMethod { Auto, Analytic, InteriorPoint };

std::string_view to_string(DiamondMethod m);

struct DiamondResult {
  double value;
  ComplexMatrix z_opt;
  double lambda_opt;
  double dual_gap_estimate;
  DiamondMethod method;
  int newton_steps;
  /// Most negative eigenvalues of Z - J_diff, lambda 1 - Tr_out Z and Z,
  /// reported as nonnegative violations.
  double feasibility_residual;
};

struct SolverOptions {
  double t_initial = 1.0;
  double t_factor = 10.0;
  double t_final = 1e9;
  int max_newton_per_stage = 200;
};

/// Log-det barrier interior-point solve. Throws SolverDidNotConverge when a
/// centering stage fails.
DiamondResult solve(const DiamondProgram& program, const SolverOptions& options = {});

/// Closed-form optimum when J_diff is diagonal (within 1e-12): Z is the
/// positive part of J_diff and lambda the largest diagonal entry of Tr_out Z.
std::optional<DiamondResult> solve_diagonal(const DiamondProgram& program);

/// Both specs CPTP and of equal dimension. `Auto` uses the closed form
/// when it applies and the interior-point solver otherwise, which is
/// limited to N <= 6.
DiamondResult diamond_distance(const ChannelSpec& a, const ChannelSpec& b,
                               DiamondMethod method = DiamondMethod::Auto,
                               const SolverOptions& options = {});

std::optional<DiamondResult> diamond_analytic_diagonal(const ChannelSpec& a,
                                                       const ChannelSpec& b);

/// 1/2 max ||(L_a (x) id - L_b (x) id)(psi)||_1 over the maximally entangled
/// state, the product basis states |i>|0> and `trials` seeded Haar-random
/// pure states on C^N (x) C^N.
double diamond_lower_bound(const ChannelSpec& a, const ChannelSpec& b,
                           int trials = 200, std::uint64_t seed = 0);

}  // namespace aqnn

#endif  // AQNN_DIAMOND_HPP
