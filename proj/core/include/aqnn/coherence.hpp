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

#ifndef AQNN_COHERENCE_HPP
#define AQNN_COHERENCE_HPP

#include <cstdint>
#include <optional>

#include "aqnn/channels.hpp"
#include "aqnn/states.hpp"

namespace aqnn {

/// Sum of the moduli of all off-diagonal entries.
double c_l1(const DensityMatrix& rho);
double c_l1(const ComplexMatrix& m);

/// -sum l log2 l over the spectrum, 0 log 0 = 0.
double von_neumann_entropy(const DensityMatrix& rho);

/// S(dephase(rho)) - S(rho).
double c_relative_entropy(const DensityMatrix& rho);

/// Tr rho log2 rho - Tr rho log2 sigma. Returns +infinity when rho has
/// weight (> 1e-12) outside the support of sigma; sigma eigenvalues at or
/// below 1e-15 are treated as exact zeros.
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

struct ClosestAttractor {
  DensityMatrix state;
  double relative_entropy;
};

/// The incoherent state nearest to rho in relative entropy, which is
/// dephase(rho), together with the distance C_re(rho).
ClosestAttractor closest_attractor(const DensityMatrix& rho);

/// Exact one-step decohering power of an ideal channel:
/// N - 1 - (1/N) sum_{mu != nu} |1 + alpha_munu|.
double decohering_power(const ChannelSpec& spec);

/// max over sampled maximally coherent inputs of C_l1(Psi) - C_l1(L(Psi)).
/// The zero-phase state is always among the samples. Works for every variant.
double estimate_decohering_power(const ChannelSpec& spec, int samples = 1000,
                                 std::uint64_t seed = 0);

struct DepthQuery {
  ChannelSpec spec;
  double eta;
  long max_iterations = 1'000'000;
};

struct DepthReport {
  /// Present only for uniform alpha.
  std::optional<long> analytic_bound;
  long simulated_depth;
  double decohering_power;
  bool uniform_alpha;
  bool agreement;
};

/// ceil(log(eta / (N-1)) / log((N-1-D) / (N-1))); 1 when D = N - 1 and
/// nothing when D <= 0 (the coherence never decays).
std::optional<long> analytic_depth(Index dim, double decohering_power, double eta);

/// Smallest r with C_l1(L^r(Psi_N)) <= eta, starting from the zero-phase
/// maximally coherent state. Throws DepthExceeded past `max_iterations`.
long simulated_depth(const ChannelSpec& spec, double eta,
                     long max_iterations = 1'000'000);

/// Ideal variant only.
DepthReport depth(const DepthQuery& query);

}  // namespace aqnn

#endif  // AQNN_COHERENCE_HPP
