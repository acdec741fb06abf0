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

#ifndef AQNN_TESTS_GENERATORS_HPP
#define AQNN_TESTS_GENERATORS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "aqnn/channels.hpp"
#include "aqnn/states.hpp"

namespace aqnn::testing {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi);
Complex random_phase(Rng& rng);

/// Unit vectors c_0..c_{N-1} in C^d.
std::vector<ComplexVector> random_unit_vectors(Index n, Index d, Rng& rng);

/// alpha_munu = s <c_nu|c_mu> - 1, a Gram construction that is CPTP for
/// every scale s in [0, 1].
AlphaMatrix gram_alpha(const std::vector<ComplexVector>& c, double scale);

/// Random CPTP members of each family.
ChannelSpec random_ideal_spec(Index n, Rng& rng);
ChannelSpec random_faulty_spec(Index n, Rng& rng, double min_eps = 0.05);
/// |lambda| > 1e-6; lambda is shrunk until the channel is CPTP.
ChannelSpec random_lambda_spec(Index n, Rng& rng);

/// Uniform real alpha inside the CPTP window of each variant.
ChannelSpec random_uniform_ideal(Index n, Rng& rng);
ChannelSpec random_uniform_faulty(Index n, double eps, Rng& rng);

/// eps_gamma spec on the boundary where the permutation-form dilation exists.
ChannelSpec random_boundary_faulty(Index n, Rng& rng);

/// Random unitary remix K'_b = sum_a V_ba K_a.
KrausSet remix(const KrausSet& k, Rng& rng);
ComplexMatrix haar_unitary(Index m, Rng& rng);

/// Point uniformly distributed on the probability simplex.
std::vector<double> dirichlet(Index n, Rng& rng);

/// S(rho || diag(p)) in bits from the definition, with p strictly positive.
double relative_entropy_to_diagonal(const DensityMatrix& rho, const std::vector<double>& p);

/// Explicit Kraus decomposition of an eps_gamma_lambda channel (N >= 3,
/// eps > 0) in which every operator is a weighted permutation: diagonal
/// operators from the population block, swap operators a|nu><mu| + b|mu><nu|
/// and cyclic shifts sum_mu c_mu |mu+1><mu|. Returns nothing when the
/// residual cyclic block is not positive semidefinite.
std::optional<KrausSet> explicit_sio_decomposition(const ChannelSpec& spec);

/// Kraus set of a toy channel with Lambda(|0><1|) carrying population,
/// {|0><+|, |1><-|} on a qubit.
KrausSet activating_toy_channel();

}  // namespace aqnn::testing

#endif  // AQNN_TESTS_GENERATORS_HPP
