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

#ifndef AQNN_CLASSIFY_HPP
#define AQNN_CLASSIFY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aqnn/channels.hpp"

namespace aqnn {

/// Outcome of a property check evaluated on the channel's action on matrix
/// units. `residual` is the largest offending modulus (0 when none).
struct CheckResult {
  bool holds;
  double residual;
};

/// Lambda(|i><i|) is diagonal for every i (non-coherence-generating).
CheckResult check_mio(const ChannelSpec& spec);
CheckResult check_mio(const KrausSet& kraus);
CheckResult check_mio(const ChoiState& j);

/// Lambda(|i><i|) = |i><i| for every i.
CheckResult check_gio(const ChannelSpec& spec);
CheckResult check_gio(const KrausSet& kraus);
CheckResult check_gio(const ChoiState& j);

/// `holds` means the channel activates coherence: some Lambda(|i><j|), i != j,
/// has a nonzero diagonal.
CheckResult check_activation(const ChannelSpec& spec);
CheckResult check_activation(const KrausSet& kraus);
CheckResult check_activation(const ChoiState& j);

struct StructuralCheck {
  bool all;
  std::vector<bool> per_operator;
};

/// Every operator has at most one entry above 1e-10 in modulus per row and
/// per column.
StructuralCheck sio_structural_check(const KrausSet& kraus);
/// Every operator has at most one entry above 1e-10 in modulus per column.
StructuralCheck io_structural_check(const KrausSet& kraus);

enum class IncoherenceMode { IO, SIO };

struct SearchOptions {
  /// Total number of refinement iterations over all restarts.
  long budget = 10'000;
  std::uint64_t seed = 0;
  /// Refinement iterations per random restart.
  int restart_every = 250;
};

struct SearchOutcome {
  std::optional<KrausSet> certificate;
  long iterations_used;
  /// Smallest pattern violation seen (sum of squared off-pattern moduli).
  double best_violation;
};

/// Looks for an isometric remix K'_b = sum_a V_ba K_a (up to twice as many
/// operators as given) whose operators pass the structural check of `mode`.
/// Failure is not a proof of non-membership.
SearchOutcome search_incoherent_decomposition(const KrausSet& kraus,
                                              IncoherenceMode mode,
                                              const SearchOptions& options = {});

struct ClassReport {
  bool is_ncg;
  bool is_gio;
  std::optional<KrausSet> sio_certificate;
  std::optional<KrausSet> io_certificate;
  bool activates_coherence;
  std::map<std::string, double> residuals;
  /// Refinement iterations spent in certificate searches.
  long search_iterations;
};

/// Full classification of a CPTP spec. Certificates are taken from the
/// canonical Kraus set when it already passes, otherwise searched for.
ClassReport classify(const ChannelSpec& spec, const SearchOptions& options = {});

}  // namespace aqnn

#endif  // AQNN_CLASSIFY_HPP
