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

#include "aqnn/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace aqnn {

namespace {

constexpr double kZero = 1e-10;

using UnitAction = std::function<ComplexMatrix(Index, Index)>;

CheckResult mio_from(Index n, const UnitAction& act) {
  double worst = 0.0;
  for (Index i = 0; i < n; ++i) {
    const ComplexMatrix out = act(i, i);
    for (Index b = 0; b < n; ++b) {
      for (Index a = 0; a < n; ++a) {
        if (a != b) worst = std::max(worst, std::abs(out(a, b)));
      }
    }
  }
  return {worst <= kZero, worst};
}

CheckResult gio_from(Index n, const UnitAction& act) {
  double worst = 0.0;
  for (Index i = 0; i < n; ++i) {
    const ComplexMatrix out = act(i, i) - matrix_unit(n, i, i);
    worst = std::max(worst, out.cwiseAbs().maxCoeff());
  }
  return {worst <= kZero, worst};
}

CheckResult activation_from(Index n, const UnitAction& act) {
  double worst = 0.0;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (i == j) continue;
      worst = std::max(worst, act(i, j).diagonal().cwiseAbs().maxCoeff());
    }
  }
  return {worst > kZero, worst};
}

UnitAction spec_action(const ChannelSpec& spec) {
  require_cptp(spec);
  return [&spec](Index i, Index j) {
    return apply_linear(spec, matrix_unit(spec.dim(), i, j));
  };
}

UnitAction kraus_action(const KrausSet& kraus) {
  return [&kraus](Index i, Index j) {
    return kraus.apply(matrix_unit(kraus.dim(), i, j));
  };
}

UnitAction choi_action(const ChoiState& j) {
  const auto verdict = is_cptp(j);
  if (!verdict.cptp) {
    throw Error(ErrorCode::NotCPTP, "Choi state is not CPTP (min eigenvalue " +
                                        std::to_string(verdict.min_eigenvalue) + ")");
  }
  return [&j](Index a, Index b) { return j.action_on_unit(a, b); };
}

bool row_ok(const ComplexMatrix& k, Index i) {
  int count = 0;
  for (Index j = 0; j < k.cols(); ++j) count += std::abs(k(i, j)) > kZero;
  return count <= 1;
}

bool col_ok(const ComplexMatrix& k, Index j) {
  int count = 0;
  for (Index i = 0; i < k.rows(); ++i) count += std::abs(k(i, j)) > kZero;
  return count <= 1;
}

StructuralCheck structural(const KrausSet& kraus, bool rows_too) {
  StructuralCheck out{true, {}};
  for (const auto& k : kraus.operators()) {
    bool ok = true;
    for (Index c = 0; c < k.cols() && ok; ++c) ok = col_ok(k, c);
    for (Index r = 0; r < k.rows() && ok && rows_too; ++r) ok = row_ok(k, r);
    out.per_operator.push_back(ok);
    out.all = out.all && ok;
  }
  return out;
}

// Pattern of kept entries: mask(i, j) for the best admissible support.
using Mask = Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>;

Mask io_pattern(const ComplexMatrix& k) {
  Mask mask = Mask::Constant(k.rows(), k.cols(), false);
  for (Index j = 0; j < k.cols(); ++j) {
    Index best = 0;
    k.col(j).cwiseAbs2().maxCoeff(&best);
    mask(best, j) = true;
  }
  return mask;
}

// The weight-maximising permutation. Exhaustive up to 8 levels, greedy above.
Mask sio_pattern(const ComplexMatrix& k) {
  const Index n = k.rows();
  const Eigen::MatrixXd w = k.cwiseAbs2();
  std::vector<Index> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), Index{0});
  std::vector<Index> best = perm;
  if (n <= 8) {
    double best_weight = -1.0;
    do {
      double weight = 0.0;
      for (Index j = 0; j < n; ++j) weight += w(perm[static_cast<std::size_t>(j)], j);
      if (weight > best_weight) {
        best_weight = weight;
        best = perm;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else {
    std::vector<bool> row_used(static_cast<std::size_t>(n), false);
    std::vector<bool> col_used(static_cast<std::size_t>(n), false);
    for (Index step = 0; step < n; ++step) {
      double top = -1.0;
      Index bi = 0;
      Index bj = 0;
      for (Index j = 0; j < n; ++j) {
        if (col_used[static_cast<std::size_t>(j)]) continue;
        for (Index i = 0; i < n; ++i) {
          if (!row_used[static_cast<std::size_t>(i)] && w(i, j) > top) {
            top = w(i, j);
            bi = i;
            bj = j;
          }
        }
      }
      row_used[static_cast<std::size_t>(bi)] = true;
      col_used[static_cast<std::size_t>(bj)] = true;
      best[static_cast<std::size_t>(bj)] = bi;
    }
  }
  Mask mask = Mask::Constant(n, n, false);
  for (Index j = 0; j < n; ++j) mask(best[static_cast<std::size_t>(j)], j) = true;
  return mask;
}

ComplexMatrix haar_unitary(Index m, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  ComplexMatrix g(m, m);
  for (Index j = 0; j < m; ++j) {
    for (Index i = 0; i < m; ++i) g(i, j) = Complex(normal(rng), normal(rng));
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(m, m);
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < m; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

ComplexMatrix unvec(const ComplexMatrix& a, Index col, Index n) {
  return Eigen::Map<const ComplexMatrix>(a.col(col).data(), n, n);
}

double max_entry_gap(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

CheckResult check_mio(const ChannelSpec& spec) { return mio_from(spec.dim(), spec_action(spec)); }
CheckResult check_mio(const KrausSet& kraus) { return mio_from(kraus.dim(), kraus_action(kraus)); }
CheckResult check_mio(const ChoiState& j) { return mio_from(j.dim_in(), choi_action(j)); }

CheckResult check_gio(const ChannelSpec& spec) { return gio_from(spec.dim(), spec_action(spec)); }
CheckResult check_gio(const KrausSet& kraus) { return gio_from(kraus.dim(), kraus_action(kraus)); }
CheckResult check_gio(const ChoiState& j) { return gio_from(j.dim_in(), choi_action(j)); }

CheckResult check_activation(const ChannelSpec& spec) {
  return activation_from(spec.dim(), spec_action(spec));
}
CheckResult check_activation(const KrausSet& kraus) {
  return activation_from(kraus.dim(), kraus_action(kraus));
}
CheckResult check_activation(const ChoiState& j) {
  return activation_from(j.dim_in(), choi_action(j));
}

StructuralCheck sio_structural_check(const KrausSet& kraus) { return structural(kraus, true); }
StructuralCheck io_structural_check(const KrausSet& kraus) { return structural(kraus, false); }

SearchOutcome search_incoherent_decomposition(const KrausSet& kraus,
                                              IncoherenceMode mode,
                                              const SearchOptions& options) {
  const bool sio = mode == IncoherenceMode::SIO;
  if (structural(kraus, sio).all) return {kraus, 0, 0.0};

  const Index n = kraus.dim();
  // Padding with zero operators turns the unitary remix into an isometric one,
  // which leaves room for certificates with more operators than the input.
  const auto given = static_cast<Index>(kraus.size());
  const Index m = 2 * given;
  ComplexMatrix a = ComplexMatrix::Zero(n * n, m);
  for (Index k = 0; k < given; ++k) {
    a.col(k) = Eigen::Map<const ComplexVector>(kraus[static_cast<std::size_t>(k)].data(), n * n);
  }
  const ComplexMatrix target = choi(kraus).matrix();

  std::mt19937_64 rng(options.seed);
  const int per_restart = std::max(1, options.restart_every);
  ComplexMatrix w = ComplexMatrix::Identity(m, m);
  double best_violation = std::numeric_limits<double>::infinity();
  long used = 0;

  while (used < options.budget) {
    if (used > 0 && used % per_restart == 0) w = haar_unitary(m, rng);
    ++used;

    const ComplexMatrix current = a * w;
    ComplexMatrix projected = ComplexMatrix::Zero(n * n, m);
    double violation = 0.0;
    double worst = 0.0;
    for (Index k = 0; k < m; ++k) {
      const ComplexMatrix op = unvec(current, k, n);
      const Mask mask = sio ? sio_pattern(op) : io_pattern(op);
      for (Index j = 0; j < n; ++j) {
        for (Index i = 0; i < n; ++i) {
          if (mask(i, j)) {
            projected(j * n + i, k) = op(i, j);
          } else {
            violation += std::norm(op(i, j));
            worst = std::max(worst, std::abs(op(i, j)));
          }
        }
      }
    }
    best_violation = std::min(best_violation, violation);

    if (worst < 1e-9) {
      std::vector<ComplexMatrix> ops;
      for (Index k = 0; k < m; ++k) {
        ComplexMatrix op = unvec(projected, k, n);
        if (op.norm() > 1e-12) ops.push_back(std::move(op));
      }
      try {
        KrausSet candidate(std::move(ops));
        if (structural(candidate, sio).all &&
            max_entry_gap(choi(candidate).matrix(), target) <= 1e-8) {
          return {std::move(candidate), used, best_violation};
        }
      } catch (const Error&) {
        // Snapping broke completeness; keep refining.
      }
    }

    // Closest unitary remix to the projected operators (orthogonal Procrustes).
    Eigen::JacobiSVD<ComplexMatrix> svd(a.adjoint() * projected,
                                        Eigen::ComputeFullU | Eigen::ComputeFullV);
    w = svd.matrixU() * svd.matrixV().adjoint();
  }
  return {std::nullopt, used, best_violation};
}

ClassReport classify(const ChannelSpec& spec, const SearchOptions& options) {
  require_cptp(spec);
  ClassReport report{};
  const auto mio = check_mio(spec);
  const auto gio = check_gio(spec);
  const auto act = check_activation(spec);
  report.is_ncg = mio.holds;
  report.is_gio = gio.holds;
  report.activates_coherence = act.holds;
  report.residuals["mio"] = mio.residual;
  report.residuals["gio"] = gio.residual;
  report.residuals["activation"] = act.residual;

  const KrausSet canonical = kraus_from_choi(choi(spec));
  report.residuals["kraus_completeness"] = canonical.completeness_residual();

  if (sio_structural_check(canonical).all) {
    report.sio_certificate = canonical;
    report.io_certificate = canonical;
    return report;
  }
  auto sio = search_incoherent_decomposition(canonical, IncoherenceMode::SIO, options);
  report.search_iterations += sio.iterations_used;
  report.residuals["sio_search_violation"] = sio.best_violation;
  if (sio.certificate) {
    report.sio_certificate = sio.certificate;
    report.io_certificate = sio.certificate;
    return report;
  }
  auto io = search_incoherent_decomposition(canonical, IncoherenceMode::IO, options);
  report.search_iterations += io.iterations_used;
  report.residuals["io_search_violation"] = io.best_violation;
  report.io_certificate = io.certificate;
  return report;
}

}  // namespace aqnn
