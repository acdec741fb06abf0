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

#include "aqnn/coherence.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

namespace aqnn {

namespace {

double entropy_of(const RealVector& spectrum) {
  double s = 0.0;
  for (Index i = 0; i < spectrum.size(); ++i) {
    const double p = spectrum(i);
    if (p > 0.0) s -= p * std::log2(p);
  }
  return s;
}

RealVector spectrum(const ComplexMatrix& m) {
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

void require_ideal(const ChannelSpec& spec, const char* what) {
  if (spec.variant() != Variant::Ideal) {
    throw Error(ErrorCode::WrongVariant,
                std::string(what) + " is defined for the ideal variant only, got " +
                    std::string(to_string(spec.variant())));
  }
}

}  // namespace

double c_l1(const ComplexMatrix& m) {
  require_square(m, "c_l1");
  double total = 0.0;
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      if (i != j) total += std::abs(m(i, j));
    }
  }
  return total;
}

double c_l1(const DensityMatrix& rho) { return c_l1(rho.matrix()); }

double von_neumann_entropy(const DensityMatrix& rho) {
  return entropy_of(spectrum(rho.matrix()));
}

double c_relative_entropy(const DensityMatrix& rho) {
  RealVector pops = rho.matrix().diagonal().real();
  // Entropy differences of nearly pure states can dip below zero by rounding.
  return std::max(0.0, entropy_of(pops) - von_neumann_entropy(rho));
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "relative_entropy: dimensions differ");
  }
  const ComplexMatrix h = 0.5 * (sigma.matrix() + sigma.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  double cross = 0.0;
  for (Index k = 0; k < rho.dim(); ++k) {
    const auto w = solver.eigenvectors().col(k);
    const double weight = (w.adjoint() * rho.matrix() * w)(0, 0).real();
    const double s = solver.eigenvalues()(k);
    if (s <= 1e-15) {
      if (weight > 1e-12) return std::numeric_limits<double>::infinity();
      continue;
    }
    cross += weight * std::log2(s);
  }
  return -von_neumann_entropy(rho) - cross;
}

ClosestAttractor closest_attractor(const DensityMatrix& rho) {
  return {dephase(rho), c_relative_entropy(rho)};
}

double decohering_power(const ChannelSpec& spec) {
  require_ideal(spec, "decohering_power");
  const Index n = spec.dim();
  double kept = 0.0;
  for (Index mu = 0; mu < n; ++mu) {
    for (Index nu = 0; nu < n; ++nu) {
      if (mu != nu) kept += std::abs(1.0 + spec.alpha()(mu, nu));
    }
  }
  return static_cast<double>(n - 1) - kept / static_cast<double>(n);
}

double estimate_decohering_power(const ChannelSpec& spec, int samples,
                                 std::uint64_t seed) {
  require_cptp(spec);
  const Index n = spec.dim();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  std::vector<double> phases(static_cast<std::size_t>(n), 0.0);
  double best = 0.0;
  for (int s = 0; s <= std::max(samples, 0); ++s) {
    if (s > 0) {
      for (auto& theta : phases) theta = phase(rng);
    }
    const auto psi = MaximallyCoherentState(phases).density();
    const double loss = c_l1(psi) - c_l1(apply_linear(spec, psi.matrix()));
    best = std::max(best, loss);
  }
  return best;
}

std::optional<long> analytic_depth(Index dim, double d, double eta) {
  if (dim < 2) throw Error(ErrorCode::BadDimension, "analytic_depth: N < 2");
  if (!(eta > 0.0 && eta < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "eta must lie in (0, 1)");
  }
  const double top = static_cast<double>(dim - 1);
  if (d <= 0.0) return std::nullopt;
  if (d >= top) return 1;
  const double r = std::log(eta / top) / std::log((top - d) / top);
  return std::max(1L, static_cast<long>(std::ceil(r)));
}

long simulated_depth(const ChannelSpec& spec, double eta, long max_iterations) {
  if (!(eta > 0.0 && eta < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "eta must lie in (0, 1)");
  }
  require_cptp(spec);
  ComplexMatrix x = MaximallyCoherentState::zero_phase(spec.dim()).density().matrix();
  for (long r = 1; r <= max_iterations; ++r) {
    x = apply_linear(spec, x);
    if (c_l1(x) <= eta) return r;
  }
  throw Error(ErrorCode::DepthExceeded,
              "coherence stays above eta after " + std::to_string(max_iterations) +
                  " iterations");
}

DepthReport depth(const DepthQuery& query) {
  require_ideal(query.spec, "depth");
  DepthReport report{};
  report.decohering_power = decohering_power(query.spec);
  report.uniform_alpha = query.spec.alpha().uniform_value().has_value();
  if (report.uniform_alpha) {
    report.analytic_bound =
        analytic_depth(query.spec.dim(), report.decohering_power, query.eta);
  }
  report.simulated_depth = simulated_depth(query.spec, query.eta, query.max_iterations);
  report.agreement = report.analytic_bound.has_value() &&
                     *report.analytic_bound == report.simulated_depth;
  return report;
}

}  // namespace aqnn
