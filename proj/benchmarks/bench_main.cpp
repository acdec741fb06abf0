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

#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>

#include "aqnn/channels.hpp"
#include "aqnn/classify.hpp"
#include "aqnn/coherence.hpp"
#include "aqnn/diamond.hpp"
#include "aqnn/linalg.hpp"
#include "aqnn/states.hpp"

using namespace aqnn;

namespace {

ChannelSpec faulty(Index n, double eps) {
  const double alpha = -0.5 * (1.0 - eps);
  return ChannelSpec::eps_gamma(AlphaMatrix::uniform(n, alpha), eps,
                                Complex(0.5 * eps / static_cast<double>(n - 1), 0.0));
}

ChannelSpec ideal(Index n) { return ChannelSpec::ideal(AlphaMatrix::uniform(n, -0.5)); }

void BM_HermEig(benchmark::State& state) {
  const Index n = state.range(0);
  const ComplexMatrix m = random_density(n, n, 7).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(herm_eig(m));
}
BENCHMARK(BM_HermEig)->Arg(4)->Arg(16)->Arg(64);

void BM_ChoiAndCptp(benchmark::State& state) {
  const auto spec = faulty(state.range(0), 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(is_cptp(choi(spec)));
}
BENCHMARK(BM_ChoiAndCptp)->Arg(3)->Arg(6)->Arg(10);

void BM_DiamondInteriorPoint(benchmark::State& state) {
  const Index n = state.range(0);
  const auto a = ideal(n);
  const auto b = faulty(n, 0.2);
  for (auto _ : state)
    benchmark::DoNotOptimize(diamond_distance(a, b, DiamondMethod::InteriorPoint));
}
BENCHMARK(BM_DiamondInteriorPoint)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_DiamondAnalytic(benchmark::State& state) {
  const Index n = state.range(0);
  const auto a = ideal(n);
  const auto b = faulty(n, 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(diamond_analytic_diagonal(a, b));
}
BENCHMARK(BM_DiamondAnalytic)->Arg(3)->Arg(10);

void BM_CertificateSearch(benchmark::State& state) {
  const auto spec = ChannelSpec::eps_gamma_lambda(AlphaMatrix::uniform(3, -0.6), 0.3,
                                                  Complex(0.05, 0.0), Complex(0.05, 0.0));
  const auto canonical = kraus_from_choi(choi(spec));
  SearchOptions options;
  options.budget = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        search_incoherent_decomposition(canonical, IncoherenceMode::SIO, options));
}
BENCHMARK(BM_CertificateSearch)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_SimulatedDepth(benchmark::State& state) {
  const Index n = state.range(0);
  const double d = 0.5 * static_cast<double>(n - 1);
  const auto spec =
      ChannelSpec::ideal(AlphaMatrix::uniform(n, -d / static_cast<double>(n - 1)));
  for (auto _ : state) benchmark::DoNotOptimize(simulated_depth(spec, 0.01));
}
BENCHMARK(BM_SimulatedDepth)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
