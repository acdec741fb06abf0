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

#include <doctest.h>

#include <cmath>

#include "../support/generators.hpp"
#include "aqnn/classify.hpp"

using namespace aqnn;
using namespace aqnn::testing;

namespace {

ErrorCode code_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an aqnn::Error");
  return ErrorCode::ParseError;
}

KrausSet hadamard() {
  ComplexMatrix h(2, 2);
  h << 1.0, 1.0, 1.0, -1.0;
  return KrausSet({h / std::sqrt(2.0)});
}

KrausSet full_dephasing(Index n) {
  std::vector<ComplexMatrix> ops;
  for (Index i = 0; i < n; ++i) ops.push_back(matrix_unit(n, i, i));
  return KrausSet(std::move(ops));
}

double choi_gap(const KrausSet& a, const KrausSet& b) {
  return (choi(a).matrix() - choi(b).matrix()).cwiseAbs().maxCoeff();
}

ChannelSpec lambda_example() {
  return ChannelSpec::eps_gamma_lambda(AlphaMatrix::uniform(3, -0.6), 0.3, 0.05, 0.05);
}

}  // namespace

TEST_CASE("check_mio examples") {
  CHECK(check_mio(ChannelSpec::ideal(AlphaMatrix::uniform(3, -0.7))).holds);
  CHECK(check_mio(ChannelSpec::eps_gamma(AlphaMatrix::uniform(3, -0.5), 0.2, 0.05)).holds);
  const auto h = check_mio(hadamard());
  CHECK_FALSE(h.holds);
  CHECK(h.residual == doctest::Approx(0.5));
  CHECK(code_of([] { check_mio(ChannelSpec::ideal(AlphaMatrix::uniform(2, -2.5))); }) ==
        ErrorCode::NotCPTP);
}

TEST_CASE("check_gio examples") {
  Rng rng(1);
  for (int k = 0; k < 30; ++k) CHECK(check_gio(random_ideal_spec(2 + k % 5, rng)).holds);
  const auto faulty = check_gio(ChannelSpec::eps_gamma(AlphaMatrix::uniform(2, -0.5), 0.1, 0.0));
  CHECK_FALSE(faulty.holds);
  CHECK(faulty.residual == doctest::Approx(0.1));
  CHECK(check_gio(full_dephasing(4)).holds);
  CHECK_FALSE(check_gio(hadamard()).holds);
}

TEST_CASE("check_activation examples") {
  CHECK_FALSE(check_activation(ChannelSpec::ideal(AlphaMatrix::uniform(3, -0.3))).holds);
  CHECK_FALSE(check_activation(ChannelSpec::eps_gamma(AlphaMatrix::uniform(3, -0.5), 0.2, 0.05)).holds);
  const auto toy = activating_toy_channel();
  CHECK(check_mio(toy).holds);
  const auto act = check_activation(toy);
  CHECK(act.holds);
  CHECK(act.residual == doctest::Approx(0.5));
}

TEST_CASE("structural checks") {
  CHECK(sio_structural_check(full_dephasing(3)).all);
  const auto canonical_faulty =
      kraus_from_choi(choi(ChannelSpec::eps_gamma(AlphaMatrix::uniform(3, -0.5), 0.2, 0.05)));
  const auto verdict = sio_structural_check(canonical_faulty);
  CHECK(verdict.all);
  CHECK(verdict.per_operator.size() == canonical_faulty.size());

  const auto canonical_lambda = kraus_from_choi(choi(lambda_example()));
  CHECK_FALSE(sio_structural_check(canonical_lambda).all);

  CHECK_FALSE(sio_structural_check(hadamard()).all);
  CHECK_FALSE(io_structural_check(hadamard()).all);

  // A column-only pattern passes IO but not SIO.
  const auto toy = activating_toy_channel();
  CHECK(io_structural_check(toy).all);
  CHECK_FALSE(sio_structural_check(toy).all);
  ComplexMatrix k0 = ComplexMatrix::Zero(2, 2);
  ComplexMatrix k1 = ComplexMatrix::Zero(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  k0 << s, s, 0.0, 0.0;
  k1 << s, -s, 0.0, 0.0;
  const KrausSet reset({k0, k1});
  CHECK(io_structural_check(reset).all);
  CHECK_FALSE(sio_structural_check(reset).all);
  CHECK(sio_structural_check(reset).per_operator == std::vector<bool>{false, false});
}

TEST_CASE("search returns an already certified input unchanged") {
  const auto k = full_dephasing(3);
  const auto out = search_incoherent_decomposition(k, IncoherenceMode::SIO);
  REQUIRE(out.certificate.has_value());
  CHECK(out.iterations_used == 0);
  CHECK(choi_gap(*out.certificate, k) == 0.0);
}

TEST_CASE("search recovers a diagonal decomposition of a remixed GIO") {
  Rng rng(2);
  for (int k = 0; k < 10; ++k) {
    const auto canonical = kraus_from_choi(choi(random_ideal_spec(2 + k % 3, rng)));
    const auto mixed = remix(canonical, rng);
    const auto out = search_incoherent_decomposition(mixed, IncoherenceMode::SIO,
                                                     {.budget = 10'000, .seed = 3});
    REQUIRE(out.certificate.has_value());
    CHECK(sio_structural_check(*out.certificate).all);
    CHECK(choi_gap(*out.certificate, canonical) <= 1e-8);
    for (const auto& op : out.certificate->operators()) {
      ComplexMatrix off = op;
      off.diagonal().setZero();
      CHECK(off.cwiseAbs().maxCoeff() <= 1e-10);
    }
  }
}

TEST_CASE("search recovers SIO form of remixed faulty channels") {
  Rng rng(4);
  int found = 0;
  const int total = 8;
  for (int k = 0; k < total; ++k) {
    const auto canonical = kraus_from_choi(choi(random_faulty_spec(2 + k % 2, rng)));
    const auto mixed = remix(canonical, rng);
    CHECK_FALSE(sio_structural_check(mixed).all);
    const auto out = search_incoherent_decomposition(mixed, IncoherenceMode::SIO,
                                                     {.budget = 10'000, .seed = 5});
    if (!out.certificate) continue;
    ++found;
    CHECK(sio_structural_check(*out.certificate).all);
    CHECK(choi_gap(*out.certificate, canonical) <= 1e-8);
  }
  // A heuristic: most, not necessarily all, remixes are recovered.
  CHECK(found >= total / 2);
}

TEST_CASE("search is reproducible for a fixed seed") {
  Rng rng(6);
  const auto mixed = remix(kraus_from_choi(choi(random_ideal_spec(3, rng))), rng);
  const auto a = search_incoherent_decomposition(mixed, IncoherenceMode::SIO, {.seed = 9});
  const auto b = search_incoherent_decomposition(mixed, IncoherenceMode::SIO, {.seed = 9});
  CHECK(a.iterations_used == b.iterations_used);
  CHECK(a.best_violation == b.best_violation);
}

TEST_CASE("lambda channel: explicit weighted-permutation decomposition") {
  const auto spec = lambda_example();
  REQUIRE(is_cptp(spec).cptp);
  CHECK(check_mio(spec).holds);
  const auto explicit_k = explicit_sio_decomposition(spec);
  REQUIRE(explicit_k.has_value());
  CHECK(sio_structural_check(*explicit_k).all);
  CHECK((choi(*explicit_k).matrix() - choi(spec).matrix()).cwiseAbs().maxCoeff() <= 1e-12);

  Rng rng(7);
  int decomposed = 0;
  for (int k = 0; k < 50; ++k) {
    const auto s = random_lambda_spec(3, rng);
    const auto dec = explicit_sio_decomposition(s);
    REQUIRE(dec.has_value());
    CHECK(sio_structural_check(*dec).all);
    CHECK((choi(*dec).matrix() - choi(s).matrix()).cwiseAbs().maxCoeff() <= 1e-10);
    ++decomposed;
  }
  CHECK(decomposed == 50);
}

TEST_CASE("lambda channel: any certificate returned by the search is valid") {
  const auto spec = lambda_example();
  const auto canonical = kraus_from_choi(choi(spec));
  for (auto mode : {IncoherenceMode::SIO, IncoherenceMode::IO}) {
    const auto out = search_incoherent_decomposition(canonical, mode, {.budget = 3000});
    CHECK(out.iterations_used <= 3000);
    if (out.certificate) {
      const auto check = mode == IncoherenceMode::SIO ? sio_structural_check(*out.certificate)
                                                      : io_structural_check(*out.certificate);
      CHECK(check.all);
      CHECK(choi_gap(*out.certificate, canonical) <= 1e-8);
    } else {
      CHECK(out.iterations_used == 3000);
      CHECK(out.best_violation > 0.0);
    }
  }
}

TEST_CASE("mio and activation are decomposition independent") {
  Rng rng(8);
  std::vector<KrausSet> sets;
  for (int k = 0; k < 10; ++k) {
    sets.push_back(kraus_from_choi(choi(random_faulty_spec(2 + k % 3, rng))));
    sets.push_back(kraus_from_choi(choi(random_lambda_spec(3 + k % 2, rng))));
  }
  sets.push_back(activating_toy_channel());
  sets.push_back(hadamard());
  for (const auto& k : sets) {
    const auto other = remix(k, rng);
    CHECK(check_mio(k).holds == check_mio(other).holds);
    CHECK(check_activation(k).holds == check_activation(other).holds);
    CHECK(check_gio(k).holds == check_gio(other).holds);
    CHECK(check_mio(k).holds == check_mio(choi(k)).holds);
  }
}

TEST_CASE("classification of the three families") {
  Rng rng(9);
  for (int k = 0; k < 8; ++k) {
    const auto ideal = classify(random_ideal_spec(2 + k % 3, rng));
    CHECK(ideal.is_gio);
    CHECK(ideal.is_ncg);
    CHECK(ideal.sio_certificate.has_value());
    CHECK(ideal.io_certificate.has_value());
    CHECK_FALSE(ideal.activates_coherence);

    const auto faulty = classify(random_faulty_spec(2 + k % 3, rng));
    CHECK_FALSE(faulty.is_gio);
    CHECK(faulty.is_ncg);
    CHECK(faulty.sio_certificate.has_value());
    CHECK_FALSE(faulty.activates_coherence);
    CHECK(faulty.search_iterations == 0);

    const auto lam = classify(random_lambda_spec(3, rng), {.budget = 500});
    CHECK(lam.is_ncg);
    CHECK_FALSE(lam.is_gio);
    CHECK(lam.residuals.contains("sio_search_violation"));
  }
}

TEST_CASE("hierarchy consistency") {
  Rng rng(10);
  for (int k = 0; k < 60; ++k) {
    const Index n = 2 + k % 4;
    const auto spec = k % 3 == 0 ? random_ideal_spec(n, rng)
                      : k % 3 == 1 ? random_faulty_spec(n, rng)
                                   : random_lambda_spec(std::max<Index>(n, 3), rng);
    const auto canonical = kraus_from_choi(choi(spec));
    const bool gio = check_gio(spec).holds;
    const bool sio = sio_structural_check(canonical).all;
    const bool mio = check_mio(spec).holds;
    if (gio) CHECK(sio);
    if (sio) CHECK(io_structural_check(canonical).all);
    if (sio) CHECK(mio);
  }
}
