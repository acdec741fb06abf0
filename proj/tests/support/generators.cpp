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

#include "generators.hpp"

#include <cmath>
#include <numbers>

namespace aqnn::testing {

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Complex random_phase(Rng& rng) {
  return std::polar(1.0, uniform(rng, 0.0, 2.0 * std::numbers::pi));
}

std::vector<ComplexVector> random_unit_vectors(Index n, Index d, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<ComplexVector> out;
  for (Index mu = 0; mu < n; ++mu) {
    ComplexVector v(d);
    for (Index k = 0; k < d; ++k) v(k) = Complex(normal(rng), normal(rng));
    out.push_back(v.normalized());
  }
  return out;
}

AlphaMatrix gram_alpha(const std::vector<ComplexVector>& c, double scale) {
  const auto n = static_cast<Index>(c.size());
  ComplexMatrix a = ComplexMatrix::Zero(n, n);
  for (Index mu = 0; mu < n; ++mu) {
    for (Index nu = 0; nu < n; ++nu) {
      if (mu != nu) {
        a(mu, nu) = scale * c[static_cast<std::size_t>(nu)].dot(c[static_cast<std::size_t>(mu)]) - 1.0;
      }
    }
  }
  return AlphaMatrix(a);
}

ChannelSpec random_ideal_spec(Index n, Rng& rng) {
  const auto d = static_cast<Index>(std::uniform_int_distribution<long>(1, n)(rng));
  return ChannelSpec::ideal(gram_alpha(random_unit_vectors(n, d, rng), 1.0));
}

ChannelSpec random_faulty_spec(Index n, Rng& rng, double min_eps) {
  const auto d = static_cast<Index>(std::uniform_int_distribution<long>(1, n)(rng));
  const double eps = uniform(rng, min_eps, 1.0);
  const double leak = eps / static_cast<double>(n - 1);
  const Complex gamma = uniform(rng, 0.0, leak) * random_phase(rng);
  return ChannelSpec::eps_gamma(gram_alpha(random_unit_vectors(n, d, rng), 1.0 - eps), eps, gamma);
}

ChannelSpec random_lambda_spec(Index n, Rng& rng) {
  for (;;) {
    const auto base = random_faulty_spec(n, rng, 0.2);
    Complex lambda = uniform(rng, 0.2, 1.0) * base.epsilon() / static_cast<double>(n - 1) *
                     random_phase(rng);
    while (std::abs(lambda) > 1e-6) {
      auto spec = ChannelSpec::eps_gamma_lambda(base.alpha(), base.epsilon(), base.gamma(), lambda);
      if (is_cptp(spec).cptp) return spec;
      lambda *= 0.7;
    }
  }
}

ChannelSpec random_uniform_ideal(Index n, Rng& rng) {
  const double lo = -static_cast<double>(n) / static_cast<double>(n - 1);
  return ChannelSpec::ideal(AlphaMatrix::uniform(n, uniform(rng, lo, 0.0)));
}

ChannelSpec random_uniform_faulty(Index n, double eps, Rng& rng) {
  const double lo = (eps - static_cast<double>(n)) / static_cast<double>(n - 1);
  const double leak = eps / static_cast<double>(n - 1);
  return ChannelSpec::eps_gamma(AlphaMatrix::uniform(n, uniform(rng, lo, -eps)), eps,
                                uniform(rng, 0.0, leak) * random_phase(rng));
}

ChannelSpec random_boundary_faulty(Index n, Rng& rng) {
  const double eps = uniform(rng, 0.0, 1.0);
  std::vector<Complex> phase;
  for (Index mu = 0; mu < n; ++mu) phase.push_back(random_phase(rng));
  ComplexMatrix a = ComplexMatrix::Zero(n, n);
  for (Index mu = 0; mu < n; ++mu) {
    for (Index nu = 0; nu < n; ++nu) {
      if (mu != nu) {
        a(mu, nu) = (1.0 - eps) * phase[static_cast<std::size_t>(mu)] *
                        std::conj(phase[static_cast<std::size_t>(nu)]) - 1.0;
      }
    }
  }
  const double leak = eps / static_cast<double>(n - 1);
  return ChannelSpec::eps_gamma(AlphaMatrix(a), eps, leak * random_phase(rng));
}

ComplexMatrix haar_unitary(Index m, Rng& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  ComplexMatrix g(m, m);
  for (Index j = 0; j < m; ++j) {
    for (Index i = 0; i < m; ++i) g(i, j) = Complex(normal(rng), normal(rng));
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(m, m);
  for (Index j = 0; j < m; ++j) {
    const Complex r = qr.matrixQR()(j, j);
    if (std::abs(r) > 0.0) q.col(j) *= r / std::abs(r);
  }
  return q;
}

KrausSet remix(const KrausSet& k, Rng& rng) {
  const auto m = static_cast<Index>(k.size());
  const ComplexMatrix v = haar_unitary(m, rng);
  std::vector<ComplexMatrix> out;
  for (Index b = 0; b < m; ++b) {
    ComplexMatrix op = ComplexMatrix::Zero(k.dim(), k.dim());
    for (Index a = 0; a < m; ++a) op += v(b, a) * k[static_cast<std::size_t>(a)];
    out.push_back(std::move(op));
  }
  return KrausSet(std::move(out));
}

std::vector<double> dirichlet(Index n, Rng& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> p(static_cast<std::size_t>(n));
  double total = 0.0;
  for (auto& x : p) total += (x = expo(rng));
  for (auto& x : p) x /= total;
  return p;
}

double relative_entropy_to_diagonal(const DensityMatrix& rho, const std::vector<double>& p) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho.matrix(), Eigen::EigenvaluesOnly);
  double neg_entropy = 0.0;
  for (Index k = 0; k < rho.dim(); ++k) {
    const double l = solver.eigenvalues()(k);
    if (l > 0.0) neg_entropy += l * std::log2(l);
  }
  double cross = 0.0;
  for (Index i = 0; i < rho.dim(); ++i) {
    cross += rho(i, i).real() * std::log2(p[static_cast<std::size_t>(i)]);
  }
  return neg_entropy - cross;
}

std::optional<KrausSet> explicit_sio_decomposition(const ChannelSpec& spec) {
  const Index n = spec.dim();
  const double eps = spec.epsilon();
  if (n < 3 || eps <= 0.0) return std::nullopt;
  const double d = eps / static_cast<double>(n - 1);
  const Complex g = spec.gamma();
  const Complex l = spec.lambda_shift();
  std::vector<ComplexMatrix> ops;

  const auto add_from = [&](const ComplexMatrix& block, auto place) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(block);
    for (Index k = 0; k < block.rows(); ++k) {
      const double value = solver.eigenvalues()(k);
      if (value < -1e-10) return false;
      if (value <= 1e-13) continue;
      ComplexMatrix op = ComplexMatrix::Zero(n, n);
      place(op, std::sqrt(value) * solver.eigenvectors().col(k));
      ops.push_back(std::move(op));
    }
    return true;
  };

  // Populations: J restricted to |mu mu>.
  ComplexMatrix pop(n, n);
  for (Index mu = 0; mu < n; ++mu) {
    for (Index nu = 0; nu < n; ++nu) pop(mu, nu) = mu == nu ? Complex(1.0 - eps) : 1.0 + spec.alpha()(mu, nu);
  }
  if (!add_from(pop, [n](ComplexMatrix& op, const ComplexVector& v) {
        for (Index mu = 0; mu < n; ++mu) op(mu, mu) = v(mu);
      })) {
    return std::nullopt;
  }

  // Swap pairs. A Choi index (i, a) contributes K(a, i). Pairs touching the
  // cyclic set {(mu, mu+1)} hand the rank-one part to the swap operator and
  // leave d - |gamma|^2/d on the cyclic index.
  const auto cyclic = [n](Index i, Index a) { return a == (i + 1) % n; };
  std::vector<double> cyclic_diag(static_cast<std::size_t>(n), d);
  for (Index mu = 0; mu < n; ++mu) {
    for (Index nu = mu + 1; nu < n; ++nu) {
      // J[(mu,nu),(mu,nu)] = J[(nu,mu),(nu,mu)] = d, J[(mu,nu),(nu,mu)] = gamma.
      if (cyclic(mu, nu) || cyclic(nu, mu)) {
        ComplexMatrix op = ComplexMatrix::Zero(n, n);
        if (cyclic(mu, nu)) {
          op(nu, mu) = g / std::sqrt(d);
          op(mu, nu) = std::sqrt(d);
          cyclic_diag[static_cast<std::size_t>(mu)] -= std::norm(g) / d;
        } else {
          op(nu, mu) = std::sqrt(d);
          op(mu, nu) = std::conj(g) / std::sqrt(d);
          cyclic_diag[static_cast<std::size_t>(nu)] -= std::norm(g) / d;
        }
        ops.push_back(std::move(op));
        continue;
      }
      ComplexMatrix block(2, 2);
      block << d, g, std::conj(g), d;
      add_from(block, [mu, nu](ComplexMatrix& op, const ComplexVector& v) {
        op(nu, mu) = v(0);
        op(mu, nu) = v(1);
      });
    }
  }

  // Cyclic block on (mu, mu+1): lambda couples every pair mu < nu.
  ComplexMatrix cyc = ComplexMatrix::Zero(n, n);
  for (Index mu = 0; mu < n; ++mu) {
    cyc(mu, mu) = cyclic_diag[static_cast<std::size_t>(mu)];
    for (Index nu = mu + 1; nu < n; ++nu) {
      cyc(mu, nu) = l;
      cyc(nu, mu) = std::conj(l);
    }
  }
  if (!add_from(cyc, [n](ComplexMatrix& op, const ComplexVector& v) {
        for (Index mu = 0; mu < n; ++mu) op((mu + 1) % n, mu) = v(mu);
      })) {
    return std::nullopt;
  }
  return KrausSet(std::move(ops));
}

KrausSet activating_toy_channel() {
  const double s = 1.0 / std::sqrt(2.0);
  ComplexMatrix k0 = ComplexMatrix::Zero(2, 2);
  ComplexMatrix k1 = ComplexMatrix::Zero(2, 2);
  k0 << s, s, 0.0, 0.0;
  k1 << 0.0, 0.0, s, -s;
  return KrausSet({k0, k1});
}

}  // namespace aqnn::testing
