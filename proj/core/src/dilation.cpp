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

#include "aqnn/dilation.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "aqnn/states.hpp"

namespace aqnn {

namespace {

// Fills the columns of `u` not listed in `fixed` with an orthonormal
// completion, taken from canonical basis vectors in index order.
void complete_unitary(ComplexMatrix& u, const std::vector<bool>& fixed) {
  const Index dim = u.rows();
  std::vector<Index> basis;
  for (Index c = 0; c < dim; ++c) {
    if (fixed[static_cast<std::size_t>(c)]) basis.push_back(c);
  }
  Index candidate = 0;
  for (Index c = 0; c < dim; ++c) {
    if (fixed[static_cast<std::size_t>(c)]) continue;
    while (candidate < dim) {
      ComplexVector v = ComplexVector::Unit(dim, candidate++);
      for (int pass = 0; pass < 2; ++pass) {
        for (Index b : basis) v -= u.col(b) * u.col(b).dot(v);
      }
      const double norm = v.norm();
      if (norm > 1e-6) {
        u.col(c) = v / norm;
        basis.push_back(c);
        break;
      }
    }
  }
}

DilationUnitary from_isometry(const std::vector<ComplexMatrix>& ops) {
  const Index n = ops.front().rows();
  const auto m = static_cast<Index>(ops.size());
  ComplexMatrix u = ComplexMatrix::Zero(n * m, n * m);
  std::vector<bool> fixed(static_cast<std::size_t>(n * m), false);
  for (Index j = 0; j < n; ++j) {
    for (Index a = 0; a < m; ++a) {
      for (Index i = 0; i < n; ++i) u(i * m + a, j * m) = ops[static_cast<std::size_t>(a)](i, j);
    }
    fixed[static_cast<std::size_t>(j * m)] = true;
  }
  complete_unitary(u, fixed);
  return DilationUnitary(n, m, std::move(u), 0);
}

// Rotation in span{e_0, c} taking e_0 to the unit vector c.
ComplexMatrix rotation_to(const ComplexVector& c) {
  const Index d = c.size();
  ComplexMatrix r = ComplexMatrix::Identity(d, d);
  const Complex a = c(0);
  ComplexVector rest = c;
  rest(0) = 0.0;
  const double b = rest.norm();
  if (b < 1e-15) {
    r(0, 0) = a / std::abs(a);
    return r;
  }
  const ComplexVector u = rest / b;
  const ComplexVector e0 = ComplexVector::Unit(d, 0);
  r += (a - 1.0) * e0 * e0.adjoint() + (std::conj(a) - 1.0) * u * u.adjoint() +
       b * (u * e0.adjoint() - e0 * u.adjoint());
  return r;
}

}  // namespace

ComplexMatrix GramVectors::gram() const {
  ComplexMatrix g(dim, dim);
  for (Index nu = 0; nu < dim; ++nu) {
    for (Index mu = 0; mu < dim; ++mu) {
      g(mu, nu) = vectors[static_cast<std::size_t>(mu)].dot(vectors[static_cast<std::size_t>(nu)]);
    }
  }
  return g;
}

GramVectors gram_factorize(const AlphaMatrix& alpha) {
  const Index n = alpha.dim();
  const ComplexMatrix g =
      ComplexMatrix::Ones(n, n) + alpha.matrix().transpose();
  const auto eig = herm_eig(g);
  const double lowest = eig.eigenvalues(n - 1);
  if (lowest < -tol::psd) {
    throw Error(ErrorCode::NotPSD, "Gram matrix has negative eigenvalue " +
                                       std::to_string(lowest) + "; channel is not CPTP");
  }
  Index rank = 0;
  while (rank < n && eig.eigenvalues(rank) >= 1e-10) ++rank;

  // Column mu of sqrt(L) V^dagger, restricted to the kept eigenvalues.
  GramVectors out{n, rank, {}};
  for (Index mu = 0; mu < n; ++mu) {
    ComplexVector c(rank);
    for (Index k = 0; k < rank; ++k) {
      c(k) = std::sqrt(eig.eigenvalues(k)) * std::conj(eig.eigenvectors(mu, k));
    }
    out.vectors.push_back(std::move(c));
  }
  return out;
}

DilationUnitary::DilationUnitary(Index system_dim, Index ancilla_dim,
                                 ComplexMatrix matrix, Index ancilla_start)
    : n_(system_dim), d_(ancilla_dim), u_(std::move(matrix)), start_(ancilla_start) {
  if (n_ < 1 || d_ < 1 || u_.rows() != n_ * d_ || u_.cols() != n_ * d_) {
    throw Error(ErrorCode::DimensionMismatch, "dilation unitary must be (N d_A) x (N d_A)");
  }
  if (start_ < 0 || start_ >= d_) {
    throw Error(ErrorCode::DimensionMismatch, "ancilla start index out of range");
  }
  if (!all_finite(u_)) throw Error(ErrorCode::NonFinite, "dilation unitary has NaN/Inf");
  const double residual = unitarity_residual();
  if (residual > 1e-9) {
    throw Error(ErrorCode::NotUnitary,
                "U^dagger U deviates from identity by " + std::to_string(residual));
  }
}

double DilationUnitary::unitarity_residual() const {
  return (u_.adjoint() * u_ - ComplexMatrix::Identity(u_.rows(), u_.cols()))
      .cwiseAbs()
      .maxCoeff();
}

ComplexMatrix DilationUnitary::output(const ComplexMatrix& rho) const {
  if (rho.rows() != n_ || rho.cols() != n_) {
    throw Error(ErrorCode::DimensionMismatch, "state dimension differs from dilation");
  }
  // Only the columns (j, a_s) of U are touched by rho (x) |a_s><a_s|.
  ComplexMatrix iso(n_ * d_, n_);
  for (Index j = 0; j < n_; ++j) iso.col(j) = u_.col(j * d_ + start_);
  const ComplexMatrix full = iso * rho * iso.adjoint();
  return partial_trace(full, Keep::First, {n_, d_});
}

DilationUnitary build_gio_dilation(const ChannelSpec& spec) {
  if (spec.variant() != Variant::Ideal) {
    throw Error(ErrorCode::WrongVariant, "GIO dilation needs the ideal variant");
  }
  require_cptp(spec);
  const auto gram = gram_factorize(spec.alpha());
  const Index n = spec.dim();
  const Index d = gram.ancilla_dim;
  ComplexMatrix u = ComplexMatrix::Zero(n * d, n * d);
  for (Index mu = 0; mu < n; ++mu) {
    const ComplexVector c = gram.vectors[static_cast<std::size_t>(mu)].normalized();
    u.block(mu * d, mu * d, d, d) = rotation_to(c);
  }
  return DilationUnitary(n, d, std::move(u), 0);
}

DilationUnitary build_sio_dilation(const ChannelSpec& spec) {
  if (spec.variant() != Variant::FaultyEpsGamma) {
    throw Error(ErrorCode::WrongVariant, "SIO dilation needs the eps_gamma variant");
  }
  require_cptp(spec);
  const Index n = spec.dim();
  const double eps = spec.epsilon();
  const double leak = eps / static_cast<double>(n - 1);
  constexpr double tol = 1e-9;

  // k = 0: c_mu = sqrt(1 - eps) exp(i phi_mu) must reproduce every 1 + alpha_munu.
  ComplexVector c0(n);
  for (Index mu = 0; mu < n; ++mu) {
    c0(mu) = std::polar(std::sqrt(1.0 - eps), std::arg(1.0 + spec.alpha()(mu, 0)));
  }
  for (Index mu = 0; mu < n; ++mu) {
    for (Index nu = mu + 1; nu < n; ++nu) {
      const Complex want = 1.0 + spec.alpha()(mu, nu);
      const Complex got = c0(mu) * std::conj(c0(nu));
      if (std::abs(got - want) > tol) {
        std::ostringstream msg;
        msg << "c0_" << mu << " conj(c0_" << nu << ") = " << got
            << " cannot equal 1 + alpha = " << want
            << " (needs |1 + alpha| = 1 - eps with consistent phases);"
               " use the generic dilation";
        throw Error(ErrorCode::ConstraintInfeasible, msg.str());
      }
    }
  }
  const Complex g = spec.gamma();
  if (std::abs(std::abs(g) - leak) > tol) {
    std::ostringstream msg;
    msg << "c_p conj(c_q) = gamma forces |gamma| = eps/(N-1) = " << leak << ", got |gamma| = "
        << std::abs(g) << "; use the generic dilation";
    throw Error(ErrorCode::ConstraintInfeasible, msg.str());
  }

  std::vector<ComplexMatrix> ops;
  ops.emplace_back(c0.asDiagonal());
  const Complex cp = std::polar(std::sqrt(leak), std::arg(g));
  const Complex cq = std::sqrt(leak);
  for (Index p = 0; p < n; ++p) {
    for (Index q = p + 1; q < n; ++q) {
      ComplexMatrix k = ComplexMatrix::Zero(n, n);
      k(q, p) = cp;
      k(p, q) = cq;
      ops.push_back(std::move(k));
    }
  }
  return from_isometry(ops);
}

DilationUnitary build_generic_dilation(const KrausSet& kraus) {
  return from_isometry(kraus.operators());
}

double verify_dilation(const DilationUnitary& u, const ChannelSpec& spec, int trials,
                       std::uint64_t seed) {
  if (u.system_dim() != spec.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "dilation and channel dimensions differ");
  }
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const auto rho = random_density(spec.dim(), spec.dim(), seed + static_cast<std::uint64_t>(t));
    const ComplexMatrix gap = u.output(rho.matrix()) - apply_linear(spec, rho.matrix());
    worst = std::max(worst, trace_norm(0.5 * (gap + gap.adjoint())));
  }
  return worst;
}

}  // namespace aqnn
