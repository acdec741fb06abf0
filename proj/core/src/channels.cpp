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

#include "aqnn/channels.hpp"

#include <cmath>
#include <sstream>
#include <string>

namespace aqnn {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Trace-preservation residual max |Tr_out J - 1| from a list of entries.
double tp_residual(Index n, std::span<const SparseEntry> entries) {
  ComplexMatrix t = ComplexMatrix::Zero(n, n);
  for (const auto& e : entries) {
    if (e.row % n == e.col % n) t(e.row / n, e.col / n) += e.value;
  }
  return (t - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
}

}  // namespace

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::Ideal: return "ideal";
    case Variant::FaultyEpsGamma: return "eps_gamma";
    case Variant::FaultyEpsGammaLambda: return "eps_gamma_lambda";
  }
  return "unknown";
}

AlphaMatrix::AlphaMatrix(ComplexMatrix full) : m_(std::move(full)) {
  if (m_.rows() != m_.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "alpha matrix must be square");
  }
  if (m_.rows() < 2) throw Error(ErrorCode::BadDimension, "alpha matrix needs N >= 2");
  if (!all_finite(m_)) throw Error(ErrorCode::NonFinite, "alpha matrix has NaN/Inf");
  const Index n = m_.rows();
  for (Index mu = 0; mu < n; ++mu) {
    if (std::abs(m_(mu, mu)) > 1e-14) {
      throw Error(ErrorCode::InvalidSpec, "alpha_mumu must vanish (mu = " +
                                              std::to_string(mu) + ")");
    }
    m_(mu, mu) = 0.0;
  }
  bool lower_empty = true;
  for (Index nu = 0; nu < n; ++nu) {
    for (Index mu = nu + 1; mu < n; ++mu) lower_empty = lower_empty && m_(mu, nu) == Complex(0.0);
  }
  for (Index mu = 0; mu < n; ++mu) {
    for (Index nu = mu + 1; nu < n; ++nu) {
      if (!lower_empty && std::abs(m_(nu, mu) - std::conj(m_(mu, nu))) > tol::hermitian) {
        throw Error(ErrorCode::InvalidSpec,
                    "alpha(nu, mu) must equal conj(alpha(mu, nu)) at (" +
                        std::to_string(mu) + ", " + std::to_string(nu) + ")");
      }
      m_(nu, mu) = std::conj(m_(mu, nu));
    }
  }
}

AlphaMatrix AlphaMatrix::uniform(Index dim, Complex alpha) {
  if (dim < 2) throw Error(ErrorCode::BadDimension, "alpha matrix needs N >= 2");
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  for (Index mu = 0; mu < dim; ++mu) {
    for (Index nu = mu + 1; nu < dim; ++nu) m(mu, nu) = alpha;
  }
  return AlphaMatrix(std::move(m));
}

std::optional<Complex> AlphaMatrix::uniform_value(double tol) const {
  const Complex first = m_(0, 1);
  for (Index mu = 0; mu < dim(); ++mu) {
    for (Index nu = mu + 1; nu < dim(); ++nu) {
      if (std::abs(m_(mu, nu) - first) > tol) return std::nullopt;
    }
  }
  return first;
}

ChannelSpec::ChannelSpec(Variant variant, AlphaMatrix alpha, double epsilon,
                         Complex gamma, Complex lambda_shift)
    : variant_(variant),
      alpha_(std::move(alpha)),
      epsilon_(epsilon),
      gamma_(gamma),
      lambda_(lambda_shift) {
  if (!std::isfinite(epsilon_) || !finite(gamma_) || !finite(lambda_)) {
    throw Error(ErrorCode::NonFinite, "channel parameters must be finite");
  }
  if (epsilon_ < 0.0 || epsilon_ > 1.0) {
    throw Error(ErrorCode::InvalidSpec, "epsilon must lie in [0, 1]");
  }
  if (variant_ == Variant::Ideal &&
      (epsilon_ != 0.0 || gamma_ != Complex(0.0) || lambda_ != Complex(0.0))) {
    throw Error(ErrorCode::InvalidSpec, "ideal variant requires epsilon = gamma = lambda = 0");
  }
  if (variant_ == Variant::FaultyEpsGamma && lambda_ != Complex(0.0)) {
    throw Error(ErrorCode::InvalidSpec, "eps_gamma variant requires lambda = 0");
  }
}

ChannelSpec ChannelSpec::ideal(AlphaMatrix alpha) {
  return ChannelSpec(Variant::Ideal, std::move(alpha));
}

ChannelSpec ChannelSpec::eps_gamma(AlphaMatrix alpha, double epsilon, Complex gamma) {
  return ChannelSpec(Variant::FaultyEpsGamma, std::move(alpha), epsilon, gamma);
}

ChannelSpec ChannelSpec::eps_gamma_lambda(AlphaMatrix alpha, double epsilon,
                                          Complex gamma, Complex lambda_shift) {
  return ChannelSpec(Variant::FaultyEpsGammaLambda, std::move(alpha), epsilon,
                     gamma, lambda_shift);
}

ChoiState::ChoiState(Index dim_in, ComplexMatrix matrix)
    : dim_(dim_in), j_(std::move(matrix)) {
  if (dim_ < 1 || j_.rows() != dim_ * dim_ || j_.cols() != dim_ * dim_) {
    throw Error(ErrorCode::DimensionMismatch, "Choi matrix must be N^2 x N^2");
  }
  require_hermitian(j_, "ChoiState");
}

KrausSet::KrausSet(std::vector<ComplexMatrix> operators) : ops_(std::move(operators)) {
  if (ops_.empty()) throw Error(ErrorCode::InvalidKraus, "empty Kraus set");
  const Index n = ops_.front().rows();
  for (const auto& k : ops_) {
    if (k.rows() != n || k.cols() != n) {
      throw Error(ErrorCode::DimensionMismatch, "Kraus operators must all be N x N");
    }
    if (!all_finite(k)) throw Error(ErrorCode::NonFinite, "Kraus operator has NaN/Inf");
  }
  const double residual = completeness_residual();
  if (residual > 1e-8) {
    throw Error(ErrorCode::InvalidKraus,
                "sum K^dagger K deviates from identity by " + std::to_string(residual));
  }
}

ComplexMatrix KrausSet::apply(const ComplexMatrix& rho) const {
  ComplexMatrix out = ComplexMatrix::Zero(dim(), dim());
  for (const auto& k : ops_) out.noalias() += k * rho * k.adjoint();
  return out;
}

double KrausSet::completeness_residual() const {
  ComplexMatrix s = ComplexMatrix::Zero(dim(), dim());
  for (const auto& k : ops_) s.noalias() += k.adjoint() * k;
  return (s - ComplexMatrix::Identity(dim(), dim())).cwiseAbs().maxCoeff();
}

ComplexMatrix apply_linear(const ChannelSpec& spec, const ComplexMatrix& x) {
  const Index n = spec.dim();
  if (x.rows() != n || x.cols() != n) {
    throw Error(ErrorCode::DimensionMismatch,
                "channel of dimension " + std::to_string(n) + " applied to " +
                    std::to_string(x.rows()) + "x" + std::to_string(x.cols()) + " input");
  }
  const auto& alpha = spec.alpha();
  ComplexMatrix out(n, n);
  for (Index nu = 0; nu < n; ++nu) {
    for (Index mu = 0; mu < n; ++mu) {
      out(mu, nu) = mu == nu ? x(mu, mu) : (1.0 + alpha(mu, nu)) * x(mu, nu);
    }
  }
  if (spec.variant() == Variant::Ideal) return out;

  const double eps = spec.epsilon();
  const double leak = eps / static_cast<double>(n - 1);
  const Complex total = x.trace();
  for (Index mu = 0; mu < n; ++mu) {
    out(mu, mu) = (1.0 - eps) * x(mu, mu) + leak * (total - x(mu, mu));
  }
  const Complex g = spec.gamma();
  for (Index mu = 0; mu < n; ++mu) {
    for (Index nu = mu + 1; nu < n; ++nu) {
      out(mu, nu) += std::conj(g) * x(nu, mu);
      out(nu, mu) += g * x(mu, nu);
    }
  }
  if (spec.variant() == Variant::FaultyEpsGamma) return out;

  const Complex l = spec.lambda_shift();
  for (Index mu = 0; mu < n; ++mu) {
    for (Index nu = mu + 1; nu < n; ++nu) {
      const Index a = (mu + 1) % n;
      const Index b = (nu + 1) % n;
      out(a, b) += l * x(mu, nu);
      out(b, a) += std::conj(l) * x(nu, mu);
    }
  }
  return out;
}

void require_cptp(const ChannelSpec& spec) {
  const auto verdict = is_cptp(spec);
  if (!verdict.cptp) {
    std::ostringstream msg;
    msg << "channel is not CPTP (min Choi eigenvalue " << verdict.min_eigenvalue
        << ", TP residual " << verdict.tp_residual << ")";
    throw Error(ErrorCode::NotCPTP, msg.str());
  }
}

DensityMatrix apply(const ChannelSpec& spec, const DensityMatrix& rho, Safety safety) {
  if (rho.dim() != spec.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "state and channel dimensions differ");
  }
  if (safety == Safety::Checked) require_cptp(spec);
  return DensityMatrix::trusted(apply_linear(spec, rho.matrix()));
}

DensityMatrix iterate(const ChannelSpec& spec, const DensityMatrix& rho, int r,
                      Safety safety) {
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "iteration count must be positive");
  if (rho.dim() != spec.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "state and channel dimensions differ");
  }
  if (safety == Safety::Checked) require_cptp(spec);
  ComplexMatrix x = rho.matrix();
  for (int step = 0; step < r; ++step) x = apply_linear(spec, x);
  return DensityMatrix::trusted(std::move(x));
}

ComplexMatrix apply_extended_linear(const LinearMap& map, Index dim,
                                    const ComplexMatrix& psi, Index ancilla_dim) {
  if (ancilla_dim < 1 || psi.rows() != dim * ancilla_dim || psi.cols() != psi.rows()) {
    throw Error(ErrorCode::DimensionMismatch,
                "extended input must be (N d_A) x (N d_A) with N = " + std::to_string(dim));
  }
  ComplexMatrix out(psi.rows(), psi.cols());
  ComplexMatrix slice(dim, dim);
  for (Index a = 0; a < ancilla_dim; ++a) {
    for (Index b = 0; b < ancilla_dim; ++b) {
      for (Index j = 0; j < dim; ++j) {
        for (Index i = 0; i < dim; ++i) slice(i, j) = psi(i * ancilla_dim + a, j * ancilla_dim + b);
      }
      const ComplexMatrix mapped = map(slice);
      for (Index j = 0; j < dim; ++j) {
        for (Index i = 0; i < dim; ++i) out(i * ancilla_dim + a, j * ancilla_dim + b) = mapped(i, j);
      }
    }
  }
  return out;
}

DensityMatrix apply_extended(const ChannelSpec& spec, const DensityMatrix& psi,
                             Index ancilla_dim, Safety safety) {
  if (safety == Safety::Checked) require_cptp(spec);
  return DensityMatrix::trusted(apply_extended_linear(
      [&spec](const ComplexMatrix& x) { return apply_linear(spec, x); }, spec.dim(),
      psi.matrix(), ancilla_dim));
}

std::vector<SparseEntry> choi_entries(const ChannelSpec& spec) {
  const Index n = spec.dim();
  const auto idx = [n](Index i, Index a) { return i * n + a; };
  const auto& alpha = spec.alpha();
  std::vector<SparseEntry> out;
  const bool faulty = spec.variant() != Variant::Ideal;
  const double eps = spec.epsilon();
  const double leak = eps / static_cast<double>(n - 1);

  for (Index mu = 0; mu < n; ++mu) {
    const double pop = faulty ? 1.0 - eps : 1.0;
    if (pop != 0.0) out.push_back({idx(mu, mu), idx(mu, mu), pop});
    for (Index nu = 0; nu < n; ++nu) {
      if (nu == mu) continue;
      const Complex coherence = 1.0 + alpha(mu, nu);
      if (coherence != Complex(0.0)) out.push_back({idx(mu, mu), idx(nu, nu), coherence});
      if (faulty && leak != 0.0) out.push_back({idx(mu, nu), idx(mu, nu), leak});
    }
  }
  if (!faulty) return out;

  const Complex g = spec.gamma();
  if (g != Complex(0.0)) {
    for (Index mu = 0; mu < n; ++mu) {
      for (Index nu = mu + 1; nu < n; ++nu) {
        out.push_back({idx(mu, nu), idx(nu, mu), g});
        out.push_back({idx(nu, mu), idx(mu, nu), std::conj(g)});
      }
    }
  }
  const Complex l = spec.lambda_shift();
  if (spec.variant() == Variant::FaultyEpsGammaLambda && l != Complex(0.0)) {
    for (Index mu = 0; mu < n; ++mu) {
      for (Index nu = mu + 1; nu < n; ++nu) {
        const Index a = (mu + 1) % n;
        const Index b = (nu + 1) % n;
        out.push_back({idx(mu, a), idx(nu, b), l});
        out.push_back({idx(nu, b), idx(mu, a), std::conj(l)});
      }
    }
  }
  return out;
}

ChoiState choi(const ChannelSpec& spec) {
  const Index n = spec.dim();
  ComplexMatrix j = ComplexMatrix::Zero(n * n, n * n);
  for (const auto& e : choi_entries(spec)) j(e.row, e.col) += e.value;
  return ChoiState(n, std::move(j));
}

ChoiState choi_from_map(Index dim, const LinearMap& map) {
  ComplexMatrix j(dim * dim, dim * dim);
  for (Index i = 0; i < dim; ++i) {
    for (Index k = 0; k < dim; ++k) {
      j.block(i * dim, k * dim, dim, dim) = map(matrix_unit(dim, i, k));
    }
  }
  // Maps built from floating-point Kraus sums are Hermitian only to rounding.
  j = 0.5 * (j + j.adjoint()).eval();
  return ChoiState(dim, std::move(j));
}

ChoiState choi(const KrausSet& kraus) {
  return choi_from_map(kraus.dim(),
                       [&kraus](const ComplexMatrix& x) { return kraus.apply(x); });
}

CptpVerdict is_cptp(const ChannelSpec& spec) {
  const Index n = spec.dim();
  const auto entries = choi_entries(spec);
  const double lowest = min_eigenvalue_sparse(n * n, entries);
  const double tp = tp_residual(n, entries);
  return {lowest >= -tol::psd && tp <= tol::trace, lowest, tp};
}

CptpVerdict is_cptp(const ChoiState& j) {
  const Index n = j.dim_in();
  const auto eig = herm_eig(j.matrix());
  const double lowest = eig.eigenvalues(eig.eigenvalues.size() - 1);
  const ComplexMatrix t = partial_trace(j.matrix(), Keep::First, {n, n});
  const double tp = (t - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
  return {lowest >= -tol::psd && tp <= tol::trace, lowest, tp};
}

KrausSet kraus_from_choi(const ChoiState& j) {
  const Index n = j.dim_in();
  const auto eig = herm_eig(j.matrix());
  const double lowest = eig.eigenvalues(eig.eigenvalues.size() - 1);
  if (lowest < -tol::psd) {
    throw Error(ErrorCode::NotPSD,
                "Choi state has negative eigenvalue " + std::to_string(lowest));
  }
  std::vector<ComplexMatrix> ops;
  for (Index k = 0; k < eig.eigenvalues.size(); ++k) {
    const double value = eig.eigenvalues(k);
    if (value <= tol::psd) break;
    // J = sum_k |w_k><w_k| with w_k[(i, a)] = K_k(a, i).
    ComplexMatrix op(n, n);
    const double scale = std::sqrt(value);
    for (Index i = 0; i < n; ++i) {
      for (Index a = 0; a < n; ++a) op(a, i) = scale * eig.eigenvectors(i * n + a, k);
    }
    ops.push_back(std::move(op));
  }
  return KrausSet(std::move(ops));
}

}  // namespace aqnn
