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

#include "aqnn/diamond.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "aqnn/states.hpp"

namespace aqnn {

namespace {

constexpr Index kMaxInteriorPointDim = 6;
constexpr Index kMaxDenseZDim = 16;

struct Term {
  Index row;
  Index col;
  Complex value;
};

// Derivative of each slack matrix with respect to one real coordinate. The
// slacks Z - J and Z share `big`; `small` belongs to lambda 1 - Tr_out Z.
struct Coordinate {
  std::vector<Term> big;
  std::vector<Term> small;
};

struct Slacks {
  ComplexMatrix s1;
  ComplexMatrix s2;
  ComplexMatrix s3;
};

class BarrierProblem {
 public:
  explicit BarrierProblem(const DiamondProgram& program)
      : n_(program.dim()), big_(n_ * n_), j_(program.j_diff()) {
    const Complex i(0.0, 1.0);
    const auto out_index = [this](Index k) { return k % n_; };
    const auto in_index = [this](Index k) { return k / n_; };
    for (Index k = 0; k < big_; ++k) {
      coords_.push_back({{{k, k, 1.0}}, {{in_index(k), in_index(k), -1.0}}});
    }
    for (Index k = 0; k < big_; ++k) {
      for (Index l = k + 1; l < big_; ++l) {
        Coordinate re{{{k, l, 1.0}, {l, k, 1.0}}, {}};
        Coordinate im{{{k, l, i}, {l, k, -i}}, {}};
        if (out_index(k) == out_index(l)) {
          const Index a = in_index(k);
          const Index b = in_index(l);
          re.small = {{a, b, -1.0}, {b, a, -1.0}};
          im.small = {{a, b, -i}, {b, a, i}};
        }
        coords_.push_back(std::move(re));
        coords_.push_back(std::move(im));
      }
    }
    Coordinate lambda;
    for (Index a = 0; a < n_; ++a) lambda.small.push_back({a, a, 1.0});
    coords_.push_back(std::move(lambda));
  }

  Index size() const { return static_cast<Index>(coords_.size()); }
  Index lambda_index() const { return size() - 1; }
  double nu() const { return static_cast<double>(2 * big_ + n_); }

  ComplexMatrix z_of(const Eigen::VectorXd& x) const {
    ComplexMatrix z = ComplexMatrix::Zero(big_, big_);
    for (Index a = 0; a < lambda_index(); ++a) {
      for (const auto& t : coords_[static_cast<std::size_t>(a)].big) z(t.row, t.col) += x(a) * t.value;
    }
    return z;
  }

  Slacks slacks(const Eigen::VectorXd& x) const {
    const ComplexMatrix z = z_of(x);
    ComplexMatrix s2 = x(lambda_index()) * ComplexMatrix::Identity(n_, n_) -
                       partial_trace(z, Keep::First, {n_, n_});
    return {z - j_, std::move(s2), z};
  }

  // -sum log det of the slacks, or +inf outside the interior. The linear
  // term t * lambda is kept apart so large t does not swamp the comparison.
  double barrier(const Eigen::VectorXd& x) const {
    const Slacks s = slacks(x);
    double f = 0.0;
    for (const ComplexMatrix* m : {&s.s1, &s.s2, &s.s3}) {
      Eigen::LLT<ComplexMatrix> llt(*m);
      if (llt.info() != Eigen::Success) return std::numeric_limits<double>::infinity();
      const auto d = llt.matrixLLT().diagonal();
      for (Index k = 0; k < d.size(); ++k) {
        const double v = d(k).real();
        if (!(v > 0.0)) return std::numeric_limits<double>::infinity();
        f -= 2.0 * std::log(v);
      }
    }
    return f;
  }

  void derivatives(const Eigen::VectorXd& x, double t, Eigen::VectorXd& g,
                   Eigen::MatrixXd& h) const {
    const Slacks s = slacks(x);
    const ComplexMatrix w1 = inverse(s.s1);
    const ComplexMatrix w2 = inverse(s.s2);
    const ComplexMatrix w3 = inverse(s.s3);
    const Index m = size();
    g = Eigen::VectorXd::Zero(m);
    h = Eigen::MatrixXd::Zero(m, m);
    g(lambda_index()) = t;
    for (Index a = 0; a < m; ++a) {
      const auto& ca = coords_[static_cast<std::size_t>(a)];
      g(a) -= trace_with(w1, ca.big) + trace_with(w3, ca.big) + trace_with(w2, ca.small);
      for (Index b = a; b < m; ++b) {
        const auto& cb = coords_[static_cast<std::size_t>(b)];
        double v = 0.0;
        if (!ca.big.empty() && !cb.big.empty()) {
          v += pair_term(w1, ca.big, cb.big) + pair_term(w3, ca.big, cb.big);
        }
        if (!ca.small.empty() && !cb.small.empty()) v += pair_term(w2, ca.small, cb.small);
        h(a, b) = v;
        h(b, a) = v;
      }
    }
  }

 private:
  static ComplexMatrix inverse(const ComplexMatrix& s) {
    Eigen::LLT<ComplexMatrix> llt(s);
    ComplexMatrix w = llt.solve(ComplexMatrix::Identity(s.rows(), s.cols()));
    return 0.5 * (w + w.adjoint());
  }

  // Re tr(W B).
  static double trace_with(const ComplexMatrix& w, const std::vector<Term>& terms) {
    Complex acc = 0.0;
    for (const auto& t : terms) acc += t.value * w(t.col, t.row);
    return acc.real();
  }

  // Re tr(W A W B).
  static double pair_term(const ComplexMatrix& w, const std::vector<Term>& a,
                          const std::vector<Term>& b) {
    Complex acc = 0.0;
    for (const auto& p : a) {
      for (const auto& q : b) acc += p.value * q.value * w(p.col, q.row) * w(q.col, p.row);
    }
    return acc.real();
  }

  Index n_;
  Index big_;
  ComplexMatrix j_;
  std::vector<Coordinate> coords_;
};

double min_eig(const ComplexMatrix& m) {
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

double feasibility(const DiamondProgram& program, const ComplexMatrix& z, double lambda) {
  const Index n = program.dim();
  const ComplexMatrix s2 = lambda * ComplexMatrix::Identity(n, n) -
                           partial_trace(z, Keep::First, {n, n});
  return std::max({0.0, -min_eig(z - program.j_diff()), -min_eig(s2), -min_eig(z)});
}

void require_pair(const ChannelSpec& a, const ChannelSpec& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "channels have different dimensions");
  }
}

}  // namespace

std::string_view to_string(DiamondMethod m) {
  switch (m) {
    case DiamondMethod::Auto: return "auto";
    case DiamondMethod::Analytic: return "analytic";
    case DiamondMethod::InteriorPoint: return "interior_point";
  }
  return "unknown";
}

DiamondProgram::DiamondProgram(Index dim, ComplexMatrix j_diff)
    : n_(dim), j_(std::move(j_diff)) {
  if (n_ < 1 || j_.rows() != n_ * n_ || j_.cols() != n_ * n_) {
    throw Error(ErrorCode::DimensionMismatch, "J_diff must be N^2 x N^2");
  }
  require_hermitian(j_, "DiamondProgram");
}

DiamondProgram DiamondProgram::between(const ChoiState& a, const ChoiState& b) {
  if (a.dim_in() != b.dim_in()) {
    throw Error(ErrorCode::DimensionMismatch, "Choi states have different dimensions");
  }
  return DiamondProgram(a.dim_in(), a.matrix() - b.matrix());
}

DiamondResult solve(const DiamondProgram& program, const SolverOptions& options) {
  const BarrierProblem problem(program);
  const Index m = problem.size();
  const Index n = program.dim();

  // Strictly feasible start: ||J||_1 + 1 dominates every eigenvalue of J.
  const double scale = trace_norm(program.j_diff()) + 1.0;
  Eigen::VectorXd x = Eigen::VectorXd::Zero(m);
  for (Index k = 0; k < n * n; ++k) x(k) = scale;
  x(problem.lambda_index()) = 2.0 * scale * static_cast<double>(n);

  Eigen::VectorXd g;
  Eigen::MatrixXd h;
  int steps = 0;
  double t = options.t_initial;
  for (;;) {
    const Index li = problem.lambda_index();
    double b = problem.barrier(x);
    bool centred = false;
    for (int it = 0; it < options.max_newton_per_stage; ++it) {
      problem.derivatives(x, t, g, h);
      Eigen::LDLT<Eigen::MatrixXd> ldlt(h);
      Eigen::VectorXd dx = ldlt.solve(-g);
      const double decrement = -g.dot(dx);
      ++steps;
      if (!(decrement >= 0.0) || !dx.allFinite()) break;
      if (decrement < 1e-10) {
        centred = true;
        break;
      }
      double step = 1.0;
      bool moved = false;
      while (step > 1e-16) {
        const Eigen::VectorXd trial = x + step * dx;
        const double bt = problem.barrier(trial);
        const double change = t * step * dx(li) + (bt - b);
        if (change <= -0.25 * step * decrement) {
          x = trial;
          b = bt;
          moved = true;
          break;
        }
        step *= 0.5;
      }
      if (!moved) {
        // Rounding floor reached; a small Newton decrement already bounds
        // the distance to the central point.
        centred = decrement < 0.1;
        break;
      }
    }
    if (!centred) {
      std::ostringstream msg;
      msg << "centering failed at t = " << t << " after " << steps
          << " Newton steps (lambda = " << x(problem.lambda_index()) << ")";
      throw Error(ErrorCode::SolverDidNotConverge, msg.str());
    }
    if (t >= options.t_final) break;
    t = std::min(t * options.t_factor, options.t_final);
  }

  DiamondResult result;
  result.lambda_opt = x(problem.lambda_index());
  result.value = result.lambda_opt;
  result.z_opt = problem.z_of(x);
  result.dual_gap_estimate = problem.nu() / t;
  result.method = DiamondMethod::InteriorPoint;
  result.newton_steps = steps;
  result.feasibility_residual = feasibility(program, result.z_opt, result.lambda_opt);
  return result;
}

std::optional<DiamondResult> solve_diagonal(const DiamondProgram& program) {
  const ComplexMatrix& j = program.j_diff();
  const Index big = j.rows();
  for (Index c = 0; c < big; ++c) {
    for (Index r = 0; r < big; ++r) {
      if (r != c && std::abs(j(r, c)) > 1e-12) return std::nullopt;
    }
  }
  const Index n = program.dim();
  ComplexMatrix z = ComplexMatrix::Zero(big, big);
  for (Index k = 0; k < big; ++k) z(k, k) = std::max(0.0, j(k, k).real());
  const ComplexMatrix reduced = partial_trace(z, Keep::First, {n, n});
  const double lambda = reduced.diagonal().real().maxCoeff();
  DiamondResult result{lambda, z, lambda, 0.0, DiamondMethod::Analytic, 0, 0.0};
  result.feasibility_residual = feasibility(program, z, lambda);
  return result;
}

std::optional<DiamondResult> diamond_analytic_diagonal(const ChannelSpec& a,
                                                       const ChannelSpec& b) {
  require_pair(a, b);
  const Index n = a.dim();
  // Work from the sparse closed forms so large N never forms J densely.
  std::map<std::pair<Index, Index>, Complex> diff;
  for (const auto& e : choi_entries(a)) diff[{e.row, e.col}] += e.value;
  for (const auto& e : choi_entries(b)) diff[{e.row, e.col}] -= e.value;
  std::vector<double> reduced(static_cast<std::size_t>(n), 0.0);
  for (const auto& [key, value] : diff) {
    if (key.first != key.second) {
      if (std::abs(value) > 1e-12) return std::nullopt;
      continue;
    }
    reduced[static_cast<std::size_t>(key.first / n)] += std::max(0.0, value.real());
  }
  const double lambda = *std::max_element(reduced.begin(), reduced.end());
  DiamondResult result{lambda, ComplexMatrix(), lambda, 0.0, DiamondMethod::Analytic, 0, 0.0};
  if (n <= kMaxDenseZDim) {
    result.z_opt = ComplexMatrix::Zero(n * n, n * n);
    for (const auto& [key, value] : diff) {
      if (key.first == key.second) result.z_opt(key.first, key.first) = std::max(0.0, value.real());
    }
    const DiamondProgram program(n, choi(a).matrix() - choi(b).matrix());
    result.feasibility_residual = feasibility(program, result.z_opt, lambda);
  }
  return result;
}

DiamondResult diamond_distance(const ChannelSpec& a, const ChannelSpec& b,
                               DiamondMethod method, const SolverOptions& options) {
  require_pair(a, b);
  require_cptp(a);
  require_cptp(b);
  if (method != DiamondMethod::InteriorPoint) {
    if (auto closed = diamond_analytic_diagonal(a, b)) return *closed;
    if (method == DiamondMethod::Analytic) {
      throw Error(ErrorCode::InvalidArgument,
                  "closed form needs a diagonal Choi difference");
    }
  }
  if (a.dim() > kMaxInteriorPointDim) {
    throw Error(ErrorCode::DimensionTooLarge,
                "interior-point solver supports N <= " +
                    std::to_string(kMaxInteriorPointDim) + ", got " + std::to_string(a.dim()));
  }
  return solve(DiamondProgram::between(choi(a), choi(b)), options);
}

double diamond_lower_bound(const ChannelSpec& a, const ChannelSpec& b, int trials,
                           std::uint64_t seed) {
  require_pair(a, b);
  const Index n = a.dim();
  const auto map_a = [&a](const ComplexMatrix& x) { return apply_linear(a, x); };
  const auto map_b = [&b](const ComplexMatrix& x) { return apply_linear(b, x); };
  const auto gap = [&](const ComplexVector& psi) {
    const ComplexMatrix rho = psi * psi.adjoint();
    const ComplexMatrix d = apply_extended_linear(map_a, n, rho, n) -
                            apply_extended_linear(map_b, n, rho, n);
    return 0.5 * trace_norm(0.5 * (d + d.adjoint()));
  };

  double best = 0.0;
  ComplexVector phi = ComplexVector::Zero(n * n);
  for (Index i = 0; i < n; ++i) phi(i * n + i) = 1.0 / std::sqrt(static_cast<double>(n));
  best = std::max(best, gap(phi));
  for (Index i = 0; i < n; ++i) best = std::max(best, gap(ComplexVector::Unit(n * n, i * n)));
  for (int t = 0; t < trials; ++t) {
    best = std::max(best, gap(random_pure(n * n, seed + static_cast<std::uint64_t>(t)).amplitudes()));
  }
  return best;
}

}  // namespace aqnn
