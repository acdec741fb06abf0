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

#include "aqnn/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace aqnn {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonHermitianInput: return "NonHermitianInput";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::BadDimension: return "BadDimension";
    case ErrorCode::BadRank: return "BadRank";
    case ErrorCode::InvalidState: return "InvalidState";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::InvalidKraus: return "InvalidKraus";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::NotCPTP: return "NotCPTP";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::WrongVariant: return "WrongVariant";
    case ErrorCode::DepthExceeded: return "DepthExceeded";
    case ErrorCode::ConstraintInfeasible: return "ConstraintInfeasible";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::SolverDidNotConverge: return "SolverDidNotConverge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(Index n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), Index{0});
  }

  Index find(Index i) {
    auto& p = parent_[static_cast<std::size_t>(i)];
    if (p != i) p = find(p);
    return p;
  }

  // The smaller root wins so component ids are their smallest member.
  void unite(Index a, Index b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
  }

 private:
  std::vector<Index> parent_;
};

// Components listed in order of their smallest member, members ascending.
std::vector<std::vector<Index>> group_components(DisjointSets& sets, Index n) {
  std::vector<std::vector<Index>> groups;
  std::vector<Index> slot(static_cast<std::size_t>(n), -1);
  for (Index i = 0; i < n; ++i) {
    const Index root = sets.find(i);
    auto& s = slot[static_cast<std::size_t>(root)];
    if (s < 0) {
      s = static_cast<Index>(groups.size());
      groups.emplace_back();
    }
    groups[static_cast<std::size_t>(s)].push_back(i);
  }
  return groups;
}

Index leading_index(const ComplexVector& v) {
  const double cutoff = 1e-8 * std::max(1.0, v.cwiseAbs().maxCoeff());
  for (Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > cutoff) return i;
  }
  return 0;
}

void fix_phase(Eigen::Ref<ComplexVector> v) {
  const double peak = v.cwiseAbs().maxCoeff();
  if (peak == 0.0) return;
  for (Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) >= 0.5 * peak) {
      v *= std::conj(v(i)) / std::abs(v(i));
      v(i) = Complex(v(i).real(), 0.0);
      return;
    }
  }
}

}  // namespace

ComplexMatrix HermitianEigenSystem::reconstruct() const {
  return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() *
         eigenvectors.adjoint();
}

bool all_finite(const ComplexMatrix& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) {
        return false;
      }
    }
  }
  return true;
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + ": expected a non-empty square matrix, got " +
                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  if (!all_finite(m)) {
    throw Error(ErrorCode::NonFinite, std::string(what) + ": NaN or Inf entry");
  }
}

void require_hermitian(const ComplexMatrix& m, const char* what) {
  require_square(m, what);
  const double defect = hermiticity_defect(m);
  if (defect > tol::hermitian) {
    throw Error(ErrorCode::NonHermitianInput,
                std::string(what) + ": asymmetry " + std::to_string(defect));
  }
}

HermitianEigenSystem herm_eig(const ComplexMatrix& m) {
  require_hermitian(m, "herm_eig");
  const Index n = m.rows();

  DisjointSets sets(n);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < j; ++i) {
      if (m(i, j) != Complex(0.0) || m(j, i) != Complex(0.0)) sets.unite(i, j);
    }
  }

  struct Pair {
    double value;
    Index lead;
    ComplexVector vector;
  };
  std::vector<Pair> pairs;
  pairs.reserve(static_cast<std::size_t>(n));

  for (const auto& members : group_components(sets, n)) {
    const auto k = static_cast<Index>(members.size());
    ComplexMatrix block(k, k);
    for (Index a = 0; a < k; ++a) {
      for (Index b = 0; b < k; ++b) {
        block(a, b) = 0.5 * (m(members[a], members[b]) +
                             std::conj(m(members[b], members[a])));
      }
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(block);
    for (Index c = 0; c < k; ++c) {
      ComplexVector full = ComplexVector::Zero(n);
      for (Index a = 0; a < k; ++a) full(members[a]) = solver.eigenvectors()(a, c);
      fix_phase(full);
      const Index lead = leading_index(full);
      pairs.push_back({solver.eigenvalues()(c), lead, std::move(full)});
    }
  }

  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const Pair& a, const Pair& b) { return a.value > b.value; });
  // Within runs of numerically equal eigenvalues order by leading index.
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  for (std::size_t start = 0; start < pairs.size();) {
    std::size_t stop = start + 1;
    while (stop < pairs.size() &&
           pairs[stop - 1].value - pairs[stop].value <= 1e-12 * scale) {
      ++stop;
    }
    std::stable_sort(pairs.begin() + static_cast<std::ptrdiff_t>(start),
                     pairs.begin() + static_cast<std::ptrdiff_t>(stop),
                     [](const Pair& a, const Pair& b) { return a.lead < b.lead; });
    start = stop;
  }

  HermitianEigenSystem out{RealVector(n), ComplexMatrix(n, n)};
  for (Index c = 0; c < n; ++c) {
    out.eigenvalues(c) = pairs[static_cast<std::size_t>(c)].value;
    out.eigenvectors.col(c) = pairs[static_cast<std::size_t>(c)].vector;
  }
  return out;
}

double min_eigenvalue_sparse(Index n, std::span<const SparseEntry> entries) {
  if (n <= 0) throw Error(ErrorCode::BadDimension, "min_eigenvalue_sparse: n <= 0");
  DisjointSets sets(n);
  std::vector<bool> touched(static_cast<std::size_t>(n), false);
  for (const auto& e : entries) {
    if (e.row < 0 || e.col < 0 || e.row >= n || e.col >= n) {
      throw Error(ErrorCode::DimensionMismatch, "sparse entry out of range");
    }
    if (!std::isfinite(e.value.real()) || !std::isfinite(e.value.imag())) {
      throw Error(ErrorCode::NonFinite, "sparse entry is NaN or Inf");
    }
    sets.unite(e.row, e.col);
    touched[static_cast<std::size_t>(e.row)] = true;
    touched[static_cast<std::size_t>(e.col)] = true;
  }

  const auto groups = group_components(sets, n);
  std::vector<Index> group_of(static_cast<std::size_t>(n));
  std::vector<Index> local(static_cast<std::size_t>(n));
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (std::size_t a = 0; a < groups[g].size(); ++a) {
      group_of[static_cast<std::size_t>(groups[g][a])] = static_cast<Index>(g);
      local[static_cast<std::size_t>(groups[g][a])] = static_cast<Index>(a);
    }
  }
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(groups.size());
  for (const auto& g : groups) {
    const auto k = static_cast<Index>(g.size());
    blocks.push_back(ComplexMatrix::Zero(k, k));
  }
  for (const auto& e : entries) {
    auto& block = blocks[static_cast<std::size_t>(group_of[static_cast<std::size_t>(e.row)])];
    block(local[static_cast<std::size_t>(e.row)], local[static_cast<std::size_t>(e.col)]) += e.value;
  }

  double lowest = std::numeric_limits<double>::infinity();
  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (groups[g].size() == 1 && !touched[static_cast<std::size_t>(groups[g][0])]) {
      lowest = std::min(lowest, 0.0);
      continue;
    }
    const ComplexMatrix h = 0.5 * (blocks[g] + blocks[g].adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
    lowest = std::min(lowest, solver.eigenvalues()(0));
  }
  return lowest;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, Keep keep,
                            BipartiteDims dims) {
  require_square(m, "partial_trace");
  if (dims.first <= 0 || dims.second <= 0 ||
      m.rows() != dims.first * dims.second) {
    throw Error(ErrorCode::DimensionMismatch,
                "partial_trace: matrix of size " + std::to_string(m.rows()) +
                    " does not factor as " + std::to_string(dims.first) + "x" +
                    std::to_string(dims.second));
  }
  const Index da = dims.first;
  const Index db = dims.second;
  if (keep == Keep::First) {
    ComplexMatrix out = ComplexMatrix::Zero(da, da);
    for (Index i = 0; i < da; ++i) {
      for (Index j = 0; j < da; ++j) {
        Complex s = 0.0;
        for (Index k = 0; k < db; ++k) s += m(i * db + k, j * db + k);
        out(i, j) = s;
      }
    }
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(db, db);
  for (Index k = 0; k < da; ++k) out += m.block(k * db, k * db, db, db);
  return out;
}

double trace_norm(const ComplexMatrix& m) {
  require_square(m, "trace_norm");
  if (hermiticity_defect(m) <= tol::hermitian) {
    const ComplexMatrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().cwiseAbs().sum();
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues().sum();
}

ComplexMatrix matrix_unit(Index n, Index row, Index col) {
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  out(row, col) = 1.0;
  return out;
}

}  // namespace aqnn
