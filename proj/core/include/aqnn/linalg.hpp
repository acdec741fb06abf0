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

#ifndef AQNN_LINALG_HPP
#define AQNN_LINALG_HPP

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "aqnn/errors.hpp"

namespace aqnn {

using Complex = std::complex<double>;
using Index = Eigen::Index;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

namespace tol {
/// Max entrywise |m - m^dagger| accepted as Hermitian.
inline constexpr double hermitian = 1e-12;
/// Smallest eigenvalue still accepted as positive semidefinite.
inline constexpr double psd = 1e-10;
inline constexpr double trace = 1e-10;
}  // namespace tol

/// Eigenvalues sorted descending, eigenvectors in matching columns.
struct HermitianEigenSystem {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;

  ComplexMatrix reconstruct() const;
};

/// One nonzero entry of a sparse Hermitian matrix. Both (r, c) and (c, r)
/// must be supplied for off-diagonal entries.
struct SparseEntry {
  Index row;
  Index col;
  Complex value;
};

enum class Keep { First, Second };

/// Dimensions of a bipartite space H_first (x) H_second.
struct BipartiteDims {
  Index first;
  Index second;
};

/// Hermitian eigendecomposition.
///
/// The matrix is first split into its direct-sum components (connected
/// components of the nonzero pattern) and every component is diagonalised on
/// its own, so each eigenvector is supported on a single component. Ties in
/// the eigenvalues are broken by the index of the eigenvector's leading
/// nonzero entry; each eigenvector is phase-fixed so its first dominant
/// component is real positive.
HermitianEigenSystem herm_eig(const ComplexMatrix& m);

/// Smallest eigenvalue of the Hermitian n x n matrix given by `entries`,
/// without ever forming it densely. Indices that carry no entry count as a
/// zero eigenvalue.
double min_eigenvalue_sparse(Index n, std::span<const SparseEntry> entries);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix partial_trace(const ComplexMatrix& m, Keep keep,
                            BipartiteDims dims);

/// Sum of singular values.
double trace_norm(const ComplexMatrix& m);

double hermiticity_defect(const ComplexMatrix& m);
bool all_finite(const ComplexMatrix& m);

ComplexMatrix matrix_unit(Index n, Index row, Index col);

/// Throws NonFinite / DimensionMismatch / NonHermitianInput as appropriate.
void require_square(const ComplexMatrix& m, const char* what);
void require_hermitian(const ComplexMatrix& m, const char* what);

}  // namespace aqnn

#endif  // AQNN_LINALG_HPP
