// Copyright 2026 The qcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Dense complex linear algebra shared by every analysis: Kronecker products,
// partial traces, Hermitian spectra, entropies, operator bases, SVD and
// numerical rank.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace qcorr {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Which factor of a bipartite space an operation refers to.
enum class Subsystem { kA, kB };

inline Subsystem other(Subsystem s) {
  return s == Subsystem::kA ? Subsystem::kB : Subsystem::kA;
}

inline char subsystem_name(Subsystem s) { return s == Subsystem::kA ? 'A' : 'B'; }

namespace tolerance {
inline constexpr double kHermitian = 1e-12;
inline constexpr double kTrace = 1e-12;
inline constexpr double kPositivity = 1e-9;
inline constexpr double kRank = 1e-10;
inline constexpr double kCommutator = 1e-9;
inline constexpr double kDiscord = 1e-6;
inline constexpr double kCompleteness = 1e-10;
}  // namespace tolerance

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Traces out `traced` from an operator on C^dim_a (x) C^dim_b.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_a,
                            std::size_t dim_b, Subsystem traced);

/// Largest entrywise modulus.
double max_abs(const ComplexMatrix& m);
double max_abs(const RealMatrix& m);

double hermiticity_defect(const ComplexMatrix& m);

/// Returns (m + m^dagger)/2.
ComplexMatrix hermitian_part(const ComplexMatrix& m);

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Hilbert-Schmidt inner product tr(a^dagger b).
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// Ascending eigenvalues of a Hermitian matrix (self-adjoint solver).
RealVector hermitian_eigenvalues(const ComplexMatrix& m);

struct HermitianEigen {
  RealVector values;      // ascending
  ComplexMatrix vectors;  // columns are orthonormal eigenvectors
};
HermitianEigen hermitian_eigen(const ComplexMatrix& m);

/// -sum(lambda log2 lambda) over a spectrum, with 0 log 0 = 0. Throws
/// kInvalidInput when an eigenvalue is below -1e-9.
double entropy_of_spectrum(const RealVector& eigenvalues);

/// Von Neumann entropy in bits.
double von_neumann_entropy(const ComplexMatrix& m);

/// Orthonormal (tr(E_i E_j) = delta_ij) Hermitian basis of the d x d operators.
struct HermitianBasis {
  std::size_t dim = 0;
  std::vector<ComplexMatrix> elements;
};

/// Generalized Gell-Mann matrices scaled to unit Hilbert-Schmidt norm,
/// preceded by I/sqrt(d). Element 0 is the only one with nonzero trace.
HermitianBasis gellmann_basis(std::size_t dim);

/// Rotates a basis by a real orthogonal matrix: E'_i = sum_j O_ji E_j.
HermitianBasis rotate_basis(const HermitianBasis& basis, const RealMatrix& orthogonal);

/// Real Gram matrix tr(E_i E_j) of a list of Hermitian operators.
RealMatrix gram_matrix(const std::vector<ComplexMatrix>& ops);

struct SingularDecomposition {
  RealVector singular_values;  // non-increasing
  RealMatrix left;             // U, square
  RealMatrix right;            // V, square
};

SingularDecomposition svd(const RealMatrix& m);

/// Number of singular values above rel_tol * sigma_max; 0 for the zero matrix.
std::size_t numerical_rank(const RealVector& singular_values, double rel_tol);
std::size_t numerical_rank(const RealMatrix& m, double rel_tol);

using Rng = std::mt19937_64;

/// Standard complex Gaussian entries (real and imaginary parts each N(0, 1/2)).
ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng& rng);

/// Haar-random unitary from the QR decomposition of a Ginibre matrix.
ComplexMatrix random_unitary(std::size_t dim, Rng& rng);

/// Haar-random real orthogonal matrix.
RealMatrix random_orthogonal(std::size_t dim, Rng& rng);

/// Column-orthonormalizes `m` (thin Q factor with phases fixed by R's diagonal).
ComplexMatrix orthonormal_columns(const ComplexMatrix& m);

/// Computational basis ket |index> in C^dim.
ComplexVector basis_ket(std::size_t dim, std::size_t index);

ComplexMatrix projector(const ComplexVector& ket);

/// Deterministic child seed for trial `index` of a run seeded with `master`.
std::uint64_t split_seed(std::uint64_t master, std::uint64_t index);

}  // namespace qcorr
