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

#include "qcorr/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qcorr/error.hpp"

namespace qcorr {

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Eigen::Index br = b.rows();
  const Eigen::Index bc = b.cols();
  ComplexMatrix out(a.rows() * br, a.cols() * bc);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * br, j * bc, br, bc) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_a,
                            std::size_t dim_b, Subsystem traced) {
  const auto n = static_cast<Eigen::Index>(dim_a * dim_b);
  if (m.rows() != n || m.cols() != n) {
    fail(ErrorKind::kDimensionMismatch,
         "partial_trace: matrix is " + std::to_string(m.rows()) + "x" +
             std::to_string(m.cols()) + ", expected " + std::to_string(n) +
             " = " + std::to_string(dim_a) + "*" + std::to_string(dim_b));
  }
  const auto da = static_cast<Eigen::Index>(dim_a);
  const auto db = static_cast<Eigen::Index>(dim_b);
  if (traced == Subsystem::kB) {
    ComplexMatrix out = ComplexMatrix::Zero(da, da);
    for (Eigen::Index i = 0; i < da; ++i)
      for (Eigen::Index j = 0; j < da; ++j)
        for (Eigen::Index k = 0; k < db; ++k) out(i, j) += m(i * db + k, j * db + k);
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(db, db);
  for (Eigen::Index k = 0; k < da; ++k) out += m.block(k * db, k * db, db, db);
  return out;
}

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double max_abs(const RealMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return INFINITY;
  return max_abs(ComplexMatrix(m - m.adjoint()));
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  return (m + m.adjoint()) * 0.5;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a.adjoint() * b).trace();
}

RealVector hermitian_eigenvalues(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

HermitianEigen hermitian_eigen(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double entropy_of_spectrum(const RealVector& eigenvalues) {
  double s = 0.0;
  for (double lambda : eigenvalues) {
    if (lambda < -tolerance::kPositivity) {
      fail(ErrorKind::kInvalidInput,
           "entropy: negative eigenvalue " + std::to_string(lambda) +
               " (input is not a state)");
    }
    if (lambda > 0.0) s -= lambda * std::log2(lambda);
  }
  return s;
}

double von_neumann_entropy(const ComplexMatrix& m) {
  return entropy_of_spectrum(hermitian_eigenvalues(m));
}

HermitianBasis gellmann_basis(std::size_t dim) {
  if (dim == 0) fail(ErrorKind::kInvalidInput, "gellmann_basis: dim must be >= 1");
  const auto d = static_cast<Eigen::Index>(dim);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  HermitianBasis basis;
  basis.dim = dim;
  basis.elements.reserve(dim * dim);
  basis.elements.push_back(ComplexMatrix::Identity(d, d) / std::sqrt(double(dim)));
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index k = j + 1; k < d; ++k) {
      ComplexMatrix sym = ComplexMatrix::Zero(d, d);
      sym(j, k) = sym(k, j) = inv_sqrt2;
      basis.elements.push_back(std::move(sym));
      ComplexMatrix anti = ComplexMatrix::Zero(d, d);
      anti(j, k) = Complex(0.0, -inv_sqrt2);
      anti(k, j) = Complex(0.0, inv_sqrt2);
      basis.elements.push_back(std::move(anti));
    }
  }
  for (Eigen::Index l = 1; l < d; ++l) {
    ComplexMatrix diag = ComplexMatrix::Zero(d, d);
    const double norm = 1.0 / std::sqrt(double(l * (l + 1)));
    for (Eigen::Index j = 0; j < l; ++j) diag(j, j) = norm;
    diag(l, l) = -double(l) * norm;
    basis.elements.push_back(std::move(diag));
  }
  return basis;
}

HermitianBasis rotate_basis(const HermitianBasis& basis, const RealMatrix& orthogonal) {
  const std::size_t n = basis.elements.size();
  if (orthogonal.rows() != Eigen::Index(n) || orthogonal.cols() != Eigen::Index(n)) {
    fail(ErrorKind::kDimensionMismatch, "rotate_basis: rotation size mismatch");
  }
  HermitianBasis out;
  out.dim = basis.dim;
  out.elements.reserve(n);
  const auto d = static_cast<Eigen::Index>(basis.dim);
  for (std::size_t i = 0; i < n; ++i) {
    ComplexMatrix e = ComplexMatrix::Zero(d, d);
    for (std::size_t j = 0; j < n; ++j) e += orthogonal(Eigen::Index(j), Eigen::Index(i)) * basis.elements[j];
    out.elements.push_back(std::move(e));
  }
  return out;
}

RealMatrix gram_matrix(const std::vector<ComplexMatrix>& ops) {
  const auto n = static_cast<Eigen::Index>(ops.size());
  RealMatrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      g(i, j) = g(j, i) = hs_inner(ops[std::size_t(i)], ops[std::size_t(j)]).real();
    }
  }
  return g;
}

SingularDecomposition svd(const RealMatrix& m) {
  Eigen::JacobiSVD<RealMatrix> solver(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return {solver.singularValues(), solver.matrixU(), solver.matrixV()};
}

std::size_t numerical_rank(const RealVector& singular_values, double rel_tol) {
  if (singular_values.size() == 0) return 0;
  const double top = singular_values.maxCoeff();
  if (top <= 0.0) return 0;
  std::size_t rank = 0;
  for (double s : singular_values) {
    if (s > rel_tol * top) ++rank;
  }
  return rank;
}

std::size_t numerical_rank(const RealMatrix& m, double rel_tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<RealMatrix> solver(m);
  return numerical_rank(RealVector(solver.singularValues()), rel_tol);
}

ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  ComplexMatrix g(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  // Explicit loop keeps the draw order fixed (row-major) for reproducibility.
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

ComplexMatrix orthonormal_columns(const ComplexMatrix& m) {
  Eigen::HouseholderQR<ComplexMatrix> qr(m);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(m.rows(), m.cols());
  const ComplexMatrix r = qr.matrixQR();
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    const Complex diag = r(j, j);
    const double mag = std::abs(diag);
    if (mag > 0.0) q.col(j) *= diag / mag;
  }
  return q;
}

ComplexMatrix random_unitary(std::size_t dim, Rng& rng) {
  return orthonormal_columns(ginibre(dim, dim, rng));
}

RealMatrix random_orthogonal(std::size_t dim, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto n = static_cast<Eigen::Index>(dim);
  RealMatrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) g(i, j) = normal(rng);
  Eigen::HouseholderQR<RealMatrix> qr(g);
  RealMatrix q = qr.householderQ();
  const RealMatrix r = qr.matrixQR();
  for (Eigen::Index j = 0; j < n; ++j) {
    if (r(j, j) < 0.0) q.col(j) *= -1.0;
  }
  return q;
}

ComplexVector basis_ket(std::size_t dim, std::size_t index) {
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return v;
}

ComplexMatrix projector(const ComplexVector& ket) { return ket * ket.adjoint(); }

std::uint64_t split_seed(std::uint64_t master, std::uint64_t index) {
  // splitmix64 finalizer applied to the master seed offset by the trial index.
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace qcorr
