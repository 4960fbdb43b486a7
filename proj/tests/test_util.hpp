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

// Test-only oracles. These deliberately avoid the library's code paths:
// explicit index loops instead of Eigen block algebra, direct sums instead
// of SVD pipelines.

#include <cmath>
#include <complex>
#include <vector>

#include "qcorr/linalg.hpp"
#include "qcorr/states.hpp"

namespace qcorr::testing {

inline ComplexMatrix pauli(int k) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  switch (k) {
    case 0:
      m(0, 0) = m(1, 1) = 1.0;
      break;
    case 1:
      m(0, 1) = m(1, 0) = 1.0;
      break;
    case 2:
      m(0, 1) = Complex(0, -1);
      m(1, 0) = Complex(0, 1);
      break;
    default:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
  }
  return m;
}

// Entrywise Kronecker product by the defining formula.
inline ComplexMatrix kron_oracle(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

// tr(m x) by explicit double sum.
inline Complex trace_product(const ComplexMatrix& m, const ComplexMatrix& x) {
  Complex t = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index k = 0; k < m.cols(); ++k) t += m(i, k) * x(k, i);
  return t;
}

// Partial trace over B by index summation.
inline ComplexMatrix trace_out_b(const ComplexMatrix& m, int da, int db) {
  ComplexMatrix out = ComplexMatrix::Zero(da, da);
  for (int a = 0; a < da; ++a)
    for (int ap = 0; ap < da; ++ap)
      for (int b = 0; b < db; ++b) out(a, ap) += m(a * db + b, ap * db + b);
  return out;
}

inline ComplexMatrix trace_out_a(const ComplexMatrix& m, int da, int db) {
  ComplexMatrix out = ComplexMatrix::Zero(db, db);
  for (int b = 0; b < db; ++b)
    for (int bp = 0; bp < db; ++bp)
      for (int a = 0; a < da; ++a) out(b, bp) += m(a * db + b, a * db + bp);
  return out;
}

inline double max_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

// Joint distribution with i.i.d. Exp(1) entries, normalized; a few entries are
// zeroed so degenerate rows and columns get exercised.
inline RealMatrix random_distribution(int da, int db, Rng& rng) {
  std::exponential_distribution<double> exp1(1.0);
  std::bernoulli_distribution drop(0.2);
  RealMatrix p(da, db);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j) p(i, j) = drop(rng) ? 0.0 : exp1(rng);
  if (p.sum() == 0.0) p(0, 0) = 1.0;
  return p / p.sum();
}

// Random orthonormal basis (columns of a Haar unitary).
inline std::vector<ComplexVector> random_basis(int d, Rng& rng) {
  const ComplexMatrix u = random_unitary(std::size_t(d), rng);
  std::vector<ComplexVector> kets;
  for (int k = 0; k < d; ++k) kets.push_back(u.col(k));
  return kets;
}

inline ComplexMatrix local_unitary_conjugate(const DensityMatrix& rho, const ComplexMatrix& u,
                                             const ComplexMatrix& v) {
  const ComplexMatrix uv = kron_oracle(u, v);
  return uv * rho.matrix() * uv.adjoint();
}

}  // namespace qcorr::testing
