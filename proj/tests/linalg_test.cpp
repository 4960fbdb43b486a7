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

#include <cmath>

#include "gtest/gtest.h"

#include "qcorr/error.hpp"
#include "qcorr/states.hpp"
#include "test_util.hpp"

using namespace qcorr;
using qcorr::testing::kron_oracle;
using qcorr::testing::pauli;

TEST(tensor_product, identities_and_projectors) {
  const ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
  EXPECT_EQ(tensor_product(i2, i2), ComplexMatrix(ComplexMatrix::Identity(4, 4)));

  const ComplexMatrix p0 = projector(basis_ket(2, 0));
  const ComplexMatrix out = tensor_product(p0, p0);
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(0, 0) = 1.0;
  EXPECT_EQ(out, expected);
}

TEST(tensor_product, matches_entrywise_oracle_on_rectangular_inputs) {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = ginibre(2 + trial % 3, 1 + trial % 4, rng);
    const ComplexMatrix b = ginibre(1 + trial % 2, 3, rng);
    EXPECT_LT(qcorr::testing::max_diff(tensor_product(a, b), kron_oracle(a, b)), 1e-15);
  }
}

TEST(tensor_product, sigma_xx_expectation_on_werner) {
  // tr((X (x) X) rho_W) = z for the Werner family.
  const DensityMatrix rho = werner_state(1.0 / 3.0);
  const ComplexMatrix xx = tensor_product(pauli(1), pauli(1));
  const Complex direct = qcorr::testing::trace_product(rho.matrix(), kron_oracle(pauli(1), pauli(1)));
  EXPECT_NEAR((xx * rho.matrix()).trace().real(), direct.real(), 1e-15);
  EXPECT_NEAR(direct.real(), 1.0 / 3.0, 1e-15);
}

TEST(partial_trace, product_state_and_bell_marginals) {
  Rng rng(3);
  const DensityMatrix a = random_state(3, 1, rng);
  const DensityMatrix b = random_state(2, 1, rng);
  const DensityMatrix ab = product_state(a, b);
  EXPECT_LT(qcorr::testing::max_diff(ab.marginal(Subsystem::kA), a.matrix()), 1e-14);
  EXPECT_LT(qcorr::testing::max_diff(ab.marginal(Subsystem::kB), b.matrix()), 1e-14);

  const DensityMatrix bell = bell_state();
  const ComplexMatrix half = ComplexMatrix::Identity(2, 2) / 2.0;
  EXPECT_LT(qcorr::testing::max_diff(bell.marginal(Subsystem::kB), half), 1e-15);
  EXPECT_LT(qcorr::testing::max_diff(bell.marginal(Subsystem::kA), half), 1e-15);
}

TEST(partial_trace, rho_l_marginal_matches_index_summation) {
  const DensityMatrix rho = rho_l();
  const ComplexMatrix oracle = qcorr::testing::trace_out_b(rho.matrix(), 2, 2);
  ComplexMatrix expected(2, 2);
  // (|0><0| + |+><+|)/2
  expected << 0.75, 0.25, 0.25, 0.25;
  EXPECT_LT(qcorr::testing::max_diff(oracle, expected), 1e-15);
  EXPECT_LT(qcorr::testing::max_diff(rho.marginal(Subsystem::kA), expected), 1e-15);
}

TEST(partial_trace, random_states_give_unit_trace_psd_marginals) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t da = 2 + seed % 3;
    const std::size_t db = 2 + (seed / 3) % 3;
    const DensityMatrix rho = random_state(da, db, seed);
    for (Subsystem kept : {Subsystem::kA, Subsystem::kB}) {
      const ComplexMatrix m = rho.marginal(kept);
      EXPECT_NEAR(m.trace().real(), 1.0, 1e-12);
      EXPECT_GE(hermitian_eigenvalues(m).minCoeff(), -1e-10);
    }
    EXPECT_LT(qcorr::testing::max_diff(rho.marginal(Subsystem::kA),
                                       qcorr::testing::trace_out_b(rho.matrix(), int(da), int(db))),
              1e-14);
    EXPECT_LT(qcorr::testing::max_diff(rho.marginal(Subsystem::kB),
                                       qcorr::testing::trace_out_a(rho.matrix(), int(da), int(db))),
              1e-14);
  }
}

TEST(partial_trace, rejects_mismatched_dimensions) {
  const ComplexMatrix m = ComplexMatrix::Identity(6, 6);
  EXPECT_THROW(partial_trace(m, 2, 2, Subsystem::kA), Error);
}

TEST(entropy, reference_values) {
  EXPECT_NEAR(von_neumann_entropy(projector(basis_ket(2, 0))), 0.0, 1e-15);
  EXPECT_NEAR(von_neumann_entropy(ComplexMatrix::Identity(2, 2) / 2.0), 1.0, 1e-15);
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = 0.25;
  d(1, 1) = 0.75;
  // -1/4 log2(1/4) - 3/4 log2(3/4), evaluated at 30 digits.
  EXPECT_NEAR(von_neumann_entropy(d), 0.811278124459132864, 1e-15);
}

TEST(entropy, rejects_negative_spectrum) {
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = 1.1;
  d(1, 1) = -0.1;
  EXPECT_THROW(von_neumann_entropy(d), Error);
}

TEST(entropy, unitary_invariance_and_subadditivity) {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t da = 2 + trial % 2;
    const std::size_t db = 2 + (trial / 2) % 3;
    const DensityMatrix rho = random_state(da, db, rng);
    const ComplexMatrix u = random_unitary(da * db, rng);
    const double s = von_neumann_entropy(rho.matrix());
    EXPECT_NEAR(von_neumann_entropy(u * rho.matrix() * u.adjoint()), s, 1e-9);
    EXPECT_LE(s, von_neumann_entropy(rho.marginal(Subsystem::kA)) +
                     von_neumann_entropy(rho.marginal(Subsystem::kB)) + 1e-9);
  }
}

TEST(gellmann_basis, qubit_is_normalized_pauli) {
  const HermitianBasis basis = gellmann_basis(2);
  ASSERT_EQ(basis.elements.size(), 4u);
  for (int k = 0; k < 4; ++k) {
    EXPECT_LT(qcorr::testing::max_diff(basis.elements[std::size_t(k)], pauli(k) / std::sqrt(2.0)), 1e-15)
        << "element " << k;
  }
}

TEST(gellmann_basis, orthonormal_hermitian_and_traceless) {
  for (std::size_t d : {1u, 2u, 3u, 4u, 5u}) {
    const HermitianBasis basis = gellmann_basis(d);
    ASSERT_EQ(basis.elements.size(), d * d);
    const RealMatrix gram = gram_matrix(basis.elements);
    EXPECT_LT(max_abs(RealMatrix(gram - RealMatrix::Identity(Eigen::Index(d * d), Eigen::Index(d * d)))), 1e-12)
        << "d=" << d;
    EXPECT_EQ(numerical_rank(gram, 1e-10), d * d);
    for (std::size_t i = 0; i < basis.elements.size(); ++i) {
      EXPECT_LT(hermiticity_defect(basis.elements[i]), 1e-15);
      if (i > 0) EXPECT_LT(std::abs(basis.elements[i].trace()), 1e-15) << "d=" << d << " i=" << i;
    }
    EXPECT_NEAR(basis.elements[0].trace().real(), std::sqrt(double(d)), 1e-14);
  }
}

TEST(gellmann_basis, expansion_round_trip) {
  Rng rng(9);
  for (std::size_t d : {2u, 3u, 4u}) {
    const HermitianBasis basis = gellmann_basis(d);
    for (int trial = 0; trial < 10; ++trial) {
      const ComplexMatrix g = ginibre(d, d, rng);
      const ComplexMatrix m = g + g.adjoint();
      ComplexMatrix rebuilt = ComplexMatrix::Zero(Eigen::Index(d), Eigen::Index(d));
      for (const auto& e : basis.elements) rebuilt += (m * e).trace() * e;
      EXPECT_LT(qcorr::testing::max_diff(rebuilt, m), 1e-10);
    }
  }
}

TEST(svd, reconstructs_and_is_orthogonal) {
  Rng rng(21);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 30; ++trial) {
    const int rows = 1 + trial % 9;
    const int cols = 1 + (trial * 7) % 16;
    RealMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = normal(rng);
    const SingularDecomposition dec = svd(m);
    RealMatrix sigma = RealMatrix::Zero(rows, cols);
    for (Eigen::Index k = 0; k < dec.singular_values.size(); ++k) sigma(k, k) = dec.singular_values(k);
    EXPECT_LT(max_abs(RealMatrix(dec.left * sigma * dec.right.transpose() - m)), 1e-10);
    EXPECT_LT(max_abs(RealMatrix(dec.left.transpose() * dec.left - RealMatrix::Identity(rows, rows))), 1e-10);
    EXPECT_LT(max_abs(RealMatrix(dec.right.transpose() * dec.right - RealMatrix::Identity(cols, cols))), 1e-10);
    for (Eigen::Index k = 1; k < dec.singular_values.size(); ++k) {
      EXPECT_GE(dec.singular_values(k - 1), dec.singular_values(k));
    }
  }
}

TEST(numerical_rank, threshold_cases) {
  EXPECT_EQ(numerical_rank(RealMatrix(RealMatrix::Zero(4, 4)), 1e-10), 0u);
  RealMatrix d = RealMatrix::Zero(2, 2);
  d(0, 0) = 1.0;
  d(1, 1) = 1e-16;
  EXPECT_EQ(numerical_rank(d, 1e-10), 1u);
}

TEST(numerical_rank, sum_of_outer_products_fixes_rank) {
  Rng rng(4);
  std::normal_distribution<double> normal;
  for (std::size_t r = 1; r <= 4; ++r) {
    RealMatrix m = RealMatrix::Zero(4, 4);
    for (std::size_t k = 0; k < r; ++k) {
      RealVector u(4), v(4);
      for (int i = 0; i < 4; ++i) {
        u(i) = normal(rng);
        v(i) = normal(rng);
      }
      m += u * v.transpose();
    }
    EXPECT_EQ(numerical_rank(m, 1e-10), r);
  }
}

TEST(random_unitary, is_unitary) {
  Rng rng(8);
  for (std::size_t d = 1; d <= 6; ++d) {
    const ComplexMatrix u = random_unitary(d, rng);
    EXPECT_LT(max_abs(ComplexMatrix(u.adjoint() * u - ComplexMatrix::Identity(Eigen::Index(d), Eigen::Index(d)))), 1e-12);
    const RealMatrix o = random_orthogonal(d, rng);
    EXPECT_LT(max_abs(RealMatrix(o.transpose() * o - RealMatrix::Identity(Eigen::Index(d), Eigen::Index(d)))), 1e-12);
  }
}

TEST(split_seed, distinct_and_stable) {
  EXPECT_EQ(split_seed(7, 3), split_seed(7, 3));
  EXPECT_NE(split_seed(7, 3), split_seed(7, 4));
  EXPECT_NE(split_seed(7, 3), split_seed(8, 3));
}
