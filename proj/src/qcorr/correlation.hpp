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

#include <optional>
#include <vector>

#include "qcorr/linalg.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

/// r_ij = tr(rho (A_i (x) B_j)). Throws kInvalidInput when the imaginary
/// residue of any coefficient exceeds 1e-9.
RealMatrix correlation_matrix(const DensityMatrix& rho, const HermitianBasis& basis_a,
                              const HermitianBasis& basis_b);

/// Singular-value view of the correlation matrix.
///
/// rho = sum_{i<L} c_i S_i (x) F_i with S_i = sum_j U_ji A_j and
/// F_i = sum_j V_ji B_j. Only the first L operators are materialized.
struct CorrelationAnalysis {
  std::size_t dim_a = 0;
  std::size_t dim_b = 0;
  RealMatrix r_matrix;
  RealVector singular_values;  // full list, non-increasing
  std::size_t rank_l = 0;
  std::vector<ComplexMatrix> ops_a;
  std::vector<ComplexMatrix> ops_b;

  /// c_L / c_{L+1}; +inf when no discarded tail exists or it is exactly zero.
  double rank_gap() const;

  /// c_L / c_1, the distance of the spectrum from the next-lower rank.
  double relative_min_singular_value() const;

  /// sum_i c_i S_i (x) F_i.
  ComplexMatrix reconstruct() const;
};

CorrelationAnalysis analyze(const DensityMatrix& rho, const HermitianBasis& basis_a,
                            const HermitianBasis& basis_b,
                            double rank_tol = tolerance::kRank);

/// Analysis in the generalized Gell-Mann bases.
CorrelationAnalysis analyze(const DensityMatrix& rho, double rank_tol = tolerance::kRank);

/// Largest max-entry norm of [X_i, X_j] over all pairs.
double max_pairwise_commutator(const std::vector<ComplexMatrix>& ops);

struct DiscordWitnessReport {
  std::size_t rank_l = 0;
  std::size_t d_min = 0;
  bool witness_fired = false;  // rank_l > d_min
  double max_commutator_a = 0.0;
  double max_commutator_b = 0.0;
  bool zero_discord_a = false;
  bool zero_discord_b = false;
  double rank_gap = 0.0;
  RealVector singular_values;
};

DiscordWitnessReport witness_report(const CorrelationAnalysis& analysis,
                                    double commutator_tol = tolerance::kCommutator);
DiscordWitnessReport witness_report(const DensityMatrix& rho,
                                    double rank_tol = tolerance::kRank,
                                    double commutator_tol = tolerance::kCommutator);

struct EnsembleRankCheck {
  std::size_t terms = 0;
  std::size_t gram_rank_a = 0;
  std::size_t gram_rank_b = 0;
  bool independent_a = false;
  bool independent_b = false;
  /// s when both factor families are independent; otherwise the upper bound
  /// min(gram_rank_a, gram_rank_b), which is strictly below s.
  std::size_t predicted_l = 0;
  std::size_t measured_l = 0;

  /// The theorem's claim for this ensemble: measured == s exactly when both
  /// sides are independent, and measured < s otherwise.
  bool consistent() const;
};

EnsembleRankCheck ensemble_rank_theorem_check(const ProductEnsemble& ensemble,
                                              double rank_tol = tolerance::kRank);

/// One term of the reduced operator combination; the coefficient is the
/// trace of the mixed operator and the operators are trace-normalized when
/// that trace is nonzero.
struct ReducedTerm {
  double coefficient = 0.0;
  ComplexMatrix operator_a;
  ComplexMatrix operator_b;
};

struct ReducedEnsemble {
  Subsystem dependent_side = Subsystem::kA;
  std::size_t eliminated_index = 0;
  std::vector<double> dependence;  // x_i for i != eliminated_index, in term order
  bool all_coefficients_nonnegative = false;  // every x_i >= 0
  bool mixed_operators_positive = false;      // every X_i is PSD (-1e-9)
  std::vector<ReducedTerm> terms;

  ComplexMatrix reassemble() const;
};

/// Eliminates one term using a linear dependence among the factor states,
/// rho_k = sum_{i != k} x_i rho_i. Throws kDomainPrecondition when both
/// factor families are linearly independent.
ReducedEnsemble reduce_dependent_ensemble(const ProductEnsemble& ensemble,
                                          double rank_tol = tolerance::kRank);

}  // namespace qcorr
