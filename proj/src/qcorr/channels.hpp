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

#include <cstdint>
#include <optional>
#include <vector>

#include "qcorr/linalg.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

/// Completely positive map in Kraus form, X -> sum_k K_k X K_k^dagger.
///
/// Trace-preserving channels satisfy sum K^dagger K = I within 1e-10. With
/// `trace_decreasing` set the requirement relaxes to sum K^dagger K <= I; the
/// caller is responsible for any renormalization of outputs.
class QuantumChannel {
 public:
  QuantumChannel(std::vector<ComplexMatrix> kraus, bool trace_decreasing = false);

  static QuantumChannel identity(std::size_t dim);

  std::size_t dim_in() const { return dim_in_; }
  std::size_t dim_out() const { return dim_out_; }
  bool trace_decreasing() const { return trace_decreasing_; }
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }

  /// max |sum K^dagger K - I|.
  double completeness_residual() const;

 private:
  std::vector<ComplexMatrix> kraus_;
  std::size_t dim_in_;
  std::size_t dim_out_;
  bool trace_decreasing_;
};

ComplexMatrix apply(const QuantumChannel& channel, const ComplexMatrix& m);

/// (Phi_A (x) Phi_B)(rho); an empty optional stands for the identity map.
/// Throws kInvalidInput if a trace-decreasing map produces a non-normalized
/// output, since the result would not be a state.
DensityMatrix apply_local(const std::optional<QuantumChannel>& channel_a,
                          const std::optional<QuantumChannel>& channel_b,
                          const DensityMatrix& rho);

/// Unnormalized (Phi_A (x) Phi_B)(m) for operators on the product space.
ComplexMatrix apply_local_operator(const std::optional<QuantumChannel>& channel_a,
                                   const std::optional<QuantumChannel>& channel_b,
                                   const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b);

/// Phi(X) = |0><0|X|0><0| + |+><1|X|1><+|, which maps rho_c to rho_l on A.
QuantumChannel phi_channel();

/// Kraus operators sqrt(w_j^i)|psi_j^i><source_i| built from the spectral
/// decomposition of each target, so that |source_i><source_i| -> targets[i].
/// Needs one target per source ket and a complete source basis.
QuantumChannel state_preparation_channel(const std::vector<DensityMatrix>& targets,
                                         const std::vector<ComplexVector>& source_basis);

struct LocalCreation {
  DensityMatrix seed;  // sum_i p_i |i><i| (x) |i><i|
  QuantumChannel channel_a;
  QuantumChannel channel_b;
  DensityMatrix output;
  double residual = 0.0;  // max-entry distance between output and the target
};

/// Builds a classical seed and local preparation channels whose product maps
/// the seed onto assemble(target). Throws kDomainPrecondition for s > d_min.
LocalCreation synthesize_local_creation(const ProductEnsemble& target);

/// sum_ij p_ij Pi_i (x) Pi_j rewritten as sum_i p_i Pi_i (x) rhohat_i with
/// p_i rhohat_i = sum_j p_ij Pi_j. Rows with p_i = 0 are dropped.
ProductEnsemble reduce_classical(const RealMatrix& probabilities);

struct MonotonicityTrial {
  std::size_t l_before = 0;
  std::size_t l_after = 0;
  bool ok = false;
};

MonotonicityTrial l_monotonicity_trial(const DensityMatrix& rho, const QuantumChannel& channel,
                                       Subsystem side, double rank_tol = tolerance::kRank);

/// Isometry from the column-orthonormalized Ginibre block, sliced into
/// `kraus_count` Kraus operators. kraus_count must lie in [1, dim^2].
QuantumChannel random_channel(std::size_t dim, std::size_t kraus_count, std::uint64_t seed);
QuantumChannel random_channel(std::size_t dim, std::size_t kraus_count, Rng& rng);

struct MonotonicitySweep {
  std::size_t dim_a = 0;
  std::size_t dim_b = 0;
  std::size_t trials = 0;
  std::size_t violations = 0;
  std::size_t unchanged = 0;  // trials with l_after == l_before
  std::vector<std::size_t> first_violations;  // trial indices, at most 16
};

/// Runs `trials` seeded trials. Even trials use Hilbert-Schmidt random
/// states, odd trials assembled random ensembles with 1..d_min^2 terms so
/// that low-rank inputs are covered. Channels act on a random side and are
/// either random with 1..d^2 Kraus operators or, with probability 1/4,
/// measure-and-prepare maps. Per-trial seeds come from split_seed.
MonotonicitySweep monotonicity_sweep(std::size_t dim_a, std::size_t dim_b, std::size_t trials,
                                     std::uint64_t seed, double rank_tol = tolerance::kRank);

}  // namespace qcorr
