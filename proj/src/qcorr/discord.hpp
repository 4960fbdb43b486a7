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
#include <span>
#include <string>
#include <vector>

#include "qcorr/linalg.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

/// S(rho_A) + S(rho_B) - S(rho), in bits.
double mutual_information(const DensityMatrix& rho);

struct DiscordOptions {
  // Qubit measured subsystem: Bloch-sphere grid over polar [0, pi/2] and
  // azimuth [0, 2pi), then simplex refinement from the best grid points.
  std::size_t azimuthal_points = 64;
  std::size_t polar_points = 32;
  std::size_t refinement_starts = 5;
  double simplex_tolerance = 1e-9;
  std::size_t max_iterations = 5000;
  // Measured dimension >= 3: multi-start search over Givens-rotation angles.
  std::size_t qudit_random_starts = 12;
  std::uint64_t qudit_seed = 0x9d2c5680u;
  // Values in [-zero_clamp, 0) are reported as 0.
  double zero_clamp = 1e-9;
};

struct OptimizerSample {
  std::vector<double> candidate;  // (polar, azimuth) or rotation angles
  double value = 0.0;             // conditional entropy sum_k p_k S(rho_k)
};

struct DiscordResult {
  double value = 0.0;
  Subsystem measured = Subsystem::kA;
  /// Bloch vector n of the optimal measurement (I +- n.sigma)/2; qubit only.
  std::optional<Eigen::Vector3d> bloch_vector;
  /// Columns are the optimal measurement kets.
  ComplexMatrix measurement_basis;
  double mutual_information = 0.0;
  double classical_correlation = 0.0;
  bool converged = true;
  /// False for measured dimension >= 3, where the search is best-effort.
  bool certified = true;
  std::size_t evaluations = 0;
  std::vector<OptimizerSample> optimizer_trace;
};

/// Ollivier-Zurek discord with rank-one projective measurements on `measured`.
DiscordResult discord(const DensityMatrix& rho, Subsystem measured,
                      const DiscordOptions& options = {});

/// sum_k p_k S(rho_other|k) for the measurement whose kets are the columns of
/// `basis`. Exposed for tests and brute-force cross-checks.
double conditional_entropy(const DensityMatrix& rho, Subsystem measured,
                           const ComplexMatrix& basis);

struct SweepRow {
  double z = 0.0;
  double discord = 0.0;
  std::size_t rank_l = 0;
  bool witness_fired = false;
};

/// Werner-family sweep, discord measured on A.
std::vector<SweepRow> discord_sweep_werner(std::span<const double> z_values,
                                           const DiscordOptions& options = {},
                                           double rank_tol = tolerance::kRank);

/// `z,discord,rank_l,witness_fired` with 9 significant digits.
std::string sweep_csv(std::span<const SweepRow> rows);

}  // namespace qcorr
