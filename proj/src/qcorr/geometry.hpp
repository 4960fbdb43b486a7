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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcorr/discord.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

/// Parameter counts for convex sums of s product states versus the full
/// state body. Pure integer arithmetic.
struct CountingReport {
  std::int64_t dim_a = 0;
  std::int64_t dim_b = 0;
  std::int64_t s = 0;
  std::int64_t params_class = 0;  // s(d_A^2 - 1 + d_B^2 - 1) + s - 1
  std::int64_t params_full = 0;   // d_A^2 d_B^2 - 1
  bool measure_zero = false;      // params_class < params_full
  std::int64_t f_value = 0;       // f(d_A, d_B)
};

/// f(d_A, d_B) = d_A^2 d_B^2 - d_A^3 - d_A d_B^2 + d_A.
std::int64_t f_value(std::int64_t dim_a, std::int64_t dim_b);

CountingReport counting_report(std::int64_t dim_a, std::int64_t dim_b, std::int64_t s);

/// Exhaustive scan over 2 <= d_A <= d_B <= max_dim: f > 0 everywhere and f
/// nondecreasing in each argument inside the scanned triangle.
bool f_monotonicity_check(std::int64_t max_dim);

enum class Region { kClassical, kQuantumLowL, kQuantumHighL };
const char* region_name(Region region);

enum class ProducibleHint { kUnknown, kYesConstructed };
const char* hint_name(ProducibleHint hint);

struct ClassifyOptions {
  double rank_tol = tolerance::kRank;
  double discord_tol = tolerance::kDiscord;
  double commutator_tol = tolerance::kCommutator;
  DiscordOptions discord;
};

struct ClassificationReport {
  std::string state_id;
  std::size_t rank_l = 0;
  std::size_t d_min = 0;
  /// NaN when the measured side is not a qubit; the commutator flags stand in.
  double discord_a = 0.0;
  double discord_b = 0.0;
  bool discord_from_optimizer_a = true;
  bool discord_from_optimizer_b = true;
  bool zero_discord_a = false;  // commutator test
  bool zero_discord_b = false;
  double max_commutator_a = 0.0;
  double max_commutator_b = 0.0;
  double relative_min_singular_value = 0.0;  // c_L / c_1
  Region region = Region::kClassical;
  ProducibleHint locally_producible_hint = ProducibleHint::kUnknown;
};

/// Places a state in the discord / correlation-rank picture. The hint is
/// yes_constructed only when `ensemble` has s <= d_min terms and assembles
/// to rho within 1e-9; no decision is attempted otherwise.
ClassificationReport classify(const DensityMatrix& rho, const std::string& state_id = "",
                              const ClassifyOptions& options = {},
                              const ProductEnsemble* ensemble = nullptr);

enum class SampleSource { kHilbertSchmidt, kProductEnsemble };

struct MonteCarloSummary {
  std::size_t dim_a = 0;
  std::size_t dim_b = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  SampleSource source = SampleSource::kHilbertSchmidt;
  std::size_t ensemble_terms = 0;
  std::array<std::size_t, 3> region_counts{};  // indexed by Region
  std::size_t rank_deficient = 0;              // rank_l < min(d_A^2, d_B^2)
  std::size_t low_rank = 0;                    // rank_l <= d_min
  double min_relative_singular_value = 0.0;    // min over samples of c_L / c_1
  std::vector<ClassificationReport> reports;

  double fraction(Region region) const;
};

/// Seeded batch classification; per-sample seeds come from split_seed, so the
/// result is identical for any worker count.
MonteCarloSummary monte_carlo_regions(std::size_t dim_a, std::size_t dim_b, std::size_t samples,
                                      std::uint64_t seed, const ClassifyOptions& options = {},
                                      SampleSource source = SampleSource::kHilbertSchmidt,
                                      std::size_t ensemble_terms = 2);

/// `sample_id,rank_l,discord_a,discord_b,region,min_sv_gap`.
std::string monte_carlo_csv(const MonteCarloSummary& summary);

}  // namespace qcorr
