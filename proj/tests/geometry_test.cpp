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

#include "qcorr/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "gtest/gtest.h"

#include "qcorr/error.hpp"
#include "test_util.hpp"

using namespace qcorr;

TEST(counting, two_qubits) {
  const CountingReport r = counting_report(2, 2, 2);
  EXPECT_EQ(r.params_class, 13);
  EXPECT_EQ(r.params_full, 15);
  EXPECT_TRUE(r.measure_zero);
  EXPECT_EQ(r.f_value, 2);
  EXPECT_EQ(f_value(2, 3), 12);
  EXPECT_EQ(counting_report(2, 3, 2).f_value, 12);
}

TEST(counting, classical_bound_is_measure_zero_everywhere) {
  for (std::int64_t da = 2; da <= 10; ++da)
    for (std::int64_t db = 2; db <= 10; ++db) {
      const std::int64_t dmin = std::min(da, db);
      const CountingReport r = counting_report(da, db, dmin);
      EXPECT_TRUE(r.measure_zero) << da << "x" << db;
      // Brute-force recount.
      EXPECT_EQ(r.params_class, dmin * (da * da - 1 + db * db - 1) + dmin - 1);
      EXPECT_EQ(r.params_full, da * da * db * db - 1);
    }
}

TEST(counting, gap_equals_f_when_a_is_smaller) {
  for (std::int64_t da = 2; da <= 12; ++da)
    for (std::int64_t db = da; db <= 12; ++db) {
      const CountingReport r = counting_report(da, db, da);
      EXPECT_EQ(r.params_full - r.params_class, f_value(da, db));
      EXPECT_GT(f_value(da, db), 0);
    }
}

TEST(counting, large_s_is_not_measure_zero) {
  EXPECT_FALSE(counting_report(2, 2, 3).measure_zero);
  EXPECT_FALSE(counting_report(3, 3, 16).measure_zero);
}

TEST(counting, rejects_bad_arguments) {
  EXPECT_THROW(counting_report(0, 2, 1), Error);
  EXPECT_THROW(counting_report(2, 2, 0), Error);
  EXPECT_THROW(counting_report(20000, 2, 1), Error);
}

TEST(counting, f_monotone_in_triangle) {
  EXPECT_TRUE(f_monotonicity_check(50));
  for (std::int64_t a = 2; a < 30; ++a)
    for (std::int64_t b = a; b < 30; ++b) {
      EXPECT_LE(f_value(a, b), f_value(a, b + 1));
      if (a + 1 <= b) EXPECT_LE(f_value(a, b), f_value(a + 1, b));
    }
}

TEST(classify, reference_states) {
  const ClassificationReport c = classify(rho_c(), "rho_c");
  EXPECT_EQ(c.region, Region::kClassical);
  EXPECT_EQ(c.rank_l, 2u);
  EXPECT_EQ(c.state_id, "rho_c");
  EXPECT_NEAR(c.discord_a, 0.0, 1e-6);

  const ClassificationReport l = classify(rho_l());
  EXPECT_EQ(l.region, Region::kQuantumLowL);
  EXPECT_NEAR(l.discord_a, 0.201752, 1e-5);
  EXPECT_NEAR(l.discord_b, 0.0, 1e-6);
  EXPECT_FALSE(l.zero_discord_a);
  EXPECT_TRUE(l.zero_discord_b);

  const ClassificationReport w = classify(werner_state(1.0 / 3.0));
  EXPECT_EQ(w.region, Region::kQuantumHighL);
  EXPECT_EQ(w.rank_l, 4u);
  EXPECT_EQ(w.locally_producible_hint, ProducibleHint::kUnknown);
  EXPECT_STREQ(region_name(w.region), "quantum_high_l");
}

TEST(classify, hint_requires_matching_small_ensemble) {
  const ProductEnsemble e = random_ensemble(2, 3, 2, 8);
  const DensityMatrix rho = assemble(e);
  EXPECT_EQ(classify(rho, "", {}, &e).locally_producible_hint, ProducibleHint::kYesConstructed);
  EXPECT_EQ(classify(rho).locally_producible_hint, ProducibleHint::kUnknown);
  const ProductEnsemble other = random_ensemble(2, 3, 2, 9);
  EXPECT_EQ(classify(rho, "", {}, &other).locally_producible_hint, ProducibleHint::kUnknown);
  const ProductEnsemble big = random_ensemble(2, 3, 3, 8);
  EXPECT_EQ(classify(assemble(big), "", {}, &big).locally_producible_hint, ProducibleHint::kUnknown);
  EXPECT_STREQ(hint_name(ProducibleHint::kYesConstructed), "yes_constructed");
}

TEST(classify, qutrit_side_uses_commutator_flags) {
  const ClassificationReport r = classify(schmidt_rank2_pure(3));
  EXPECT_TRUE(std::isnan(r.discord_a));
  EXPECT_TRUE(std::isnan(r.discord_b));
  EXPECT_FALSE(r.discord_from_optimizer_a);
  EXPECT_EQ(r.region, Region::kQuantumHighL);

  const ClassificationReport c = classify(maximally_mixed(3, 2));
  EXPECT_EQ(c.region, Region::kClassical);
  EXPECT_TRUE(std::isnan(c.discord_a));
  EXPECT_NEAR(c.discord_b, 0.0, 1e-9);
}

TEST(monte_carlo, hilbert_schmidt_states_are_full_rank) {
  const MonteCarloSummary s = monte_carlo_regions(2, 2, 200, 2024);
  EXPECT_EQ(s.reports.size(), 200u);
  EXPECT_EQ(s.region_counts[std::size_t(Region::kQuantumHighL)], 200u);
  EXPECT_EQ(s.rank_deficient, 0u);
  EXPECT_GT(s.min_relative_singular_value, 1e-10);
  EXPECT_DOUBLE_EQ(s.fraction(Region::kQuantumHighL), 1.0);
}

TEST(monte_carlo, small_ensembles_never_fire_witness) {
  const MonteCarloSummary s =
      monte_carlo_regions(2, 2, 200, 77, {}, SampleSource::kProductEnsemble, 2);
  EXPECT_EQ(s.region_counts[std::size_t(Region::kQuantumHighL)], 0u);
  EXPECT_EQ(s.low_rank, 200u);
  EXPECT_GT(s.region_counts[std::size_t(Region::kQuantumLowL)], 150u);
}

TEST(monte_carlo, deterministic_and_csv_shaped) {
  const MonteCarloSummary a = monte_carlo_regions(2, 3, 40, 5);
  const MonteCarloSummary b = monte_carlo_regions(2, 3, 40, 5);
  const std::string csv = monte_carlo_csv(a);
  EXPECT_EQ(csv, monte_carlo_csv(b));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "sample_id,rank_l,discord_a,discord_b,region,min_sv_gap");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 41);
  EXPECT_NE(monte_carlo_csv(monte_carlo_regions(2, 3, 40, 6)), csv);
}
