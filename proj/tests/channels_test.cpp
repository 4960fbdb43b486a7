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

#include "qcorr/channels.hpp"

#include <cmath>

#include "gtest/gtest.h"

#include "qcorr/correlation.hpp"
#include "qcorr/discord.hpp"
#include "qcorr/error.hpp"
#include "test_util.hpp"

using namespace qcorr;
using qcorr::testing::kron_oracle;
using qcorr::testing::max_diff;
using qcorr::testing::pauli;

namespace {

ComplexVector plus_ket() {
  ComplexVector v(2);
  v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  return v;
}

QuantumChannel qubit_depolarizing(double p) {
  std::vector<ComplexMatrix> k{std::sqrt(1 - 3 * p / 4) * pauli(0)};
  for (int i = 1; i < 4; ++i) k.push_back(std::sqrt(p / 4) * pauli(i));
  return QuantumChannel(k);
}

// Kraus sum by hand, with the product map built through kron_oracle.
ComplexMatrix apply_oracle(const QuantumChannel& a, const QuantumChannel& b, const ComplexMatrix& m) {
  ComplexMatrix out = ComplexMatrix::Zero(a.dim_out() * b.dim_out(), a.dim_out() * b.dim_out());
  for (const auto& ka : a.kraus())
    for (const auto& kb : b.kraus()) {
      const ComplexMatrix k = kron_oracle(ka, kb);
      out += k * m * k.adjoint();
    }
  return out;
}

}  // namespace

TEST(quantum_channel, validation) {
  EXPECT_THROW(QuantumChannel(std::vector<ComplexMatrix>{}), Error);
  EXPECT_THROW(QuantumChannel(std::vector<ComplexMatrix>{ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(2, 2)}), Error);
  EXPECT_THROW(QuantumChannel(std::vector<ComplexMatrix>{ComplexMatrix::Identity(2, 2), ComplexMatrix::Zero(3, 3)}), Error);
  EXPECT_NO_THROW(QuantumChannel(std::vector<ComplexMatrix>{0.5 * ComplexMatrix::Identity(2, 2)}, true));
  EXPECT_THROW(QuantumChannel(std::vector<ComplexMatrix>{2.0 * ComplexMatrix::Identity(2, 2)}, true), Error);
  EXPECT_LT(phi_channel().completeness_residual(), 1e-15);
  EXPECT_EQ(QuantumChannel::identity(3).dim_out(), 3u);
}

TEST(phi_channel, maps_basis_states) {
  const QuantumChannel phi = phi_channel();
  EXPECT_LT(max_diff(qcorr::apply(phi, projector(basis_ket(2, 0))), projector(basis_ket(2, 0))), 1e-15);
  EXPECT_LT(max_diff(qcorr::apply(phi, projector(basis_ket(2, 1))), projector(plus_ket())), 1e-15);
}

TEST(phi_channel, creates_discord_from_classical_state) {
  const DensityMatrix out = apply_local(phi_channel(), std::nullopt, rho_c());
  EXPECT_LT(max_diff(out.matrix(), rho_l().matrix()), 1e-14);
  EXPECT_NEAR(discord(rho_c(), Subsystem::kA).value, 0.0, 1e-9);
  EXPECT_GT(discord(out, Subsystem::kA).value, 0.2);
  EXPECT_EQ(analyze(out).rank_l, analyze(rho_c()).rank_l);
}

TEST(apply_local, matches_kraus_oracle) {
  Rng rng(1);
  for (int trial = 0; trial < 10; ++trial) {
    const QuantumChannel a = random_channel(2, 1 + trial % 4, rng);
    const QuantumChannel b = random_channel(3, 1 + trial % 9, rng);
    const DensityMatrix rho = random_state(2, 3, rng);
    EXPECT_LT(max_diff(apply_local(a, b, rho).matrix(), apply_oracle(a, b, rho.matrix())), 1e-12);
    EXPECT_LT(max_diff(apply_local(a, std::nullopt, rho).matrix(),
                       apply_oracle(a, QuantumChannel::identity(3), rho.matrix())),
              1e-12);
  }
}

TEST(apply_local, depolarizing_shrinks_bloch_vector) {
  const DensityMatrix out = apply_local(std::nullopt, qubit_depolarizing(1.0), werner_state(1.0));
  EXPECT_LT(max_diff(out.matrix(), maximally_mixed(2, 2).matrix()), 1e-14);
  const DensityMatrix half = apply_local(qubit_depolarizing(0.5), std::nullopt, werner_state(1.0));
  EXPECT_LT(max_diff(half.matrix(), werner_state(0.5).matrix()), 1e-14);
}

TEST(apply_local, rejects_dimension_mismatch) {
  EXPECT_THROW(apply_local(QuantumChannel::identity(3), std::nullopt, rho_l()), Error);
  EXPECT_THROW(apply_local(std::nullopt, QuantumChannel::identity(3), rho_l()), Error);
}

TEST(random_channel, complete_and_deterministic) {
  for (std::size_t d = 2; d <= 4; ++d)
    for (std::size_t k = 1; k <= d * d; ++k) {
      const QuantumChannel c = random_channel(d, k, 100 + d * 10 + k);
      EXPECT_LT(c.completeness_residual(), 1e-10);
      EXPECT_EQ(c.kraus().size(), k);
    }
  EXPECT_EQ(random_channel(3, 4, 7).kraus()[2], random_channel(3, 4, 7).kraus()[2]);
  EXPECT_THROW(random_channel(2, 5, 1), Error);
  EXPECT_THROW(random_channel(2, 0, 1), Error);
}

TEST(state_preparation_channel, prepares_targets) {
  Rng rng(4);
  std::vector<DensityMatrix> targets;
  for (int i = 0; i < 3; ++i) targets.push_back(random_state(2, 1, rng));
  const auto source = qcorr::testing::random_basis(3, rng);
  const QuantumChannel c = state_preparation_channel(targets, source);
  EXPECT_LT(c.completeness_residual(), 1e-10);
  EXPECT_EQ(c.dim_in(), 3u);
  EXPECT_EQ(c.dim_out(), 2u);
  for (int i = 0; i < 3; ++i)
    EXPECT_LT(max_diff(qcorr::apply(c, projector(source[i])), targets[i].matrix()), 1e-12);
  EXPECT_THROW(state_preparation_channel({targets[0]}, source), Error);
}

TEST(synthesize_local_creation, rho_l) {
  ProductEnsemble e;
  e.dim_a = e.dim_b = 2;
  e.terms.push_back({0.5, DensityMatrix::local(projector(basis_ket(2, 0))),
                     DensityMatrix::local(projector(basis_ket(2, 0)))});
  e.terms.push_back({0.5, DensityMatrix::local(projector(plus_ket())),
                     DensityMatrix::local(projector(basis_ket(2, 1)))});
  const LocalCreation c = synthesize_local_creation(e);
  EXPECT_LT(c.residual, 1e-12);
  EXPECT_LT(max_diff(c.output.matrix(), rho_l().matrix()), 1e-12);
  EXPECT_LT(max_diff(c.seed.matrix(), rho_c().matrix()), 1e-14);
  const DiscordWitnessReport w = witness_report(c.seed);
  EXPECT_TRUE(w.zero_discord_a && w.zero_discord_b);
  EXPECT_GT(discord(c.output, Subsystem::kA).value, 0.2);
}

TEST(synthesize_local_creation, random_targets_up_to_d_min) {
  for (std::size_t da = 2; da <= 4; ++da)
    for (std::size_t db = 2; db <= 4; ++db)
      for (std::size_t s = 1; s <= std::min(da, db); ++s) {
        const ProductEnsemble e = random_ensemble(da, db, s, da * 100 + db * 10 + s);
        const LocalCreation c = synthesize_local_creation(e);
        EXPECT_LT(c.residual, 1e-10);
        EXPECT_LT(max_diff(c.output.matrix(), assemble(e).matrix()), 1e-10);
        EXPECT_LT(c.channel_a.completeness_residual(), 1e-10);
        EXPECT_LT(c.channel_b.completeness_residual(), 1e-10);
        // The seed is classical in the computational basis.
        const DiscordWitnessReport w = witness_report(c.seed);
        EXPECT_TRUE(w.zero_discord_a && w.zero_discord_b);
        // Oracle: apply the returned channels independently.
        EXPECT_LT(max_diff(apply_oracle(c.channel_a, c.channel_b, c.seed.matrix()), assemble(e).matrix()),
                  1e-10);
      }
}

TEST(synthesize_local_creation, too_many_terms_is_domain_error) {
  try {
    synthesize_local_creation(random_ensemble(2, 3, 3, 1));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDomainPrecondition);
    EXPECT_NE(std::string(e.what()).find("d_min"), std::string::npos);
  }
}

TEST(reduce_classical, reassembles_the_classical_state) {
  Rng rng(17);
  for (int da = 2; da <= 4; ++da)
    for (int db = 2; db <= 4; ++db) {
      const RealMatrix p = qcorr::testing::random_distribution(da, db, rng);
      const ProductEnsemble e = reduce_classical(p);
      EXPECT_LE(e.terms.size(), std::size_t(da));
      EXPECT_LT(max_diff(assemble(e).matrix(), classical_state(p).matrix()), 1e-14);
      for (const auto& t : e.terms) {
        const ComplexMatrix diag = t.state_a.matrix().diagonal().asDiagonal();
        EXPECT_LT(max_diff(t.state_a.matrix(), diag), 1e-15);
      }
    }
}

TEST(l_monotonicity, single_trials) {
  const MonotonicityTrial t = l_monotonicity_trial(werner_state(0.5), qubit_depolarizing(1.0), Subsystem::kA);
  EXPECT_EQ(t.l_before, 4u);
  EXPECT_EQ(t.l_after, 1u);
  EXPECT_TRUE(t.ok);
  const MonotonicityTrial u = l_monotonicity_trial(rho_c(), phi_channel(), Subsystem::kA);
  EXPECT_EQ(u.l_before, 2u);
  EXPECT_EQ(u.l_after, 2u);
  EXPECT_TRUE(u.ok);
}

TEST(l_monotonicity, random_sweep_has_no_violations) {
  for (auto [da, db] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}, {3, 3}}) {
    const MonotonicitySweep s = monotonicity_sweep(da, db, 200, 99);
    EXPECT_EQ(s.trials, 200u);
    EXPECT_EQ(s.violations, 0u);
    EXPECT_TRUE(s.first_violations.empty());
    EXPECT_GT(s.unchanged, 0u);
  }
  const MonotonicitySweep a = monotonicity_sweep(2, 2, 50, 5);
  const MonotonicitySweep b = monotonicity_sweep(2, 2, 50, 5);
  EXPECT_EQ(a.unchanged, b.unchanged);
}
