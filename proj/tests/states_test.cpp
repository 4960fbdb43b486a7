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

#include "qcorr/states.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>

#include "gtest/gtest.h"

#include "qcorr/correlation.hpp"
#include "qcorr/discord.hpp"
#include "qcorr/error.hpp"
#include "qcorr/serialization.hpp"
#include "test_util.hpp"

using namespace qcorr;
using qcorr::testing::max_diff;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("qcorr_states_test_" + name);
}

}  // namespace

TEST(density_matrix, rejects_invalid_matrices) {
  ComplexMatrix m = ComplexMatrix::Identity(4, 4) / 4.0;
  m(0, 1) = 0.1;  // not Hermitian
  EXPECT_THROW(DensityMatrix(m, 2, 2), Error);
  EXPECT_THROW(DensityMatrix(ComplexMatrix(ComplexMatrix::Identity(4, 4) * 0.9 / 4.0), 2, 2), Error);
  ComplexMatrix negative = ComplexMatrix::Zero(2, 2);
  negative(0, 0) = 1.2;
  negative(1, 1) = -0.2;
  EXPECT_THROW(DensityMatrix(negative, 2, 1), Error);
  EXPECT_THROW(DensityMatrix(ComplexMatrix(ComplexMatrix::Identity(6, 6) / 6.0), 2, 2), Error);
}

TEST(classical_state, rho_c_seed_and_edge_distributions) {
  RealMatrix p = RealMatrix::Zero(2, 2);
  p(0, 0) = p(1, 1) = 0.5;
  EXPECT_LT(max_diff(classical_state(p).matrix(), rho_c().matrix()), 1e-15);

  RealMatrix single = RealMatrix::Zero(2, 3);
  single(1, 2) = 1.0;
  const DensityMatrix pure = classical_state(single);
  EXPECT_NEAR(pure.purity(), 1.0, 1e-15);
  EXPECT_EQ(analyze(pure).rank_l, 1u);

  const RealMatrix uniform = RealMatrix::Constant(3, 2, 1.0 / 6.0);
  EXPECT_LT(max_diff(classical_state(uniform).matrix(), maximally_mixed(3, 2).matrix()), 1e-15);
}

TEST(classical_state, validates_inputs) {
  RealMatrix p = RealMatrix::Constant(2, 2, 0.3);
  EXPECT_THROW(classical_state(p), Error);
  RealMatrix neg = RealMatrix::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  EXPECT_THROW(classical_state(neg), Error);
  std::vector<ComplexVector> skewed = {basis_ket(2, 0), ComplexVector(ComplexVector::Ones(2) / std::sqrt(2.0))};
  RealMatrix ok = RealMatrix::Constant(2, 2, 0.25);
  EXPECT_THROW(classical_state(ok, skewed, computational_basis(2)), Error);
}

TEST(classical_state, zero_discord_by_both_criteria) {
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const RealMatrix p = qcorr::testing::random_distribution(2, 2, rng);
    const DensityMatrix rho =
        classical_state(p, qcorr::testing::random_basis(2, rng), qcorr::testing::random_basis(2, rng));
    const DiscordWitnessReport w = witness_report(rho);
    EXPECT_TRUE(w.zero_discord_a);
    EXPECT_TRUE(w.zero_discord_b);
    EXPECT_LE(discord(rho, Subsystem::kA).value, 1e-6);
    EXPECT_LE(discord(rho, Subsystem::kB).value, 1e-6);
  }
}

TEST(werner_state, family_members) {
  EXPECT_LT(max_diff(werner_state(0.0).matrix(), maximally_mixed(2, 2).matrix()), 1e-15);
  EXPECT_NEAR(von_neumann_entropy(werner_state(1.0).matrix()), 0.0, 1e-12);
  EXPECT_LT(max_diff(werner_state(1.0).matrix(), bell_state().matrix()), 1e-15);
  const DensityMatrix w = werner_state(1.0 / 3.0);
  EXPECT_NEAR(w.matrix()(0, 0).real(), 1.0 / 6.0 + 1.0 / 6.0, 1e-15);
  EXPECT_NEAR(w.matrix()(0, 3).real(), 1.0 / 6.0, 1e-15);
  EXPECT_THROW(werner_state(1.2), Error);
  EXPECT_THROW(werner_state(-0.5), Error);
}

TEST(named_states, rho_l_and_rho_c) {
  const RealVector c_spectrum = hermitian_eigenvalues(rho_c().matrix());
  EXPECT_NEAR(c_spectrum(0), 0.0, 1e-15);
  EXPECT_NEAR(c_spectrum(1), 0.0, 1e-15);
  EXPECT_NEAR(c_spectrum(2), 0.5, 1e-15);
  EXPECT_NEAR(c_spectrum(3), 0.5, 1e-15);
  EXPECT_NEAR(rho_l().matrix().trace().real(), 1.0, 1e-15);

  // |+1> = (|01> + |11>)/sqrt(2); rho_l entries by hand.
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(0, 0) = 0.5;
  expected(1, 1) = expected(1, 3) = expected(3, 1) = expected(3, 3) = 0.25;
  EXPECT_LT(max_diff(rho_l().matrix(), expected), 1e-15);
}

TEST(schmidt_rank2_pure, marginals_and_qubit_case) {
  EXPECT_LT(max_diff(schmidt_rank2_pure(2).matrix(), werner_state(1.0).matrix()), 1e-15);
  for (std::size_t d : {2u, 3u, 5u}) {
    const DensityMatrix psi = schmidt_rank2_pure(d);
    ComplexMatrix expected = ComplexMatrix::Zero(Eigen::Index(d), Eigen::Index(d));
    expected(0, 0) = expected(1, 1) = 0.5;
    EXPECT_LT(max_diff(psi.marginal(Subsystem::kA), expected), 1e-15);
    EXPECT_LT(max_diff(psi.marginal(Subsystem::kB), expected), 1e-15);
  }
  EXPECT_THROW(schmidt_rank2_pure(1), Error);
}

TEST(random_state, deterministic_per_seed) {
  const DensityMatrix a = random_state(2, 3, 42);
  const DensityMatrix b = random_state(2, 3, 42);
  EXPECT_EQ(a.matrix(), b.matrix());
  EXPECT_NE(a.matrix(), random_state(2, 3, 43).matrix());
}

TEST(random_state, invariant_sweep) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    // Construction validates; recheck the invariants here explicitly.
    const DensityMatrix rho = random_state(2, 2, seed);
    EXPECT_LE(hermiticity_defect(rho.matrix()), 1e-12);
    EXPECT_NEAR(rho.matrix().trace().real(), 1.0, 1e-12);
    EXPECT_GE(hermitian_eigenvalues(rho.matrix()).minCoeff(), -1e-9);
  }
}

TEST(random_state, hilbert_schmidt_mean_purity) {
  // E tr(rho^2) = 2N/(N^2+1) for the Hilbert-Schmidt ensemble; N = 4 gives 8/17.
  double total = 0.0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) total += random_state(2, 2, seed + 5000).purity();
  EXPECT_NEAR(total / 1000.0, 8.0 / 17.0, 0.02);
}

TEST(random_ensemble, weights_and_rank_bound) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t s = 1 + seed % 4;
    const ProductEnsemble e = random_ensemble(2, 3, s, seed);
    double total = 0.0;
    for (const auto& t : e.terms) total += t.weight;
    EXPECT_NEAR(total, 1.0, 1e-12);
    EXPECT_LE(analyze(assemble(e)).rank_l, s);
  }
  EXPECT_EQ(analyze(assemble(random_ensemble(3, 3, 1, 9))).rank_l, 1u);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    EXPECT_LE(analyze(assemble(random_ensemble(2, 2, 2, seed))).rank_l, 2u);
  }
}

TEST(builtin_state, literals) {
  EXPECT_EQ(builtin_state("werner:0.25").matrix(), werner_state(0.25).matrix());
  EXPECT_EQ(builtin_state("rho_l").matrix(), rho_l().matrix());
  EXPECT_EQ(builtin_state("rho_c").matrix(), rho_c().matrix());
  EXPECT_EQ(builtin_state("bell").matrix(), bell_state().matrix());
  EXPECT_EQ(builtin_state("schmidt2:5").dim_a(), 5u);
  EXPECT_EQ(builtin_state("mixed:2:3").dim_b(), 3u);
  EXPECT_THROW(builtin_state("werner:abc"), Error);
  EXPECT_THROW(builtin_state("ghz"), Error);
  EXPECT_THROW(builtin_state("schmidt2:0"), Error);
}

TEST(state_file, save_load_is_exact) {
  const auto path = temp_file("roundtrip.json").string();
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const DensityMatrix rho = random_state(2, 3, seed);
    save_state(rho, path);
    const DensityMatrix back = load_state(path);
    EXPECT_EQ(back.dim_a(), 2u);
    EXPECT_EQ(back.dim_b(), 3u);
    EXPECT_EQ(back.matrix(), rho.matrix());
  }
  std::filesystem::remove(path);
}

TEST(state_file, rejects_invalid_content) {
  const auto path = temp_file("bad.json").string();
  auto write = [&](const std::string& text) {
    std::ofstream(path) << text;
  };
  write(R"({"dim_a":1,"dim_b":2,"matrix":[[[0.5,0],[0.1,0]],[[0.2,0],[0.5,0]]]})");
  EXPECT_THROW(load_state(path), Error);  // not Hermitian
  write(R"({"dim_a":1,"dim_b":2,"matrix":[[[0.45,0],[0,0]],[[0,0],[0.45,0]]]})");
  EXPECT_THROW(load_state(path), Error);  // trace 0.9
  write(R"({"dim_a":1,"dim_b":2,"matrix":[[[0.5,0]],[[0,0],[0.5,0]]]})");
  EXPECT_THROW(load_state(path), Error);  // ragged
  write(R"({"dim_a":2,"matrix":[[[1,0]]]})");
  EXPECT_THROW(load_state(path), Error);  // missing dim_b
  write("not json");
  EXPECT_THROW(load_state(path), Error);
  std::filesystem::remove(path);
  EXPECT_THROW(load_state(path), Error);  // missing file
}

TEST(state_file, embeds_factor_dimensions) {
  // 12 = 2*6 = 3*4: the file must carry the split.
  const DensityMatrix rho = maximally_mixed(3, 4);
  const Json j = state_to_json(rho);
  EXPECT_EQ(j.at("dim_a"), 3);
  EXPECT_EQ(j.at("dim_b"), 4);
  Json swapped = j;
  swapped["dim_a"] = 2;
  swapped["dim_b"] = 6;
  EXPECT_EQ(state_from_json(swapped).dim_a(), 2u);
}
