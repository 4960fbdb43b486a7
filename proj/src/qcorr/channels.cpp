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

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qcorr/correlation.hpp"
#include "qcorr/error.hpp"
#include "qcorr/parallel.hpp"

namespace qcorr {

QuantumChannel::QuantumChannel(std::vector<ComplexMatrix> kraus, bool trace_decreasing)
    : kraus_(std::move(kraus)), dim_in_(0), dim_out_(0), trace_decreasing_(trace_decreasing) {
  if (kraus_.empty()) fail(ErrorKind::kInvalidInput, "channel: no Kraus operators");
  dim_out_ = static_cast<std::size_t>(kraus_[0].rows());
  dim_in_ = static_cast<std::size_t>(kraus_[0].cols());
  if (dim_in_ == 0 || dim_out_ == 0) fail(ErrorKind::kInvalidInput, "channel: empty Kraus operator");
  for (const auto& k : kraus_) {
    if (std::size_t(k.rows()) != dim_out_ || std::size_t(k.cols()) != dim_in_) {
      fail(ErrorKind::kDimensionMismatch, "channel: Kraus operators of unequal shape");
    }
    if (!k.allFinite()) fail(ErrorKind::kInvalidInput, "channel: non-finite Kraus entries");
  }
  if (trace_decreasing_) {
    const auto n = static_cast<Eigen::Index>(dim_in_);
    ComplexMatrix slack = ComplexMatrix::Identity(n, n);
    for (const auto& k : kraus_) slack -= k.adjoint() * k;
    const double min_eig = hermitian_eigenvalues(hermitian_part(slack)).minCoeff();
    if (min_eig < -tolerance::kCompleteness) {
      std::ostringstream os;
      os << "channel: sum K^dagger K exceeds the identity (slack eigenvalue " << min_eig << ")";
      fail(ErrorKind::kInvalidInput, os.str());
    }
  } else {
    const double residual = completeness_residual();
    if (residual > tolerance::kCompleteness) {
      std::ostringstream os;
      os << "channel: not trace preserving (max |sum K^dagger K - I| = " << residual << ")";
      fail(ErrorKind::kInvalidInput, os.str());
    }
  }
}

QuantumChannel QuantumChannel::identity(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return QuantumChannel({ComplexMatrix::Identity(n, n)});
}

double QuantumChannel::completeness_residual() const {
  const auto n = static_cast<Eigen::Index>(dim_in_);
  ComplexMatrix sum = -ComplexMatrix::Identity(n, n);
  for (const auto& k : kraus_) sum += k.adjoint() * k;
  return max_abs(sum);
}

ComplexMatrix apply(const QuantumChannel& channel, const ComplexMatrix& m) {
  const auto n = static_cast<Eigen::Index>(channel.dim_in());
  if (m.rows() != n || m.cols() != n) {
    std::ostringstream os;
    os << "apply: channel expects " << n << "x" << n << " input, got " << m.rows() << "x"
       << m.cols();
    fail(ErrorKind::kDimensionMismatch, os.str());
  }
  const auto out_dim = static_cast<Eigen::Index>(channel.dim_out());
  ComplexMatrix out = ComplexMatrix::Zero(out_dim, out_dim);
  for (const auto& k : channel.kraus()) out += k * m * k.adjoint();
  return out;
}

ComplexMatrix apply_local_operator(const std::optional<QuantumChannel>& channel_a,
                                   const std::optional<QuantumChannel>& channel_b,
                                   const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b) {
  if (channel_a && channel_a->dim_in() != dim_a) {
    fail(ErrorKind::kDimensionMismatch, "apply_local: channel A input dimension mismatch");
  }
  if (channel_b && channel_b->dim_in() != dim_b) {
    fail(ErrorKind::kDimensionMismatch, "apply_local: channel B input dimension mismatch");
  }
  const QuantumChannel a = channel_a ? *channel_a : QuantumChannel::identity(dim_a);
  const QuantumChannel b = channel_b ? *channel_b : QuantumChannel::identity(dim_b);
  const auto n_out = static_cast<Eigen::Index>(a.dim_out() * b.dim_out());
  ComplexMatrix out = ComplexMatrix::Zero(n_out, n_out);
  for (const auto& ka : a.kraus()) {
    for (const auto& kb : b.kraus()) {
      const ComplexMatrix lifted = tensor_product(ka, kb);
      out += lifted * m * lifted.adjoint();
    }
  }
  return out;
}

DensityMatrix apply_local(const std::optional<QuantumChannel>& channel_a,
                          const std::optional<QuantumChannel>& channel_b,
                          const DensityMatrix& rho) {
  const ComplexMatrix out =
      apply_local_operator(channel_a, channel_b, rho.matrix(), rho.dim_a(), rho.dim_b());
  const std::size_t da = channel_a ? channel_a->dim_out() : rho.dim_a();
  const std::size_t db = channel_b ? channel_b->dim_out() : rho.dim_b();
  return DensityMatrix(hermitian_part(out), da, db);
}

QuantumChannel phi_channel() {
  ComplexMatrix k0 = ComplexMatrix::Zero(2, 2);
  k0(0, 0) = 1.0;
  // |+><1|
  ComplexMatrix k1 = ComplexMatrix::Zero(2, 2);
  k1(0, 1) = k1(1, 1) = 1.0 / std::sqrt(2.0);
  return QuantumChannel({k0, k1});
}

QuantumChannel state_preparation_channel(const std::vector<DensityMatrix>& targets,
                                         const std::vector<ComplexVector>& source_basis) {
  if (targets.empty()) fail(ErrorKind::kInvalidInput, "state_preparation_channel: no targets");
  if (targets.size() != source_basis.size()) {
    fail(ErrorKind::kDimensionMismatch,
         "state_preparation_channel: need exactly one target per source ket");
  }
  require_orthonormal(source_basis, "state_preparation_channel source_basis");
  const std::size_t dim_in = std::size_t(source_basis[0].size());
  if (source_basis.size() != dim_in) {
    fail(ErrorKind::kDimensionMismatch,
         "state_preparation_channel: source basis must span the input space");
  }
  const std::size_t dim_out = targets[0].dim();
  std::vector<ComplexMatrix> kraus;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i].dim() != dim_out) {
      fail(ErrorKind::kDimensionMismatch, "state_preparation_channel: targets differ in dimension");
    }
    const HermitianEigen spectral = hermitian_eigen(targets[i].matrix());
    for (Eigen::Index j = 0; j < spectral.values.size(); ++j) {
      const double w = spectral.values(j);
      if (w <= 1e-15) continue;
      kraus.push_back(std::sqrt(w) * spectral.vectors.col(j) * source_basis[i].adjoint());
    }
  }
  return QuantumChannel(std::move(kraus));
}

LocalCreation synthesize_local_creation(const ProductEnsemble& target) {
  validate_ensemble(target);
  const std::size_t d_min = std::min(target.dim_a, target.dim_b);
  const std::size_t s = target.size();
  if (s > d_min) {
    std::ostringstream os;
    os << "synthesize_local_creation: ensemble has " << s
       << " product terms, above the classical bound d_min = " << d_min;
    fail(ErrorKind::kDomainPrecondition, os.str());
  }
  RealMatrix seed_probabilities = RealMatrix::Zero(Eigen::Index(target.dim_a), Eigen::Index(target.dim_b));
  std::vector<DensityMatrix> targets_a;
  std::vector<DensityMatrix> targets_b;
  for (std::size_t i = 0; i < s; ++i) {
    seed_probabilities(Eigen::Index(i), Eigen::Index(i)) = target.terms[i].weight;
    targets_a.push_back(target.terms[i].state_a);
    targets_b.push_back(target.terms[i].state_b);
  }
  // Unused source kets still need an image for trace preservation.
  while (targets_a.size() < target.dim_a) targets_a.push_back(target.terms[0].state_a);
  while (targets_b.size() < target.dim_b) targets_b.push_back(target.terms[0].state_b);

  // The weights already sum to 1 within 1e-12; renormalize to build the seed.
  seed_probabilities /= seed_probabilities.sum();
  DensityMatrix seed = classical_state(seed_probabilities);
  QuantumChannel channel_a = state_preparation_channel(targets_a, computational_basis(target.dim_a));
  QuantumChannel channel_b = state_preparation_channel(targets_b, computational_basis(target.dim_b));
  DensityMatrix output = apply_local(channel_a, channel_b, seed);
  const double residual = max_abs(ComplexMatrix(output.matrix() - assemble(target).matrix()));
  return {std::move(seed), std::move(channel_a), std::move(channel_b), std::move(output), residual};
}

ProductEnsemble reduce_classical(const RealMatrix& probabilities) {
  // Validates non-negativity and normalization.
  (void)classical_state(probabilities);
  const auto da = static_cast<std::size_t>(probabilities.rows());
  const auto db = static_cast<std::size_t>(probabilities.cols());
  ProductEnsemble out;
  out.dim_a = da;
  out.dim_b = db;
  for (std::size_t i = 0; i < da; ++i) {
    const double p = probabilities.row(Eigen::Index(i)).sum();
    if (p <= 0.0) continue;
    ComplexMatrix conditional = ComplexMatrix::Zero(Eigen::Index(db), Eigen::Index(db));
    for (std::size_t j = 0; j < db; ++j) {
      conditional(Eigen::Index(j), Eigen::Index(j)) = probabilities(Eigen::Index(i), Eigen::Index(j)) / p;
    }
    out.terms.push_back({p, DensityMatrix::local(projector(basis_ket(da, i))),
                         DensityMatrix::local(std::move(conditional))});
  }
  return out;
}

MonotonicityTrial l_monotonicity_trial(const DensityMatrix& rho, const QuantumChannel& channel,
                                       Subsystem side, double rank_tol) {
  MonotonicityTrial out;
  out.l_before = analyze(rho, rank_tol).rank_l;
  const DensityMatrix after = side == Subsystem::kA ? apply_local(channel, std::nullopt, rho)
                                                    : apply_local(std::nullopt, channel, rho);
  out.l_after = analyze(after, rank_tol).rank_l;
  out.ok = out.l_after <= out.l_before;
  return out;
}

QuantumChannel random_channel(std::size_t dim, std::size_t kraus_count, Rng& rng) {
  if (dim == 0 || kraus_count < 1 || kraus_count > dim * dim) {
    fail(ErrorKind::kInvalidInput, "random_channel: kraus_count must lie in [1, dim^2]");
  }
  const ComplexMatrix isometry = orthonormal_columns(ginibre(dim * kraus_count, dim, rng));
  const auto d = static_cast<Eigen::Index>(dim);
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(kraus_count);
  for (std::size_t k = 0; k < kraus_count; ++k) {
    kraus.push_back(isometry.block(Eigen::Index(k) * d, 0, d, d));
  }
  return QuantumChannel(std::move(kraus));
}

QuantumChannel random_channel(std::size_t dim, std::size_t kraus_count, std::uint64_t seed) {
  Rng rng(seed);
  return random_channel(dim, kraus_count, rng);
}

MonotonicitySweep monotonicity_sweep(std::size_t dim_a, std::size_t dim_b, std::size_t trials,
                                     std::uint64_t seed, double rank_tol) {
  std::vector<MonotonicityTrial> results(trials);
  parallel_for(trials, [&](std::size_t i) {
    Rng rng(split_seed(seed, i));
    const std::size_t d_min = std::min(dim_a, dim_b);
    DensityMatrix rho = [&] {
      if (i % 2 == 0) return random_state(dim_a, dim_b, rng);
      std::uniform_int_distribution<std::size_t> terms(1, d_min * d_min);
      return assemble(random_ensemble(dim_a, dim_b, terms(rng), rng));
    }();
    const Subsystem side = std::bernoulli_distribution(0.5)(rng) ? Subsystem::kA : Subsystem::kB;
    const std::size_t d = rho.dim_of(side);
    // One trial in four uses a measure-and-prepare channel, whose image
    // spans at most d operators, so rank-lowering maps are exercised too.
    const QuantumChannel channel = [&] {
      if (std::bernoulli_distribution(0.25)(rng)) {
        const ComplexMatrix u = random_unitary(d, rng);
        std::vector<ComplexVector> source;
        std::vector<DensityMatrix> targets;
        for (std::size_t k = 0; k < d; ++k) {
          source.push_back(u.col(Eigen::Index(k)));
          targets.push_back(random_state(d, 1, rng));
        }
        return state_preparation_channel(targets, source);
      }
      std::uniform_int_distribution<std::size_t> kraus(1, d * d);
      return random_channel(d, kraus(rng), rng);
    }();
    results[i] = l_monotonicity_trial(rho, channel, side, rank_tol);
  });

  MonotonicitySweep out;
  out.dim_a = dim_a;
  out.dim_b = dim_b;
  out.trials = trials;
  for (std::size_t i = 0; i < trials; ++i) {
    if (!results[i].ok) {
      ++out.violations;
      if (out.first_violations.size() < 16) out.first_violations.push_back(i);
    }
    if (results[i].l_after == results[i].l_before) ++out.unchanged;
  }
  return out;
}

}  // namespace qcorr
