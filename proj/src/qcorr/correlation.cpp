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

#include "qcorr/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "qcorr/error.hpp"

namespace qcorr {

namespace {

// Row i holds A_i transposed and flattened row-major, so that
// tr(rho (A_i (x) B_j)) becomes a bilinear form in these rows.
ComplexMatrix flattened_transposes(const HermitianBasis& basis) {
  const auto d = static_cast<Eigen::Index>(basis.dim);
  ComplexMatrix rows(Eigen::Index(basis.elements.size()), d * d);
  for (std::size_t i = 0; i < basis.elements.size(); ++i) {
    const ComplexMatrix& e = basis.elements[i];
    for (Eigen::Index a = 0; a < d; ++a)
      for (Eigen::Index ap = 0; ap < d; ++ap) rows(Eigen::Index(i), a * d + ap) = e(ap, a);
  }
  return rows;
}

void require_basis(const HermitianBasis& basis, std::size_t dim, const char* side) {
  if (basis.dim != dim || basis.elements.size() != dim * dim) {
    std::ostringstream os;
    os << "correlation_matrix: basis " << side << " has dim " << basis.dim << " with "
       << basis.elements.size() << " elements, state factor has dim " << dim;
    fail(ErrorKind::kDimensionMismatch, os.str());
  }
}

}  // namespace

RealMatrix correlation_matrix(const DensityMatrix& rho, const HermitianBasis& basis_a,
                              const HermitianBasis& basis_b) {
  require_basis(basis_a, rho.dim_a(), "A");
  require_basis(basis_b, rho.dim_b(), "B");
  const auto da = static_cast<Eigen::Index>(rho.dim_a());
  const auto db = static_cast<Eigen::Index>(rho.dim_b());
  const ComplexMatrix& m = rho.matrix();

  // Reshuffle rho_{(a b),(a' b')} into P_{(a a'),(b b')}.
  ComplexMatrix reshuffled(da * da, db * db);
  for (Eigen::Index a = 0; a < da; ++a)
    for (Eigen::Index ap = 0; ap < da; ++ap)
      for (Eigen::Index b = 0; b < db; ++b)
        for (Eigen::Index bp = 0; bp < db; ++bp)
          reshuffled(a * da + ap, b * db + bp) = m(a * db + b, ap * db + bp);

  const ComplexMatrix r = flattened_transposes(basis_a) * reshuffled *
                          flattened_transposes(basis_b).transpose();
  const double residue = r.size() ? r.imag().cwiseAbs().maxCoeff() : 0.0;
  if (residue > 1e-9) {
    std::ostringstream os;
    os << "correlation_matrix: imaginary residue " << residue
       << " (non-Hermitian basis or corrupted state)";
    fail(ErrorKind::kInvalidInput, os.str());
  }
  return r.real();
}

double CorrelationAnalysis::rank_gap() const {
  if (rank_l == 0 || rank_l >= std::size_t(singular_values.size())) {
    return std::numeric_limits<double>::infinity();
  }
  const double tail = singular_values(Eigen::Index(rank_l));
  if (tail <= 0.0) return std::numeric_limits<double>::infinity();
  return singular_values(Eigen::Index(rank_l) - 1) / tail;
}

double CorrelationAnalysis::relative_min_singular_value() const {
  if (rank_l == 0) return 0.0;
  return singular_values(Eigen::Index(rank_l) - 1) / singular_values(0);
}

ComplexMatrix CorrelationAnalysis::reconstruct() const {
  const auto n = static_cast<Eigen::Index>(dim_a * dim_b);
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (std::size_t i = 0; i < rank_l; ++i) {
    out += singular_values(Eigen::Index(i)) * tensor_product(ops_a[i], ops_b[i]);
  }
  return out;
}

CorrelationAnalysis analyze(const DensityMatrix& rho, const HermitianBasis& basis_a,
                            const HermitianBasis& basis_b, double rank_tol) {
  if (!(rank_tol > 0.0 && rank_tol < 1.0)) {
    fail(ErrorKind::kInvalidInput, "analyze: rank tolerance must lie in (0, 1)");
  }
  CorrelationAnalysis out;
  out.dim_a = rho.dim_a();
  out.dim_b = rho.dim_b();
  out.r_matrix = correlation_matrix(rho, basis_a, basis_b);
  SingularDecomposition dec = svd(out.r_matrix);
  out.singular_values = dec.singular_values;
  out.rank_l = numerical_rank(out.singular_values, rank_tol);

  const auto da = static_cast<Eigen::Index>(out.dim_a);
  const auto db = static_cast<Eigen::Index>(out.dim_b);
  out.ops_a.reserve(out.rank_l);
  out.ops_b.reserve(out.rank_l);
  for (std::size_t i = 0; i < out.rank_l; ++i) {
    ComplexMatrix s = ComplexMatrix::Zero(da, da);
    for (std::size_t j = 0; j < basis_a.elements.size(); ++j) {
      s += dec.left(Eigen::Index(j), Eigen::Index(i)) * basis_a.elements[j];
    }
    ComplexMatrix f = ComplexMatrix::Zero(db, db);
    for (std::size_t j = 0; j < basis_b.elements.size(); ++j) {
      f += dec.right(Eigen::Index(j), Eigen::Index(i)) * basis_b.elements[j];
    }
    out.ops_a.push_back(std::move(s));
    out.ops_b.push_back(std::move(f));
  }
  return out;
}

CorrelationAnalysis analyze(const DensityMatrix& rho, double rank_tol) {
  return analyze(rho, gellmann_basis(rho.dim_a()), gellmann_basis(rho.dim_b()), rank_tol);
}

double max_pairwise_commutator(const std::vector<ComplexMatrix>& ops) {
  double worst = 0.0;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    for (std::size_t j = i + 1; j < ops.size(); ++j) {
      worst = std::max(worst, max_abs(commutator(ops[i], ops[j])));
    }
  }
  return worst;
}

DiscordWitnessReport witness_report(const CorrelationAnalysis& analysis, double commutator_tol) {
  DiscordWitnessReport out;
  out.rank_l = analysis.rank_l;
  out.d_min = std::min(analysis.dim_a, analysis.dim_b);
  out.witness_fired = out.rank_l > out.d_min;
  out.max_commutator_a = max_pairwise_commutator(analysis.ops_a);
  out.max_commutator_b = max_pairwise_commutator(analysis.ops_b);
  out.zero_discord_a = out.max_commutator_a <= commutator_tol;
  out.zero_discord_b = out.max_commutator_b <= commutator_tol;
  out.rank_gap = analysis.rank_gap();
  out.singular_values = analysis.singular_values;
  return out;
}

DiscordWitnessReport witness_report(const DensityMatrix& rho, double rank_tol,
                                    double commutator_tol) {
  return witness_report(analyze(rho, rank_tol), commutator_tol);
}

bool EnsembleRankCheck::consistent() const {
  if (independent_a && independent_b) return measured_l == terms;
  return measured_l < terms && measured_l <= predicted_l;
}

namespace {

std::vector<ComplexMatrix> factor_states(const ProductEnsemble& ensemble, Subsystem side) {
  std::vector<ComplexMatrix> ops;
  ops.reserve(ensemble.size());
  for (const auto& term : ensemble.terms) {
    ops.push_back(side == Subsystem::kA ? term.state_a.matrix() : term.state_b.matrix());
  }
  return ops;
}

std::size_t gram_rank(const RealMatrix& gram, double rank_tol) {
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(gram, Eigen::EigenvaluesOnly);
  return numerical_rank(RealVector(solver.eigenvalues().cwiseAbs()), rank_tol);
}

}  // namespace

EnsembleRankCheck ensemble_rank_theorem_check(const ProductEnsemble& ensemble, double rank_tol) {
  validate_ensemble(ensemble);
  EnsembleRankCheck out;
  out.terms = ensemble.size();
  out.gram_rank_a = gram_rank(gram_matrix(factor_states(ensemble, Subsystem::kA)), rank_tol);
  out.gram_rank_b = gram_rank(gram_matrix(factor_states(ensemble, Subsystem::kB)), rank_tol);
  out.independent_a = out.gram_rank_a == out.terms;
  out.independent_b = out.gram_rank_b == out.terms;
  out.predicted_l = (out.independent_a && out.independent_b)
                        ? out.terms
                        : std::min(out.gram_rank_a, out.gram_rank_b);
  out.measured_l = analyze(assemble(ensemble), rank_tol).rank_l;
  return out;
}

ComplexMatrix ReducedEnsemble::reassemble() const {
  if (terms.empty()) return {};
  const Eigen::Index n = terms[0].operator_a.rows() * terms[0].operator_b.rows();
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (const auto& t : terms) out += t.coefficient * tensor_product(t.operator_a, t.operator_b);
  return out;
}

ReducedEnsemble reduce_dependent_ensemble(const ProductEnsemble& ensemble, double rank_tol) {
  validate_ensemble(ensemble);
  const std::size_t s = ensemble.size();

  ReducedEnsemble out;
  RealMatrix gram = gram_matrix(factor_states(ensemble, Subsystem::kA));
  if (gram_rank(gram, rank_tol) < s) {
    out.dependent_side = Subsystem::kA;
  } else {
    gram = gram_matrix(factor_states(ensemble, Subsystem::kB));
    if (gram_rank(gram, rank_tol) == s) {
      fail(ErrorKind::kDomainPrecondition,
           "reduce_dependent_ensemble: factor states are linearly independent on both sides");
    }
    out.dependent_side = Subsystem::kB;
  }

  // The eigenvector of the smallest Gram eigenvalue spans part of the null
  // space: sum_i y_i rho_i = 0.
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(gram);
  const RealVector y = solver.eigenvectors().col(0);
  std::size_t k = 0;
  for (std::size_t i = 0; i < s; ++i) {
    if (std::abs(y(Eigen::Index(i))) >= std::abs(y(Eigen::Index(k)))) k = i;
  }
  out.eliminated_index = k;

  const auto& eliminated = ensemble.terms[k];
  const bool dep_a = out.dependent_side == Subsystem::kA;
  const ComplexMatrix& partner_k = dep_a ? eliminated.state_b.matrix() : eliminated.state_a.matrix();
  out.all_coefficients_nonnegative = true;
  out.mixed_operators_positive = true;
  for (std::size_t i = 0; i < s; ++i) {
    if (i == k) continue;
    const double x = -y(Eigen::Index(i)) / y(Eigen::Index(k));
    out.dependence.push_back(x);
    if (x < 0.0) out.all_coefficients_nonnegative = false;

    const auto& term = ensemble.terms[i];
    const ComplexMatrix& kept = dep_a ? term.state_a.matrix() : term.state_b.matrix();
    const ComplexMatrix& partner = dep_a ? term.state_b.matrix() : term.state_a.matrix();
    ComplexMatrix mixed = term.weight * partner + eliminated.weight * x * partner_k;
    if (hermitian_eigenvalues(hermitian_part(mixed)).minCoeff() < -tolerance::kPositivity) {
      out.mixed_operators_positive = false;
    }
    ReducedTerm reduced;
    const double trace = mixed.trace().real();
    if (std::abs(trace) > 1e-14) {
      reduced.coefficient = trace;
      mixed /= trace;
    } else {
      reduced.coefficient = 1.0;
    }
    reduced.operator_a = dep_a ? kept : mixed;
    reduced.operator_b = dep_a ? mixed : kept;
    out.terms.push_back(std::move(reduced));
  }
  return out;
}

}  // namespace qcorr
