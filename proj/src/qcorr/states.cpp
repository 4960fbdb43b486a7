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

#include <charconv>
#include <cmath>
#include <sstream>

#include "qcorr/error.hpp"

namespace qcorr {

void validate_density_matrix(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b) {
  if (dim_a == 0 || dim_b == 0) fail(ErrorKind::kInvalidInput, "state: factor dimensions must be positive");
  const auto n = static_cast<Eigen::Index>(dim_a * dim_b);
  if (m.rows() != n || m.cols() != n) {
    std::ostringstream os;
    os << "state: matrix is " << m.rows() << "x" << m.cols() << " but dims " << dim_a
       << "x" << dim_b << " require " << n << "x" << n;
    fail(ErrorKind::kDimensionMismatch, os.str());
  }
  if (!m.allFinite()) fail(ErrorKind::kInvalidInput, "state: non-finite entries");
  const double defect = hermiticity_defect(m);
  if (defect > tolerance::kHermitian) {
    std::ostringstream os;
    os << "state: not Hermitian (max |M - M^dagger| = " << defect << ")";
    fail(ErrorKind::kInvalidInput, os.str());
  }
  const Complex trace = m.trace();
  if (std::abs(trace - 1.0) > tolerance::kTrace) {
    std::ostringstream os;
    os.precision(17);
    os << "state: trace " << trace.real() << " differs from 1";
    fail(ErrorKind::kInvalidInput, os.str());
  }
  const double min_eig = hermitian_eigenvalues(hermitian_part(m)).minCoeff();
  if (min_eig < -tolerance::kPositivity) {
    std::ostringstream os;
    os << "state: negative eigenvalue " << min_eig;
    fail(ErrorKind::kInvalidInput, os.str());
  }
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, std::size_t dim_a, std::size_t dim_b)
    : matrix_(std::move(matrix)), dim_a_(dim_a), dim_b_(dim_b) {
  validate_density_matrix(matrix_, dim_a_, dim_b_);
}

DensityMatrix DensityMatrix::local(ComplexMatrix matrix) {
  const auto d = static_cast<std::size_t>(matrix.rows());
  return DensityMatrix(std::move(matrix), d, 1);
}

ComplexMatrix DensityMatrix::marginal(Subsystem kept) const {
  return partial_trace(matrix_, dim_a_, dim_b_, other(kept));
}

double DensityMatrix::purity() const { return (matrix_ * matrix_).trace().real(); }

void validate_ensemble(const ProductEnsemble& ensemble) {
  if (ensemble.terms.empty()) fail(ErrorKind::kInvalidInput, "ensemble: no terms");
  double total = 0.0;
  for (const auto& term : ensemble.terms) {
    if (!(term.weight > 0.0 && term.weight <= 1.0 + tolerance::kTrace)) {
      fail(ErrorKind::kInvalidInput, "ensemble: weights must lie in (0, 1]");
    }
    if (term.state_a.dim() != ensemble.dim_a || term.state_b.dim() != ensemble.dim_b) {
      fail(ErrorKind::kDimensionMismatch, "ensemble: factor state dimension mismatch");
    }
    total += term.weight;
  }
  if (std::abs(total - 1.0) > tolerance::kTrace) {
    std::ostringstream os;
    os.precision(17);
    os << "ensemble: weights sum to " << total;
    fail(ErrorKind::kInvalidInput, os.str());
  }
}

DensityMatrix assemble(const ProductEnsemble& ensemble) {
  validate_ensemble(ensemble);
  const auto n = static_cast<Eigen::Index>(ensemble.dim_a * ensemble.dim_b);
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (const auto& term : ensemble.terms) {
    m += term.weight * tensor_product(term.state_a.matrix(), term.state_b.matrix());
  }
  return DensityMatrix(hermitian_part(m), ensemble.dim_a, ensemble.dim_b);
}

void require_orthonormal(const std::vector<ComplexVector>& kets, const char* what) {
  for (std::size_t i = 0; i < kets.size(); ++i) {
    for (std::size_t j = 0; j < kets.size(); ++j) {
      if (kets[i].size() != kets[j].size()) {
        fail(ErrorKind::kDimensionMismatch, std::string(what) + ": kets of unequal length");
      }
      const Complex overlap = kets[i].dot(kets[j]);
      const double expected = i == j ? 1.0 : 0.0;
      if (std::abs(overlap - expected) > tolerance::kHermitian) {
        fail(ErrorKind::kInvalidInput, std::string(what) + ": kets are not orthonormal");
      }
    }
  }
}

std::vector<ComplexVector> computational_basis(std::size_t dim) {
  std::vector<ComplexVector> kets;
  kets.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) kets.push_back(basis_ket(dim, i));
  return kets;
}

DensityMatrix classical_state(const RealMatrix& probabilities,
                              const std::vector<ComplexVector>& basis_a,
                              const std::vector<ComplexVector>& basis_b) {
  const auto da = static_cast<std::size_t>(probabilities.rows());
  const auto db = static_cast<std::size_t>(probabilities.cols());
  if (basis_a.size() != da || basis_b.size() != db) {
    fail(ErrorKind::kDimensionMismatch, "classical_state: basis sizes do not match the distribution");
  }
  require_orthonormal(basis_a, "classical_state basis_a");
  require_orthonormal(basis_b, "classical_state basis_b");
  if (da > 0 && static_cast<std::size_t>(basis_a[0].size()) != da) {
    fail(ErrorKind::kDimensionMismatch, "classical_state: basis_a must be complete");
  }
  if (db > 0 && static_cast<std::size_t>(basis_b[0].size()) != db) {
    fail(ErrorKind::kDimensionMismatch, "classical_state: basis_b must be complete");
  }
  if ((probabilities.array() < 0.0).any()) {
    fail(ErrorKind::kInvalidInput, "classical_state: negative probability");
  }
  if (std::abs(probabilities.sum() - 1.0) > tolerance::kTrace) {
    fail(ErrorKind::kInvalidInput, "classical_state: probabilities do not sum to 1");
  }
  const auto n = static_cast<Eigen::Index>(da * db);
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (std::size_t i = 0; i < da; ++i) {
    const ComplexMatrix pa = projector(basis_a[i]);
    for (std::size_t j = 0; j < db; ++j) {
      const double p = probabilities(Eigen::Index(i), Eigen::Index(j));
      if (p == 0.0) continue;
      m += p * tensor_product(pa, projector(basis_b[j]));
    }
  }
  return DensityMatrix(hermitian_part(m), da, db);
}

DensityMatrix classical_state(const RealMatrix& probabilities) {
  return classical_state(probabilities,
                         computational_basis(std::size_t(probabilities.rows())),
                         computational_basis(std::size_t(probabilities.cols())));
}

DensityMatrix werner_state(double z) {
  if (!(z >= -1.0 / 3.0 - 1e-15 && z <= 1.0 + 1e-15)) {
    fail(ErrorKind::kDomainPrecondition, "werner_state: z must lie in [-1/3, 1]");
  }
  ComplexVector psi = ComplexVector::Zero(4);
  psi(0) = psi(3) = 1.0 / std::sqrt(2.0);
  ComplexMatrix m = (1.0 - z) / 4.0 * ComplexMatrix::Identity(4, 4) + z * projector(psi);
  return DensityMatrix(std::move(m), 2, 2);
}

namespace {

ComplexVector plus_ket() {
  ComplexVector v(2);
  v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  return v;
}

}  // namespace

DensityMatrix rho_l() {
  const ComplexVector k00 = basis_ket(4, 0);
  // |+>|1> = (|01> + |11>)/sqrt(2)
  const ComplexVector kp1 = tensor_product(plus_ket(), basis_ket(2, 1));
  return DensityMatrix(hermitian_part(0.5 * (projector(k00) + projector(kp1))), 2, 2);
}

DensityMatrix rho_c() {
  return DensityMatrix(0.5 * (projector(basis_ket(4, 0)) + projector(basis_ket(4, 3))), 2, 2);
}

DensityMatrix bell_state() { return schmidt_rank2_pure(2); }

DensityMatrix schmidt_rank2_pure(std::size_t dim) {
  if (dim < 2) fail(ErrorKind::kDomainPrecondition, "schmidt_rank2_pure: dim must be >= 2");
  ComplexVector psi = ComplexVector::Zero(Eigen::Index(dim * dim));
  psi(0) = 1.0 / std::sqrt(2.0);
  psi(Eigen::Index(dim + 1)) = 1.0 / std::sqrt(2.0);
  return DensityMatrix(projector(psi), dim, dim);
}

DensityMatrix product_state(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix(tensor_product(a.matrix(), b.matrix()), a.dim(), b.dim());
}

DensityMatrix maximally_mixed(std::size_t dim_a, std::size_t dim_b) {
  const auto n = static_cast<Eigen::Index>(dim_a * dim_b);
  return DensityMatrix(ComplexMatrix::Identity(n, n) / double(n), dim_a, dim_b);
}

DensityMatrix random_state(std::size_t dim_a, std::size_t dim_b, Rng& rng) {
  const std::size_t n = dim_a * dim_b;
  const ComplexMatrix g = ginibre(n, n, rng);
  ComplexMatrix m = g * g.adjoint();
  m /= m.trace().real();
  return DensityMatrix(hermitian_part(m), dim_a, dim_b);
}

DensityMatrix random_state(std::size_t dim_a, std::size_t dim_b, std::uint64_t seed) {
  Rng rng(seed);
  return random_state(dim_a, dim_b, rng);
}

ProductEnsemble random_ensemble(std::size_t dim_a, std::size_t dim_b, std::size_t s, Rng& rng) {
  if (s == 0) fail(ErrorKind::kInvalidInput, "random_ensemble: s must be >= 1");
  // Dirichlet(1) weights as normalized Exp(1) draws.
  std::exponential_distribution<double> exponential(1.0);
  std::vector<double> weights(s);
  double total = 0.0;
  for (auto& w : weights) {
    w = exponential(rng);
    total += w;
  }
  ProductEnsemble ensemble;
  ensemble.dim_a = dim_a;
  ensemble.dim_b = dim_b;
  ensemble.terms.reserve(s);
  for (std::size_t i = 0; i < s; ++i) {
    DensityMatrix a = random_state(dim_a, 1, rng);
    DensityMatrix b = random_state(dim_b, 1, rng);
    ensemble.terms.push_back({weights[i] / total, std::move(a), std::move(b)});
  }
  return ensemble;
}

ProductEnsemble random_ensemble(std::size_t dim_a, std::size_t dim_b, std::size_t s,
                                std::uint64_t seed) {
  Rng rng(seed);
  return random_ensemble(dim_a, dim_b, s, rng);
}

namespace {

double parse_double(const std::string& text, const std::string& literal) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    fail(ErrorKind::kInvalidInput, "builtin state '" + literal + "': bad number '" + text + "'");
  }
}

std::size_t parse_dim(const std::string& text, const std::string& literal) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || v == 0) {
    fail(ErrorKind::kInvalidInput, "builtin state '" + literal + "': bad dimension '" + text + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

DensityMatrix builtin_state(const std::string& literal) {
  const auto parts = split(literal, ':');
  const std::string& name = parts[0];
  if (name == "werner" && parts.size() == 2) return werner_state(parse_double(parts[1], literal));
  if (name == "rho_l" && parts.size() == 1) return rho_l();
  if (name == "rho_c" && parts.size() == 1) return rho_c();
  if (name == "bell" && parts.size() == 1) return bell_state();
  if (name == "schmidt2" && parts.size() == 2) return schmidt_rank2_pure(parse_dim(parts[1], literal));
  if (name == "mixed" && parts.size() == 3) {
    return maximally_mixed(parse_dim(parts[1], literal), parse_dim(parts[2], literal));
  }
  fail(ErrorKind::kInvalidInput,
       "unknown builtin state '" + literal +
           "' (expected werner:z, rho_l, rho_c, bell, schmidt2:d or mixed:da:db)");
}

}  // namespace qcorr
