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
#include <string>
#include <vector>

#include "qcorr/linalg.hpp"

namespace qcorr {

/// Unit-trace positive-semidefinite operator on C^dim_a (x) C^dim_b.
///
/// Construction validates Hermiticity (1e-12), unit trace (1e-12) and
/// positivity (min eigenvalue >= -1e-9); a DensityMatrix value always
/// satisfies them. Single-system states use dim_b = 1.
class DensityMatrix {
 public:
  DensityMatrix(ComplexMatrix matrix, std::size_t dim_a, std::size_t dim_b);

  /// Single-system state on C^dim.
  static DensityMatrix local(ComplexMatrix matrix);

  std::size_t dim_a() const { return dim_a_; }
  std::size_t dim_b() const { return dim_b_; }
  std::size_t dim() const { return dim_a_ * dim_b_; }
  std::size_t dim_min() const { return std::min(dim_a_, dim_b_); }
  std::size_t dim_of(Subsystem s) const { return s == Subsystem::kA ? dim_a_ : dim_b_; }

  const ComplexMatrix& matrix() const { return matrix_; }

  /// Reduced state on `kept`.
  ComplexMatrix marginal(Subsystem kept) const;

  double purity() const;

 private:
  ComplexMatrix matrix_;
  std::size_t dim_a_;
  std::size_t dim_b_;
};

/// Throws kInvalidInput describing the first violated density-matrix invariant.
void validate_density_matrix(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b);

/// Convex decomposition sum_i p_i rho_i^A (x) rho_i^B.
struct ProductEnsemble {
  struct Term {
    double weight;
    DensityMatrix state_a;  // local state, dim_b() == 1
    DensityMatrix state_b;
  };

  std::size_t dim_a = 0;
  std::size_t dim_b = 0;
  std::vector<Term> terms;

  std::size_t size() const { return terms.size(); }
};

/// Checks weights in (0,1] summing to 1 (1e-12) and factor dimensions.
void validate_ensemble(const ProductEnsemble& ensemble);

DensityMatrix assemble(const ProductEnsemble& ensemble);

/// Throws kInvalidInput unless the kets are orthonormal within 1e-12.
void require_orthonormal(const std::vector<ComplexVector>& kets, const char* what);

std::vector<ComplexVector> computational_basis(std::size_t dim);

/// sum_ij p_ij |a_i><a_i| (x) |b_j><b_j|.
DensityMatrix classical_state(const RealMatrix& probabilities,
                              const std::vector<ComplexVector>& basis_a,
                              const std::vector<ComplexVector>& basis_b);

/// Classical state in the computational bases.
DensityMatrix classical_state(const RealMatrix& probabilities);

/// (1-z)/4 I + z |Psi><Psi| with |Psi> = (|00>+|11>)/sqrt(2); z in [-1/3, 1].
DensityMatrix werner_state(double z);

/// (|00><00| + |+1><+1|)/2.
DensityMatrix rho_l();

/// (|00><00| + |11><11|)/2.
DensityMatrix rho_c();

DensityMatrix bell_state();

/// (|00> + |11>)/sqrt(2) embedded in C^dim (x) C^dim.
DensityMatrix schmidt_rank2_pure(std::size_t dim);

DensityMatrix product_state(const DensityMatrix& a, const DensityMatrix& b);

/// Maximally mixed state I/(dim_a dim_b).
DensityMatrix maximally_mixed(std::size_t dim_a, std::size_t dim_b);

/// Hilbert-Schmidt random state GG^dagger / tr(GG^dagger), G square Ginibre.
DensityMatrix random_state(std::size_t dim_a, std::size_t dim_b, std::uint64_t seed);
DensityMatrix random_state(std::size_t dim_a, std::size_t dim_b, Rng& rng);

/// s-term ensemble with Dirichlet(1) weights and Hilbert-Schmidt factors.
ProductEnsemble random_ensemble(std::size_t dim_a, std::size_t dim_b, std::size_t s,
                                std::uint64_t seed);
ProductEnsemble random_ensemble(std::size_t dim_a, std::size_t dim_b, std::size_t s,
                                Rng& rng);

/// Parses a builtin literal: `werner:z`, `rho_l`, `rho_c`, `bell`,
/// `schmidt2:d`, `mixed:da:db`. Throws kInvalidInput on unknown names.
DensityMatrix builtin_state(const std::string& literal);

}  // namespace qcorr
