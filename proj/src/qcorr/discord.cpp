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

#include "qcorr/discord.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include "qcorr/correlation.hpp"
#include "qcorr/error.hpp"

namespace qcorr {

double mutual_information(const DensityMatrix& rho) {
  return von_neumann_entropy(rho.marginal(Subsystem::kA)) +
         von_neumann_entropy(rho.marginal(Subsystem::kB)) -
         von_neumann_entropy(rho.matrix());
}

namespace {

// Entropy of m / tr(m) for a 2x2 Hermitian m with tr(m) = p > 0.
double entropy_2x2(const ComplexMatrix& m, double p) {
  const double a = m(0, 0).real() / p;
  const double c = m(1, 1).real() / p;
  const double b2 = std::norm(m(0, 1)) / (p * p);
  const double half_diff = 0.5 * (a - c);
  const double r = std::sqrt(half_diff * half_diff + b2);
  const double mid = 0.5 * (a + c);
  double s = 0.0;
  for (double lambda : {mid + r, mid - r}) {
    if (lambda > 0.0) s -= lambda * std::log2(lambda);
  }
  return s;
}

double normalized_entropy(const ComplexMatrix& m, double p) {
  if (m.rows() == 1) return 0.0;
  if (m.rows() == 2) return entropy_2x2(m, p);
  RealVector spectrum = hermitian_eigenvalues(m) / p;
  double s = 0.0;
  for (double lambda : spectrum) {
    if (lambda > 0.0) s -= lambda * std::log2(lambda);
  }
  return s;
}

constexpr double kMinOutcomeProbability = 1e-14;

// tr_measured[(X (x) I) rho] (or I (x) X for B), an operator on the other side.
ComplexMatrix conditional_operator(const DensityMatrix& rho, Subsystem measured,
                                   const ComplexMatrix& x) {
  const auto other_dim = static_cast<Eigen::Index>(rho.dim_of(other(measured)));
  const ComplexMatrix eye = ComplexMatrix::Identity(other_dim, other_dim);
  const ComplexMatrix lifted =
      measured == Subsystem::kA ? tensor_product(x, eye) : tensor_product(eye, x);
  return hermitian_part(partial_trace(lifted * rho.matrix(), rho.dim_a(), rho.dim_b(), measured));
}

struct SimplexOutcome {
  std::vector<double> x;
  double value = 0.0;
  bool converged = false;
  std::size_t evaluations = 0;
};

struct SimplexContext {
  const std::function<double(const std::vector<double>&)>* objective;
  std::vector<double> scratch;
  std::size_t evaluations = 0;
};

double simplex_trampoline(const gsl_vector* v, void* params) {
  auto* ctx = static_cast<SimplexContext*>(params);
  for (std::size_t i = 0; i < ctx->scratch.size(); ++i) ctx->scratch[i] = gsl_vector_get(v, i);
  ++ctx->evaluations;
  return (*ctx->objective)(ctx->scratch);
}

// Derivative-free Nelder-Mead (GSL nmsimplex2). Stops when the simplex size
// falls below `tolerance` or after `max_iterations`.
constexpr double kFlatValueTolerance = 1e-15;
constexpr double kFlatSimplexSize = 1e-6;
constexpr std::size_t kFlatIterations = 50;
constexpr std::size_t kStallIterations = 500;

SimplexOutcome minimize_simplex(const std::function<double(const std::vector<double>&)>& objective,
                                const std::vector<double>& start, double step, double tolerance,
                                std::size_t max_iterations) {
  const std::size_t n = start.size();
  SimplexContext ctx{&objective, std::vector<double>(n), 0};
  gsl_multimin_function fn{&simplex_trampoline, n, &ctx};

  gsl_vector* x = gsl_vector_alloc(n);
  gsl_vector* steps = gsl_vector_alloc(n);
  for (std::size_t i = 0; i < n; ++i) {
    gsl_vector_set(x, i, start[i]);
    gsl_vector_set(steps, i, step);
  }
  gsl_multimin_fminimizer* solver =
      gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, n);
  gsl_multimin_fminimizer_set(solver, &fn, x, steps);

  SimplexOutcome out;
  double best = solver->fval;
  std::size_t last_improvement = 0;
  for (std::size_t iter = 0; iter < max_iterations; ++iter) {
    if (gsl_multimin_fminimizer_iterate(solver) != GSL_SUCCESS) break;
    // nmsimplex2 reports the mean vertex distance from the centroid; half the
    // diameter bound keeps the stopping rule no looser than a diameter test.
    const double size = gsl_multimin_fminimizer_size(solver);
    if (size < 0.5 * tolerance) {
      out.converged = true;
      break;
    }
    if (solver->fval < best - kFlatValueTolerance * std::max(1.0, std::abs(best))) {
      best = solver->fval;
      last_improvement = iter;
    }
    // Near a quadratic minimum the objective stops resolving positions long
    // before the diameter reaches 1e-9; rounding noise then keeps the simplex
    // reflecting. A small simplex with a stalled value counts as converged,
    // as does a long stall anywhere (flat objective, e.g. isotropic states).
    const std::size_t stalled = iter - last_improvement;
    if ((size < kFlatSimplexSize && stalled >= kFlatIterations) || stalled >= kStallIterations) {
      out.converged = true;
      break;
    }
  }
  out.x.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.x[i] = gsl_vector_get(solver->x, i);
  out.value = solver->fval;
  out.evaluations = ctx.evaluations;

  gsl_multimin_fminimizer_free(solver);
  gsl_vector_free(steps);
  gsl_vector_free(x);
  return out;
}

struct GslErrorsOff {
  GslErrorsOff() { previous = gsl_set_error_handler_off(); }
  ~GslErrorsOff() { gsl_set_error_handler(previous); }
  gsl_error_handler_t* previous;
};

Eigen::Vector3d bloch_from_angles(double polar, double azimuth) {
  return {std::sin(polar) * std::cos(azimuth), std::sin(polar) * std::sin(azimuth),
          std::cos(polar)};
}

ComplexMatrix qubit_basis_from_bloch(const Eigen::Vector3d& n) {
  // Eigenvectors of n.sigma for eigenvalues +1 and -1.
  const double polar = std::acos(std::clamp(n.z(), -1.0, 1.0));
  const double azimuth = std::atan2(n.y(), n.x());
  const Complex phase = std::polar(1.0, azimuth);
  ComplexMatrix basis(2, 2);
  basis(0, 0) = std::cos(polar / 2);
  basis(1, 0) = phase * std::sin(polar / 2);
  basis(0, 1) = -std::conj(phase) * std::sin(polar / 2);
  basis(1, 1) = std::cos(polar / 2);
  return basis;
}

struct SearchOutcome {
  double min_conditional_entropy = 0.0;
  ComplexMatrix basis;
  std::optional<Eigen::Vector3d> bloch;
  bool converged = true;
  std::size_t evaluations = 0;
  std::vector<OptimizerSample> trace;
};

SearchOutcome search_qubit(const DensityMatrix& rho, Subsystem measured,
                           const DiscordOptions& options) {
  ComplexMatrix sx(2, 2), sy(2, 2), sz(2, 2);
  sx << 0, 1, 1, 0;
  sy << 0, Complex(0, -1), Complex(0, 1), 0;
  sz << 1, 0, 0, -1;
  const ComplexMatrix other_marginal = rho.marginal(other(measured));
  const ComplexMatrix tx = conditional_operator(rho, measured, sx);
  const ComplexMatrix ty = conditional_operator(rho, measured, sy);
  const ComplexMatrix tz = conditional_operator(rho, measured, sz);

  std::size_t evaluations = 0;
  auto objective_at = [&](double polar, double azimuth) {
    ++evaluations;
    const Eigen::Vector3d n = bloch_from_angles(polar, azimuth);
    const ComplexMatrix shift = n.x() * tx + n.y() * ty + n.z() * tz;
    double total = 0.0;
    for (double sign : {1.0, -1.0}) {
      const ComplexMatrix m = 0.5 * (other_marginal + sign * shift);
      const double p = m.trace().real();
      if (p < kMinOutcomeProbability) continue;
      total += p * normalized_entropy(m, p);
    }
    return total;
  };

  struct GridPoint {
    double polar, azimuth, value;
  };
  std::vector<GridPoint> grid;
  const std::size_t np = std::max<std::size_t>(options.polar_points, 2);
  const std::size_t na = std::max<std::size_t>(options.azimuthal_points, 1);
  grid.reserve(np * na);
  for (std::size_t i = 0; i < np; ++i) {
    const double polar = (std::numbers::pi / 2) * double(i) / double(np - 1);
    // The pole row is a single point.
    for (std::size_t j = 0; j < (i == 0 ? 1 : na); ++j) {
      const double azimuth = 2 * std::numbers::pi * double(j) / double(na);
      grid.push_back({polar, azimuth, objective_at(polar, azimuth)});
    }
  }
  // Stable ordering keeps ties deterministic (grid order breaks them).
  std::stable_sort(grid.begin(), grid.end(),
                   [](const GridPoint& a, const GridPoint& b) { return a.value < b.value; });

  const std::function<double(const std::vector<double>&)> objective =
      [&](const std::vector<double>& x) { return objective_at(x[0], x[1]); };
  const double step = 0.5 * std::min((std::numbers::pi / 2) / double(np - 1),
                                     2 * std::numbers::pi / double(na));

  SearchOutcome out;
  out.min_conditional_entropy = grid.front().value;
  double best_polar = grid.front().polar;
  double best_azimuth = grid.front().azimuth;
  bool best_converged = true;
  GslErrorsOff guard;
  const std::size_t starts = std::min(options.refinement_starts, grid.size());
  for (std::size_t s = 0; s < starts; ++s) {
    out.trace.push_back({{grid[s].polar, grid[s].azimuth}, grid[s].value});
    SimplexOutcome refined = minimize_simplex(objective, {grid[s].polar, grid[s].azimuth}, step,
                                              options.simplex_tolerance, options.max_iterations);
    out.trace.push_back({refined.x, refined.value});
    if (refined.value < out.min_conditional_entropy) {
      out.min_conditional_entropy = refined.value;
      best_polar = refined.x[0];
      best_azimuth = refined.x[1];
      best_converged = refined.converged;
    }
  }
  out.converged = best_converged;
  out.evaluations = evaluations;
  out.bloch = bloch_from_angles(best_polar, best_azimuth);
  out.basis = qubit_basis_from_bloch(*out.bloch);
  return out;
}

// Product of Givens rotations, one (angle, phase) pair per index pair p < q.
ComplexMatrix givens_unitary(std::size_t dim, const std::vector<double>& angles) {
  const auto d = static_cast<Eigen::Index>(dim);
  ComplexMatrix u = ComplexMatrix::Identity(d, d);
  std::size_t k = 0;
  for (Eigen::Index p = 0; p < d; ++p) {
    for (Eigen::Index q = p + 1; q < d; ++q) {
      const double theta = angles[k++];
      const double phi = angles[k++];
      const Complex phase = std::polar(1.0, phi);
      const double c = std::cos(theta);
      const double s = std::sin(theta);
      for (Eigen::Index r = 0; r < d; ++r) {
        const Complex up = u(r, p);
        const Complex uq = u(r, q);
        u(r, p) = c * up + std::conj(phase) * s * uq;
        u(r, q) = -phase * s * up + c * uq;
      }
    }
  }
  return u;
}

SearchOutcome search_qudit(const DensityMatrix& rho, Subsystem measured,
                           const DiscordOptions& options) {
  const std::size_t dim = rho.dim_of(measured);
  const std::size_t n_params = dim * (dim - 1);
  std::size_t evaluations = 0;
  const std::function<double(const std::vector<double>&)> objective =
      [&](const std::vector<double>& angles) {
        ++evaluations;
        return conditional_entropy(rho, measured, givens_unitary(dim, angles));
      };

  // Starts: the computational basis, then seeded random angles.
  std::vector<std::vector<double>> starts;
  starts.emplace_back(n_params, 0.0);
  Rng rng(options.qudit_seed);
  std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
  for (std::size_t s = 0; s < options.qudit_random_starts; ++s) {
    std::vector<double> x(n_params);
    for (auto& v : x) v = angle(rng);
    starts.push_back(std::move(x));
  }

  SearchOutcome out;
  out.min_conditional_entropy = INFINITY;
  out.converged = true;
  std::vector<double> best_angles;
  GslErrorsOff guard;
  for (const auto& start : starts) {
    out.trace.push_back({start, objective(start)});
    SimplexOutcome refined =
        minimize_simplex(objective, start, 0.3, options.simplex_tolerance, options.max_iterations);
    out.trace.push_back({refined.x, refined.value});
    if (refined.value < out.min_conditional_entropy) {
      out.min_conditional_entropy = refined.value;
      best_angles = refined.x;
      out.converged = refined.converged;
    }
  }

  // The marginal eigenbasis is a common optimum for classical-like states.
  const ComplexMatrix eigenbasis = hermitian_eigen(rho.marginal(measured)).vectors;
  const double eigen_value = conditional_entropy(rho, measured, eigenbasis);
  out.trace.push_back({{}, eigen_value});
  out.basis = givens_unitary(dim, best_angles);
  if (eigen_value < out.min_conditional_entropy) {
    out.min_conditional_entropy = eigen_value;
    out.basis = eigenbasis;
    out.converged = true;
  }
  out.evaluations = evaluations;
  return out;
}

}  // namespace

double conditional_entropy(const DensityMatrix& rho, Subsystem measured,
                           const ComplexMatrix& basis) {
  const auto dim = static_cast<Eigen::Index>(rho.dim_of(measured));
  if (basis.rows() != dim) {
    fail(ErrorKind::kDimensionMismatch, "conditional_entropy: basis does not match subsystem");
  }
  double total = 0.0;
  for (Eigen::Index k = 0; k < basis.cols(); ++k) {
    const ComplexMatrix m =
        conditional_operator(rho, measured, projector(ComplexVector(basis.col(k))));
    const double p = m.trace().real();
    if (p < kMinOutcomeProbability) continue;
    total += p * normalized_entropy(m, p);
  }
  return total;
}

DiscordResult discord(const DensityMatrix& rho, Subsystem measured, const DiscordOptions& options) {
  DiscordResult out;
  out.measured = measured;
  const std::size_t dim = rho.dim_of(measured);
  const double s_joint = von_neumann_entropy(rho.matrix());
  const double s_measured = von_neumann_entropy(rho.marginal(measured));
  const double s_other = von_neumann_entropy(rho.marginal(other(measured)));
  out.mutual_information = s_measured + s_other - s_joint;

  SearchOutcome search;
  if (dim == 1) {
    search.basis = ComplexMatrix::Identity(1, 1);
    search.min_conditional_entropy = conditional_entropy(rho, measured, search.basis);
  } else if (dim == 2) {
    search = search_qubit(rho, measured, options);
  } else {
    search = search_qudit(rho, measured, options);
    out.certified = false;
  }
  out.bloch_vector = search.bloch;
  out.measurement_basis = search.basis;
  out.converged = search.converged;
  out.evaluations = search.evaluations;
  out.optimizer_trace = std::move(search.trace);
  out.classical_correlation = s_other - search.min_conditional_entropy;
  out.value = out.mutual_information - out.classical_correlation;
  if (out.value < 0.0 && out.value >= -options.zero_clamp) {
    out.value = 0.0;
    out.classical_correlation = out.mutual_information;
  }
  return out;
}

std::vector<SweepRow> discord_sweep_werner(std::span<const double> z_values,
                                           const DiscordOptions& options, double rank_tol) {
  std::vector<SweepRow> rows;
  rows.reserve(z_values.size());
  for (double z : z_values) {
    const DensityMatrix rho = werner_state(z);
    const DiscordWitnessReport witness = witness_report(rho, rank_tol);
    rows.push_back({z, discord(rho, Subsystem::kA, options).value, witness.rank_l,
                    witness.witness_fired});
  }
  return rows;
}

std::string sweep_csv(std::span<const SweepRow> rows) {
  std::ostringstream os;
  os << "z,discord,rank_l,witness_fired\n";
  char buf[64];
  for (const auto& row : rows) {
    std::snprintf(buf, sizeof buf, "%.9g,%.9g,", row.z, row.discord);
    os << buf << row.rank_l << ',' << (row.witness_fired ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace qcorr
