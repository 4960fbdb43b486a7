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
#include <cstdio>
#include <limits>
#include <sstream>

#include "qcorr/correlation.hpp"
#include "qcorr/error.hpp"
#include "qcorr/parallel.hpp"

namespace qcorr {

std::int64_t f_value(std::int64_t dim_a, std::int64_t dim_b) {
  const std::int64_t a = dim_a;
  const std::int64_t b = dim_b;
  return a * a * b * b - a * a * a - a * b * b + a;
}

CountingReport counting_report(std::int64_t dim_a, std::int64_t dim_b, std::int64_t s) {
  if (dim_a < 1 || dim_b < 1 || s < 1) {
    fail(ErrorKind::kInvalidInput, "counting_report: dimensions and s must be >= 1");
  }
  if (dim_a > 10000 || dim_b > 10000) {
    fail(ErrorKind::kInvalidInput, "counting_report: dimensions above 10000 overflow 64-bit counts");
  }
  CountingReport r;
  r.dim_a = dim_a;
  r.dim_b = dim_b;
  r.s = s;
  r.params_class = s * (dim_a * dim_a - 1 + dim_b * dim_b - 1) + s - 1;
  r.params_full = dim_a * dim_a * dim_b * dim_b - 1;
  r.measure_zero = r.params_class < r.params_full;
  r.f_value = f_value(dim_a, dim_b);
  return r;
}

bool f_monotonicity_check(std::int64_t max_dim) {
  if (max_dim < 2) fail(ErrorKind::kInvalidInput, "f_monotonicity_check: max_dim must be >= 2");
  for (std::int64_t a = 2; a <= max_dim; ++a) {
    for (std::int64_t b = a; b <= max_dim; ++b) {
      const std::int64_t f = f_value(a, b);
      if (f <= 0) return false;
      if (b + 1 <= max_dim && f_value(a, b + 1) < f) return false;
      if (a + 1 <= b && f_value(a + 1, b) < f) return false;
    }
  }
  return true;
}

const char* region_name(Region region) {
  switch (region) {
    case Region::kClassical:
      return "classical";
    case Region::kQuantumLowL:
      return "quantum_low_l";
    case Region::kQuantumHighL:
      return "quantum_high_l";
  }
  return "unknown";
}

const char* hint_name(ProducibleHint hint) {
  return hint == ProducibleHint::kYesConstructed ? "yes_constructed" : "unknown";
}

ClassificationReport classify(const DensityMatrix& rho, const std::string& state_id,
                              const ClassifyOptions& options, const ProductEnsemble* ensemble) {
  ClassificationReport r;
  r.state_id = state_id;
  const CorrelationAnalysis analysis = analyze(rho, options.rank_tol);
  const DiscordWitnessReport witness = witness_report(analysis, options.commutator_tol);
  r.rank_l = witness.rank_l;
  r.d_min = witness.d_min;
  r.zero_discord_a = witness.zero_discord_a;
  r.zero_discord_b = witness.zero_discord_b;
  r.max_commutator_a = witness.max_commutator_a;
  r.max_commutator_b = witness.max_commutator_b;
  r.relative_min_singular_value = analysis.relative_min_singular_value();

  auto side_is_zero = [&](Subsystem side, double& value, bool& from_optimizer, bool zero_flag) {
    if (rho.dim_of(side) == 2) {
      value = discord(rho, side, options.discord).value;
      from_optimizer = true;
      return value <= options.discord_tol;
    }
    value = std::numeric_limits<double>::quiet_NaN();
    from_optimizer = false;
    return zero_flag;
  };
  const bool zero_a = side_is_zero(Subsystem::kA, r.discord_a, r.discord_from_optimizer_a, r.zero_discord_a);
  const bool zero_b = side_is_zero(Subsystem::kB, r.discord_b, r.discord_from_optimizer_b, r.zero_discord_b);

  if (witness.witness_fired) {
    r.region = Region::kQuantumHighL;
  } else if (zero_a && zero_b) {
    r.region = Region::kClassical;
  } else {
    r.region = Region::kQuantumLowL;
  }

  if (ensemble != nullptr && ensemble->dim_a == rho.dim_a() && ensemble->dim_b == rho.dim_b() &&
      ensemble->size() <= r.d_min) {
    const double residual = max_abs(ComplexMatrix(assemble(*ensemble).matrix() - rho.matrix()));
    if (residual <= 1e-9) r.locally_producible_hint = ProducibleHint::kYesConstructed;
  }
  return r;
}

double MonteCarloSummary::fraction(Region region) const {
  if (samples == 0) return 0.0;
  return double(region_counts[std::size_t(region)]) / double(samples);
}

MonteCarloSummary monte_carlo_regions(std::size_t dim_a, std::size_t dim_b, std::size_t samples,
                                      std::uint64_t seed, const ClassifyOptions& options,
                                      SampleSource source, std::size_t ensemble_terms) {
  if (samples == 0) fail(ErrorKind::kInvalidInput, "monte_carlo_regions: need at least one sample");
  MonteCarloSummary out;
  out.dim_a = dim_a;
  out.dim_b = dim_b;
  out.samples = samples;
  out.seed = seed;
  out.source = source;
  out.ensemble_terms = source == SampleSource::kProductEnsemble ? ensemble_terms : 0;
  out.reports.resize(samples);
  parallel_for(samples, [&](std::size_t i) {
    Rng rng(split_seed(seed, i));
    const DensityMatrix rho = source == SampleSource::kHilbertSchmidt
                                  ? random_state(dim_a, dim_b, rng)
                                  : assemble(random_ensemble(dim_a, dim_b, ensemble_terms, rng));
    out.reports[i] = classify(rho, std::to_string(i), options);
  });

  const std::size_t full_rank = std::min(dim_a * dim_a, dim_b * dim_b);
  const std::size_t d_min = std::min(dim_a, dim_b);
  out.min_relative_singular_value = std::numeric_limits<double>::infinity();
  for (const auto& r : out.reports) {
    ++out.region_counts[std::size_t(r.region)];
    if (r.rank_l < full_rank) ++out.rank_deficient;
    if (r.rank_l <= d_min) ++out.low_rank;
    out.min_relative_singular_value =
        std::min(out.min_relative_singular_value, r.relative_min_singular_value);
  }
  return out;
}

std::string monte_carlo_csv(const MonteCarloSummary& summary) {
  std::ostringstream os;
  os << "sample_id,rank_l,discord_a,discord_b,region,min_sv_gap\n";
  char buf[128];
  for (const auto& r : summary.reports) {
    std::snprintf(buf, sizeof buf, "%s,%zu,%.9g,%.9g,%s,%.9g\n", r.state_id.c_str(), r.rank_l,
                  r.discord_a, r.discord_b, region_name(r.region), r.relative_min_singular_value);
    os << buf;
  }
  return os.str();
}

}  // namespace qcorr
