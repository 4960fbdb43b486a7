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

#include "qcorr/serialization.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "qcorr/error.hpp"

namespace qcorr {

namespace {

[[noreturn]] void malformed(const std::string& context, const std::string& detail) {
  fail(ErrorKind::kInvalidInput, context + ": " + detail);
}

std::size_t positive_dim(const Json& j, const char* key, const std::string& context) {
  if (!j.contains(key) || !j.at(key).is_number_integer() || j.at(key).get<long long>() < 1) {
    malformed(context, std::string("missing or invalid '") + key + "'");
  }
  return j.at(key).get<std::size_t>();
}

Json finite_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back({m(i, k).real(), m(i, k).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const Json& j, const std::string& context) {
  if (!j.is_array() || j.empty()) malformed(context, "matrix must be a non-empty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) malformed(context, "matrix rows must be non-empty arrays");
  const std::size_t cols = j[0].size();
  ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = j[i];
    if (!row.is_array() || row.size() != cols) malformed(context, "ragged matrix rows");
    for (std::size_t k = 0; k < cols; ++k) {
      const Json& e = row[k];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
        malformed(context, "matrix entries must be [re, im] number pairs");
      }
      m(Eigen::Index(i), Eigen::Index(k)) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  }
  return m;
}

Json state_to_json(const DensityMatrix& rho) {
  return {{"dim_a", rho.dim_a()}, {"dim_b", rho.dim_b()}, {"matrix", matrix_to_json(rho.matrix())}};
}

DensityMatrix state_from_json(const Json& j) {
  const std::string ctx = "state";
  if (!j.is_object()) malformed(ctx, "expected a JSON object");
  const std::size_t da = positive_dim(j, "dim_a", ctx);
  const std::size_t db = positive_dim(j, "dim_b", ctx);
  if (!j.contains("matrix")) malformed(ctx, "missing 'matrix'");
  return DensityMatrix(matrix_from_json(j.at("matrix"), ctx), da, db);
}

Json ensemble_to_json(const ProductEnsemble& ensemble) {
  Json terms = Json::array();
  for (const auto& t : ensemble.terms) {
    terms.push_back({{"weight", t.weight},
                     {"state_a", matrix_to_json(t.state_a.matrix())},
                     {"state_b", matrix_to_json(t.state_b.matrix())}});
  }
  return {{"dim_a", ensemble.dim_a}, {"dim_b", ensemble.dim_b}, {"terms", std::move(terms)}};
}

ProductEnsemble ensemble_from_json(const Json& j) {
  const std::string ctx = "ensemble";
  if (!j.is_object()) malformed(ctx, "expected a JSON object");
  ProductEnsemble e;
  e.dim_a = positive_dim(j, "dim_a", ctx);
  e.dim_b = positive_dim(j, "dim_b", ctx);
  if (!j.contains("terms") || !j.at("terms").is_array()) malformed(ctx, "missing 'terms' array");
  for (const Json& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("weight") || !t.at("weight").is_number() ||
        !t.contains("state_a") || !t.contains("state_b")) {
      malformed(ctx, "each term needs 'weight', 'state_a' and 'state_b'");
    }
    e.terms.push_back({t.at("weight").get<double>(),
                       DensityMatrix::local(matrix_from_json(t.at("state_a"), ctx + " state_a")),
                       DensityMatrix::local(matrix_from_json(t.at("state_b"), ctx + " state_b"))});
  }
  validate_ensemble(e);
  return e;
}

Json channel_to_json(const QuantumChannel& channel) {
  Json kraus = Json::array();
  for (const auto& k : channel.kraus()) kraus.push_back(matrix_to_json(k));
  Json j = {{"dim_in", channel.dim_in()}, {"dim_out", channel.dim_out()}, {"kraus", std::move(kraus)}};
  if (channel.trace_decreasing()) j["trace_decreasing"] = true;
  return j;
}

QuantumChannel channel_from_json(const Json& j) {
  const std::string ctx = "channel";
  if (!j.is_object()) malformed(ctx, "expected a JSON object");
  const std::size_t dim_in = positive_dim(j, "dim_in", ctx);
  const std::size_t dim_out = positive_dim(j, "dim_out", ctx);
  if (!j.contains("kraus") || !j.at("kraus").is_array()) malformed(ctx, "missing 'kraus' array");
  std::vector<ComplexMatrix> kraus;
  for (const Json& k : j.at("kraus")) kraus.push_back(matrix_from_json(k, ctx + " kraus"));
  bool trace_decreasing = false;
  if (j.contains("trace_decreasing")) {
    if (!j.at("trace_decreasing").is_boolean()) malformed(ctx, "'trace_decreasing' must be a boolean");
    trace_decreasing = j.at("trace_decreasing").get<bool>();
  }
  QuantumChannel channel(std::move(kraus), trace_decreasing);
  if (channel.dim_in() != dim_in || channel.dim_out() != dim_out) {
    fail(ErrorKind::kDimensionMismatch, "channel: Kraus shape disagrees with dim_in/dim_out");
  }
  return channel;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::kInvalidInput, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    fail(ErrorKind::kInvalidInput, "'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_json_file(const Json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::kInvalidInput, "cannot write '" + path + "'");
  out << j.dump(2) << '\n';
  if (!out) fail(ErrorKind::kInternal, "write to '" + path + "' failed");
}

void save_state(const DensityMatrix& rho, const std::string& path) {
  write_json_file(state_to_json(rho), path);
}

DensityMatrix load_state(const std::string& path) { return state_from_json(read_json_file(path)); }

void save_ensemble(const ProductEnsemble& ensemble, const std::string& path) {
  write_json_file(ensemble_to_json(ensemble), path);
}

ProductEnsemble load_ensemble(const std::string& path) {
  return ensemble_from_json(read_json_file(path));
}

void save_channel(const QuantumChannel& channel, const std::string& path) {
  write_json_file(channel_to_json(channel), path);
}

QuantumChannel load_channel(const std::string& path) {
  return channel_from_json(read_json_file(path));
}

Json real_vector_to_json(const RealVector& v) {
  Json out = Json::array();
  for (double x : v) out.push_back(finite_or_null(x));
  return out;
}

Json witness_to_json(const DiscordWitnessReport& r) {
  return {{"rank_l", r.rank_l},
          {"d_min", r.d_min},
          {"witness_fired", r.witness_fired},
          {"max_commutator_a", r.max_commutator_a},
          {"max_commutator_b", r.max_commutator_b},
          {"zero_discord_a", r.zero_discord_a},
          {"zero_discord_b", r.zero_discord_b},
          {"rank_gap", finite_or_null(r.rank_gap)},
          {"singular_values", real_vector_to_json(r.singular_values)}};
}

Json discord_to_json(const DiscordResult& r, bool include_trace) {
  Json j = {{"value", r.value},
            {"measured_subsystem", std::string(1, subsystem_name(r.measured))},
            {"mutual_information", r.mutual_information},
            {"classical_correlation", r.classical_correlation},
            {"converged", r.converged},
            {"certified", r.certified},
            {"evaluations", r.evaluations},
            {"measurement_basis", matrix_to_json(r.measurement_basis)}};
  j["bloch_vector"] = r.bloch_vector
                          ? Json::array({r.bloch_vector->x(), r.bloch_vector->y(), r.bloch_vector->z()})
                          : Json(nullptr);
  if (include_trace) {
    Json trace = Json::array();
    for (const auto& s : r.optimizer_trace) trace.push_back({{"candidate", s.candidate}, {"value", s.value}});
    j["optimizer_trace"] = std::move(trace);
  }
  return j;
}

Json classification_to_json(const ClassificationReport& r) {
  return {{"state_id", r.state_id},
          {"rank_l", r.rank_l},
          {"d_min", r.d_min},
          {"discord_a", finite_or_null(r.discord_a)},
          {"discord_b", finite_or_null(r.discord_b)},
          {"discord_method_a", r.discord_from_optimizer_a ? "optimizer" : "commutator"},
          {"discord_method_b", r.discord_from_optimizer_b ? "optimizer" : "commutator"},
          {"zero_discord_a", r.zero_discord_a},
          {"zero_discord_b", r.zero_discord_b},
          {"max_commutator_a", r.max_commutator_a},
          {"max_commutator_b", r.max_commutator_b},
          {"min_sv_gap", r.relative_min_singular_value},
          {"region", region_name(r.region)},
          {"locally_producible_hint", hint_name(r.locally_producible_hint)}};
}

Json counting_to_json(const CountingReport& r) {
  return {{"dim_a", r.dim_a},           {"dim_b", r.dim_b},
          {"s", r.s},                   {"params_class", r.params_class},
          {"params_full", r.params_full}, {"measure_zero", r.measure_zero},
          {"f_value", r.f_value}};
}

Json monte_carlo_to_json(const MonteCarloSummary& s) {
  Json fractions = Json::object();
  Json counts = Json::object();
  for (Region region : {Region::kClassical, Region::kQuantumLowL, Region::kQuantumHighL}) {
    fractions[region_name(region)] = s.fraction(region);
    counts[region_name(region)] = s.region_counts[std::size_t(region)];
  }
  return {{"dim_a", s.dim_a},
          {"dim_b", s.dim_b},
          {"samples", s.samples},
          {"seed", s.seed},
          {"source", s.source == SampleSource::kHilbertSchmidt ? "hilbert_schmidt" : "product_ensemble"},
          {"ensemble_terms", s.ensemble_terms},
          {"region_counts", std::move(counts)},
          {"region_fractions", std::move(fractions)},
          {"rank_deficient", s.rank_deficient},
          {"low_rank", s.low_rank},
          {"min_sv_gap", finite_or_null(s.min_relative_singular_value)}};
}

Json monotonicity_to_json(const MonotonicitySweep& s) {
  return {{"dim_a", s.dim_a},
          {"dim_b", s.dim_b},
          {"trials", s.trials},
          {"violations", s.violations},
          {"unchanged", s.unchanged},
          {"first_violations", s.first_violations}};
}

Json rank_check_to_json(const EnsembleRankCheck& c) {
  return {{"terms", c.terms},
          {"gram_rank_a", c.gram_rank_a},
          {"gram_rank_b", c.gram_rank_b},
          {"independent_a", c.independent_a},
          {"independent_b", c.independent_b},
          {"predicted_l", c.predicted_l},
          {"measured_l", c.measured_l},
          {"consistent", c.consistent()}};
}

}  // namespace qcorr
