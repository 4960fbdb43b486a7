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

#include "qcorr/qcorr.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <new>
#include <string>

#include "qcorr/channels.hpp"
#include "qcorr/correlation.hpp"
#include "qcorr/discord.hpp"
#include "qcorr/error.hpp"
#include "qcorr/geometry.hpp"
#include "qcorr/serialization.hpp"
#include "qcorr/states.hpp"

struct qcorr_state {
  qcorr::DensityMatrix value;
};

struct qcorr_ensemble {
  qcorr::ProductEnsemble value;
};

struct qcorr_channel {
  qcorr::QuantumChannel value;
};

namespace {

thread_local std::string g_last_error;

qcorr_status record(qcorr_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

qcorr_status status_for(qcorr::ErrorKind kind) {
  switch (kind) {
    case qcorr::ErrorKind::kInvalidInput:
      return QCORR_ERR_INVALID_INPUT;
    case qcorr::ErrorKind::kDimensionMismatch:
      return QCORR_ERR_DIMENSION;
    case qcorr::ErrorKind::kDomainPrecondition:
      return QCORR_ERR_DOMAIN;
    case qcorr::ErrorKind::kInternal:
      return QCORR_ERR_INTERNAL;
  }
  return QCORR_ERR_INTERNAL;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
qcorr_status guarded(F&& body) {
  try {
    body();
    return QCORR_OK;
  } catch (const qcorr::Error& e) {
    return record(status_for(e.kind()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return record(QCORR_ERR_INVALID_INPUT, std::string("json: ") + e.what());
  } catch (const std::bad_alloc&) {
    return record(QCORR_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return record(QCORR_ERR_INTERNAL, e.what());
  } catch (...) {
    return record(QCORR_ERR_INTERNAL, "unknown failure");
  }
}

#define QCORR_REQUIRE(ptr)                                                  \
  do {                                                                      \
    if ((ptr) == nullptr) return record(QCORR_ERR_NULL_ARGUMENT, #ptr " is null"); \
  } while (0)

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qcorr::Subsystem to_subsystem(qcorr_subsystem s) {
  if (s != QCORR_SUBSYSTEM_A && s != QCORR_SUBSYSTEM_B) {
    qcorr::fail(qcorr::ErrorKind::kInvalidInput, "subsystem must be A or B");
  }
  return s == QCORR_SUBSYSTEM_A ? qcorr::Subsystem::kA : qcorr::Subsystem::kB;
}

qcorr_tolerances resolve(const qcorr_tolerances* tol) {
  qcorr_tolerances t = tol ? *tol : qcorr_default_tolerances();
  if (!(t.rank > 0.0 && t.rank < 1.0) || !(t.discord >= 0.0) || !(t.commutator >= 0.0)) {
    qcorr::fail(qcorr::ErrorKind::kInvalidInput,
                "tolerances: rank must lie in (0,1), discord and commutator must be >= 0");
  }
  return t;
}

qcorr::ClassifyOptions classify_options(const qcorr_tolerances* tol) {
  const qcorr_tolerances t = resolve(tol);
  qcorr::ClassifyOptions options;
  options.rank_tol = t.rank;
  options.discord_tol = t.discord;
  options.commutator_tol = t.commutator;
  return options;
}

std::size_t parse_size(const std::string& text, const std::string& literal) {
  try {
    std::size_t used = 0;
    const unsigned long v = std::stoul(text, &used);
    if (used == text.size() && v > 0) return v;
  } catch (const std::exception&) {
  }
  qcorr::fail(qcorr::ErrorKind::kInvalidInput, "builtin channel '" + literal + "': bad dimension");
}

qcorr::QuantumChannel builtin_channel(const std::string& literal) {
  const auto colon = literal.find(':');
  const std::string name = literal.substr(0, colon);
  const bool has_arg = colon != std::string::npos;
  if (name == "phi" && !has_arg) return qcorr::phi_channel();
  if (name == "identity" && has_arg) {
    return qcorr::QuantumChannel::identity(parse_size(literal.substr(colon + 1), literal));
  }
  if (name == "depolarize" && has_arg) {
    const std::size_t d = parse_size(literal.substr(colon + 1), literal);
    std::vector<qcorr::ComplexMatrix> kraus;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        kraus.push_back(qcorr::basis_ket(d, i) * qcorr::basis_ket(d, j).adjoint() /
                        std::sqrt(double(d)));
      }
    }
    return qcorr::QuantumChannel(std::move(kraus));
  }
  qcorr::fail(qcorr::ErrorKind::kInvalidInput,
              "unknown builtin channel '" + literal + "' (expected phi, identity:d or depolarize:d)");
}

}  // namespace

extern "C" {

const char* qcorr_version(void) { return "0.1.0"; }

const char* qcorr_last_error(void) { return g_last_error.c_str(); }

void qcorr_string_free(char* s) { std::free(s); }

qcorr_tolerances qcorr_default_tolerances(void) {
  return {qcorr::tolerance::kRank, qcorr::tolerance::kDiscord, qcorr::tolerance::kCommutator};
}

int qcorr_status_exit_code(qcorr_status status) {
  switch (status) {
    case QCORR_OK:
      return 0;
    case QCORR_ERR_INVALID_INPUT:
    case QCORR_ERR_DIMENSION:
    case QCORR_ERR_NULL_ARGUMENT:
    case QCORR_ERR_BUFFER_TOO_SMALL:
      return 2;
    case QCORR_ERR_DOMAIN:
      return 3;
    case QCORR_ERR_INTERNAL:
      return 1;
  }
  return 1;
}

/* states */

qcorr_status qcorr_state_builtin(const char* literal, qcorr_state** out) {
  QCORR_REQUIRE(literal);
  QCORR_REQUIRE(out);
  return guarded([&] { *out = new qcorr_state{qcorr::builtin_state(literal)}; });
}

qcorr_status qcorr_state_load(const char* path, qcorr_state** out) {
  QCORR_REQUIRE(path);
  QCORR_REQUIRE(out);
  return guarded([&] { *out = new qcorr_state{qcorr::load_state(path)}; });
}

qcorr_status qcorr_state_save(const qcorr_state* state, const char* path) {
  QCORR_REQUIRE(state);
  QCORR_REQUIRE(path);
  return guarded([&] { qcorr::save_state(state->value, path); });
}

qcorr_status qcorr_state_from_json(const char* json, qcorr_state** out) {
  QCORR_REQUIRE(json);
  QCORR_REQUIRE(out);
  return guarded([&] {
    *out = new qcorr_state{qcorr::state_from_json(qcorr::Json::parse(json))};
  });
}

qcorr_status qcorr_state_to_json(const qcorr_state* state, char** json) {
  QCORR_REQUIRE(state);
  QCORR_REQUIRE(json);
  return guarded([&] { *json = dup_string(qcorr::state_to_json(state->value).dump()); });
}

qcorr_status qcorr_state_create(size_t dim_a, size_t dim_b, const double* entries,
                                qcorr_state** out) {
  QCORR_REQUIRE(entries);
  QCORR_REQUIRE(out);
  return guarded([&] {
    const auto n = static_cast<Eigen::Index>(dim_a * dim_b);
    qcorr::ComplexMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        m(i, j) = qcorr::Complex(entries[2 * (i * n + j)], entries[2 * (i * n + j) + 1]);
    *out = new qcorr_state{qcorr::DensityMatrix(std::move(m), dim_a, dim_b)};
  });
}

qcorr_status qcorr_state_random(size_t dim_a, size_t dim_b, uint64_t seed, qcorr_state** out) {
  QCORR_REQUIRE(out);
  return guarded([&] {
    if (dim_a == 0 || dim_b == 0) qcorr::fail(qcorr::ErrorKind::kInvalidInput, "dims must be >= 1");
    *out = new qcorr_state{qcorr::random_state(dim_a, dim_b, seed)};
  });
}

qcorr_status qcorr_state_classical(size_t dim_a, size_t dim_b, const double* probabilities,
                                   qcorr_state** out) {
  QCORR_REQUIRE(probabilities);
  QCORR_REQUIRE(out);
  return guarded([&] {
    qcorr::RealMatrix p(static_cast<Eigen::Index>(dim_a), static_cast<Eigen::Index>(dim_b));
    for (std::size_t i = 0; i < dim_a; ++i)
      for (std::size_t j = 0; j < dim_b; ++j)
        p(Eigen::Index(i), Eigen::Index(j)) = probabilities[i * dim_b + j];
    *out = new qcorr_state{qcorr::classical_state(p)};
  });
}

qcorr_status qcorr_state_dims(const qcorr_state* state, size_t* dim_a, size_t* dim_b) {
  QCORR_REQUIRE(state);
  if (dim_a) *dim_a = state->value.dim_a();
  if (dim_b) *dim_b = state->value.dim_b();
  return QCORR_OK;
}

qcorr_status qcorr_state_entry(const qcorr_state* state, size_t row, size_t col, double* re,
                               double* im) {
  QCORR_REQUIRE(state);
  if (row >= state->value.dim() || col >= state->value.dim()) {
    return record(QCORR_ERR_DIMENSION, "qcorr_state_entry: index out of range");
  }
  const qcorr::Complex v = state->value.matrix()(Eigen::Index(row), Eigen::Index(col));
  if (re) *re = v.real();
  if (im) *im = v.imag();
  return QCORR_OK;
}

qcorr_status qcorr_state_distance(const qcorr_state* a, const qcorr_state* b, double* distance) {
  QCORR_REQUIRE(a);
  QCORR_REQUIRE(b);
  QCORR_REQUIRE(distance);
  if (a->value.dim_a() != b->value.dim_a() || a->value.dim_b() != b->value.dim_b()) {
    return record(QCORR_ERR_DIMENSION, "qcorr_state_distance: shapes differ");
  }
  *distance = qcorr::max_abs(qcorr::ComplexMatrix(a->value.matrix() - b->value.matrix()));
  return QCORR_OK;
}

void qcorr_state_free(qcorr_state* state) { delete state; }

/* ensembles */

qcorr_status qcorr_ensemble_load(const char* path, qcorr_ensemble** out) {
  QCORR_REQUIRE(path);
  QCORR_REQUIRE(out);
  return guarded([&] { *out = new qcorr_ensemble{qcorr::load_ensemble(path)}; });
}

qcorr_status qcorr_ensemble_save(const qcorr_ensemble* ensemble, const char* path) {
  QCORR_REQUIRE(ensemble);
  QCORR_REQUIRE(path);
  return guarded([&] { qcorr::save_ensemble(ensemble->value, path); });
}

qcorr_status qcorr_ensemble_from_json(const char* json, qcorr_ensemble** out) {
  QCORR_REQUIRE(json);
  QCORR_REQUIRE(out);
  return guarded([&] {
    *out = new qcorr_ensemble{qcorr::ensemble_from_json(qcorr::Json::parse(json))};
  });
}

qcorr_status qcorr_ensemble_random(size_t dim_a, size_t dim_b, size_t terms, uint64_t seed,
                                   qcorr_ensemble** out) {
  QCORR_REQUIRE(out);
  return guarded([&] {
    if (dim_a == 0 || dim_b == 0) qcorr::fail(qcorr::ErrorKind::kInvalidInput, "dims must be >= 1");
    *out = new qcorr_ensemble{qcorr::random_ensemble(dim_a, dim_b, terms, seed)};
  });
}

qcorr_status qcorr_ensemble_size(const qcorr_ensemble* ensemble, size_t* terms) {
  QCORR_REQUIRE(ensemble);
  QCORR_REQUIRE(terms);
  *terms = ensemble->value.size();
  return QCORR_OK;
}

qcorr_status qcorr_ensemble_assemble(const qcorr_ensemble* ensemble, qcorr_state** out) {
  QCORR_REQUIRE(ensemble);
  QCORR_REQUIRE(out);
  return guarded([&] { *out = new qcorr_state{qcorr::assemble(ensemble->value)}; });
}

qcorr_status qcorr_ensemble_rank_check(const qcorr_ensemble* ensemble, const qcorr_tolerances* tol,
                                       qcorr_rank_check* out) {
  QCORR_REQUIRE(ensemble);
  QCORR_REQUIRE(out);
  return guarded([&] {
    const auto c = qcorr::ensemble_rank_theorem_check(ensemble->value, resolve(tol).rank);
    *out = {c.terms, c.independent_a, c.independent_b, c.predicted_l, c.measured_l};
  });
}

qcorr_status qcorr_ensemble_reduce(const qcorr_ensemble* ensemble, const qcorr_tolerances* tol,
                                   double* residual, char** json) {
  QCORR_REQUIRE(ensemble);
  return guarded([&] {
    const auto reduced = qcorr::reduce_dependent_ensemble(ensemble->value, resolve(tol).rank);
    const double r = qcorr::max_abs(
        qcorr::ComplexMatrix(reduced.reassemble() - qcorr::assemble(ensemble->value).matrix()));
    if (residual) *residual = r;
    if (json) {
      qcorr::Json terms = qcorr::Json::array();
      for (const auto& t : reduced.terms) {
        terms.push_back({{"coefficient", t.coefficient},
                         {"operator_a", qcorr::matrix_to_json(t.operator_a)},
                         {"operator_b", qcorr::matrix_to_json(t.operator_b)}});
      }
      const qcorr::Json j = {
          {"dependent_side", std::string(1, qcorr::subsystem_name(reduced.dependent_side))},
          {"eliminated_index", reduced.eliminated_index},
          {"dependence", reduced.dependence},
          {"all_coefficients_nonnegative", reduced.all_coefficients_nonnegative},
          {"mixed_operators_positive", reduced.mixed_operators_positive},
          {"reassembly_residual", r},
          {"terms", std::move(terms)}};
      *json = dup_string(j.dump());
    }
  });
}

void qcorr_ensemble_free(qcorr_ensemble* ensemble) { delete ensemble; }

/* channels */

qcorr_status qcorr_channel_builtin(const char* literal, qcorr_channel** out) {
  QCORR_REQUIRE(literal);
  QCORR_REQUIRE(out);
  return guarded([&] { *out = new qcorr_channel{builtin_channel(literal)}; });
}

qcorr_status qcorr_channel_load(const char* path, qcorr_channel** out) {
  QCORR_REQUIRE(path);
  QCORR_REQUIRE(out);
  return guarded([&] { *out = new qcorr_channel{qcorr::load_channel(path)}; });
}

qcorr_status qcorr_channel_save(const qcorr_channel* channel, const char* path) {
  QCORR_REQUIRE(channel);
  QCORR_REQUIRE(path);
  return guarded([&] { qcorr::save_channel(channel->value, path); });
}

qcorr_status qcorr_channel_random(size_t dim, size_t kraus_count, uint64_t seed,
                                  qcorr_channel** out) {
  QCORR_REQUIRE(out);
  return guarded([&] { *out = new qcorr_channel{qcorr::random_channel(dim, kraus_count, seed)}; });
}

qcorr_status qcorr_channel_dims(const qcorr_channel* channel, size_t* dim_in, size_t* dim_out,
                                size_t* kraus_count) {
  QCORR_REQUIRE(channel);
  if (dim_in) *dim_in = channel->value.dim_in();
  if (dim_out) *dim_out = channel->value.dim_out();
  if (kraus_count) *kraus_count = channel->value.kraus().size();
  return QCORR_OK;
}

qcorr_status qcorr_apply_local(const qcorr_channel* channel_a, const qcorr_channel* channel_b,
                               const qcorr_state* state, qcorr_state** out) {
  QCORR_REQUIRE(state);
  QCORR_REQUIRE(out);
  return guarded([&] {
    std::optional<qcorr::QuantumChannel> a;
    std::optional<qcorr::QuantumChannel> b;
    if (channel_a) a = channel_a->value;
    if (channel_b) b = channel_b->value;
    *out = new qcorr_state{qcorr::apply_local(a, b, state->value)};
  });
}

void qcorr_channel_free(qcorr_channel* channel) { delete channel; }

/* correlation */

qcorr_status qcorr_witness_report(const qcorr_state* state, const qcorr_tolerances* tol,
                                  qcorr_witness* out) {
  QCORR_REQUIRE(state);
  QCORR_REQUIRE(out);
  return guarded([&] {
    const qcorr_tolerances t = resolve(tol);
    const auto w = qcorr::witness_report(state->value, t.rank, t.commutator);
    *out = {w.rank_l,         w.d_min,           w.witness_fired,  w.max_commutator_a,
            w.max_commutator_b, w.zero_discord_a, w.zero_discord_b, w.rank_gap};
  });
}

qcorr_status qcorr_singular_values(const qcorr_state* state, double* values, size_t capacity,
                                   size_t* count) {
  QCORR_REQUIRE(state);
  QCORR_REQUIRE(count);
  qcorr_status status = QCORR_OK;
  const qcorr_status run = guarded([&] {
    const auto analysis = qcorr::analyze(state->value);
    const auto n = static_cast<std::size_t>(analysis.singular_values.size());
    *count = n;
    if (capacity < n || values == nullptr) {
      status = record(QCORR_ERR_BUFFER_TOO_SMALL, "qcorr_singular_values: buffer too small");
      return;
    }
    for (std::size_t i = 0; i < n; ++i) values[i] = analysis.singular_values(Eigen::Index(i));
  });
  return run != QCORR_OK ? run : status;
}

qcorr_status qcorr_rank_json(const qcorr_state* state, const qcorr_tolerances* tol, char** json) {
  QCORR_REQUIRE(state);
  QCORR_REQUIRE(json);
  return guarded([&] {
    const qcorr_tolerances t = resolve(tol);
    qcorr::Json j = qcorr::witness_to_json(qcorr::witness_report(state->value, t.rank, t.commutator));
    j["dim_a"] = state->value.dim_a();
    j["dim_b"] = state->value.dim_b();
    *json = dup_string(j.dump());
  });
}

/* discord */

qcorr_status qcorr_mutual_information(const qcorr_state* state, double* out) {
  QCORR_REQUIRE(state);
  QCORR_REQUIRE(out);
  return guarded([&] { *out = qcorr::mutual_information(state->value); });
}

qcorr_status qcorr_discord(const qcorr_state* state, qcorr_subsystem measured,
                           qcorr_discord_result* out) {
  QCORR_REQUIRE(state);
  QCORR_REQUIRE(out);
  return guarded([&] {
    const auto r = qcorr::discord(state->value, to_subsystem(measured));
    *out = {};
    out->value = r.value;
    out->measured = measured;
    out->mutual_information = r.mutual_information;
    out->classical_correlation = r.classical_correlation;
    out->converged = r.converged;
    out->certified = r.certified;
    out->has_bloch_vector = r.bloch_vector.has_value();
    if (r.bloch_vector) {
      for (int k = 0; k < 3; ++k) out->bloch_vector[k] = (*r.bloch_vector)(k);
    }
  });
}

qcorr_status qcorr_discord_json(const qcorr_state* state, qcorr_subsystem measured, char** json) {
  QCORR_REQUIRE(state);
  QCORR_REQUIRE(json);
  return guarded([&] {
    *json = dup_string(qcorr::discord_to_json(qcorr::discord(state->value, to_subsystem(measured))).dump());
  });
}

qcorr_status qcorr_sweep_werner_csv(const double* z_values, size_t count,
                                    const qcorr_tolerances* tol, char** csv) {
  QCORR_REQUIRE(z_values);
  QCORR_REQUIRE(csv);
  return guarded([&] {
    const auto rows = qcorr::discord_sweep_werner(std::span<const double>(z_values, count), {},
                                                  resolve(tol).rank);
    *csv = dup_string(qcorr::sweep_csv(rows));
  });
}

/* creation and monotonicity */

qcorr_status qcorr_create_local(const qcorr_ensemble* target, qcorr_state** seed,
                                qcorr_channel** channel_a, qcorr_channel** channel_b,
                                qcorr_state** output, double* residual) {
  QCORR_REQUIRE(target);
  return guarded([&] {
    auto created = qcorr::synthesize_local_creation(target->value);
    if (residual) *residual = created.residual;
    if (seed) *seed = new qcorr_state{std::move(created.seed)};
    if (channel_a) *channel_a = new qcorr_channel{std::move(created.channel_a)};
    if (channel_b) *channel_b = new qcorr_channel{std::move(created.channel_b)};
    if (output) *output = new qcorr_state{std::move(created.output)};
  });
}

qcorr_status qcorr_monotonicity_trial(const qcorr_state* state, const qcorr_channel* channel,
                                      qcorr_subsystem side, const qcorr_tolerances* tol,
                                      qcorr_trial* out) {
  QCORR_REQUIRE(state);
  QCORR_REQUIRE(channel);
  QCORR_REQUIRE(out);
  return guarded([&] {
    const auto t = qcorr::l_monotonicity_trial(state->value, channel->value, to_subsystem(side),
                                               resolve(tol).rank);
    *out = {t.l_before, t.l_after, t.ok};
  });
}

qcorr_status qcorr_monotonicity_sweep(size_t dim_a, size_t dim_b, size_t trials, uint64_t seed,
                                      const qcorr_tolerances* tol, qcorr_monotonicity* out) {
  QCORR_REQUIRE(out);
  return guarded([&] {
    if (dim_a == 0 || dim_b == 0) qcorr::fail(qcorr::ErrorKind::kInvalidInput, "dims must be >= 1");
    const auto s = qcorr::monotonicity_sweep(dim_a, dim_b, trials, seed, resolve(tol).rank);
    *out = {s.trials, s.violations, s.unchanged};
  });
}

/* geometry */

qcorr_status qcorr_counting_report(int64_t dim_a, int64_t dim_b, int64_t s, qcorr_counting* out) {
  QCORR_REQUIRE(out);
  return guarded([&] {
    const auto r = qcorr::counting_report(dim_a, dim_b, s);
    *out = {r.dim_a, r.dim_b, r.s, r.params_class, r.params_full, r.measure_zero, r.f_value};
  });
}

qcorr_status qcorr_f_monotonicity_check(int64_t max_dim, int* ok) {
  QCORR_REQUIRE(ok);
  return guarded([&] { *ok = qcorr::f_monotonicity_check(max_dim); });
}

qcorr_status qcorr_classify(const qcorr_state* state, const qcorr_ensemble* ensemble,
                            const qcorr_tolerances* tol, qcorr_classification* out) {
  QCORR_REQUIRE(state);
  QCORR_REQUIRE(out);
  return guarded([&] {
    const auto r = qcorr::classify(state->value, "", classify_options(tol),
                                   ensemble ? &ensemble->value : nullptr);
    *out = {r.rank_l,
            r.d_min,
            r.discord_a,
            r.discord_b,
            r.zero_discord_a,
            r.zero_discord_b,
            r.relative_min_singular_value,
            static_cast<qcorr_region>(r.region),
            r.locally_producible_hint == qcorr::ProducibleHint::kYesConstructed};
  });
}

qcorr_status qcorr_classify_json(const qcorr_state* state, const char* state_id,
                                 const qcorr_ensemble* ensemble, const qcorr_tolerances* tol,
                                 char** json) {
  QCORR_REQUIRE(state);
  QCORR_REQUIRE(json);
  return guarded([&] {
    const auto r = qcorr::classify(state->value, state_id ? state_id : "", classify_options(tol),
                                   ensemble ? &ensemble->value : nullptr);
    *json = dup_string(qcorr::classification_to_json(r).dump());
  });
}

qcorr_status qcorr_monte_carlo_regions(size_t dim_a, size_t dim_b, size_t samples, uint64_t seed,
                                       size_t ensemble_terms, const qcorr_tolerances* tol,
                                       qcorr_monte_carlo* summary, char** json, char** csv) {
  return guarded([&] {
    if (dim_a == 0 || dim_b == 0) qcorr::fail(qcorr::ErrorKind::kInvalidInput, "dims must be >= 1");
    const auto source = ensemble_terms == 0 ? qcorr::SampleSource::kHilbertSchmidt
                                            : qcorr::SampleSource::kProductEnsemble;
    const auto s = qcorr::monte_carlo_regions(dim_a, dim_b, samples, seed, classify_options(tol),
                                              source, ensemble_terms);
    if (summary) {
      summary->samples = s.samples;
      for (int k = 0; k < 3; ++k) summary->region_counts[k] = s.region_counts[std::size_t(k)];
      summary->rank_deficient = s.rank_deficient;
      summary->low_rank = s.low_rank;
      summary->min_sv_gap = s.min_relative_singular_value;
    }
    char* json_out = nullptr;
    if (json) json_out = dup_string(qcorr::monte_carlo_to_json(s).dump());
    if (csv) {
      try {
        *csv = dup_string(qcorr::monte_carlo_csv(s));
      } catch (...) {
        std::free(json_out);
        throw;
      }
    }
    if (json) *json = json_out;
  });
}

}  // extern "C"
