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

/* C interface to the qcorr bipartite correlation library.
 *
 * Objects are opaque handles created by qcorr_*_create/load/... functions and
 * released with the matching qcorr_*_free. Every fallible call returns a
 * qcorr_status; on failure qcorr_last_error() describes the problem (the
 * message is thread-local and valid until the next failing call on the same
 * thread). Strings returned through `char**` are owned by the caller and
 * must be released with qcorr_string_free.
 *
 * Subsystem arguments use QCORR_SUBSYSTEM_A / QCORR_SUBSYSTEM_B. NULL channel
 * handles passed to qcorr_apply_local stand for the identity map.
 */
#ifndef QCORR_QCORR_H_
#define QCORR_QCORR_H_

#include <stddef.h>
#include <stdint.h>

#if defined(QCORR_BUILDING_LIBRARY)
#define QCORR_API __attribute__((visibility("default")))
#else
#define QCORR_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qcorr_status {
  QCORR_OK = 0,
  QCORR_ERR_INVALID_INPUT = 1,      /* malformed data, violated invariant */
  QCORR_ERR_DIMENSION = 2,          /* shapes do not fit together */
  QCORR_ERR_DOMAIN = 3,             /* valid input outside an operation's domain */
  QCORR_ERR_NULL_ARGUMENT = 4,
  QCORR_ERR_BUFFER_TOO_SMALL = 5,
  QCORR_ERR_INTERNAL = 6
} qcorr_status;

typedef enum qcorr_subsystem { QCORR_SUBSYSTEM_A = 0, QCORR_SUBSYSTEM_B = 1 } qcorr_subsystem;

typedef enum qcorr_region {
  QCORR_REGION_CLASSICAL = 0,
  QCORR_REGION_QUANTUM_LOW_L = 1,
  QCORR_REGION_QUANTUM_HIGH_L = 2
} qcorr_region;

typedef struct qcorr_state qcorr_state;
typedef struct qcorr_ensemble qcorr_ensemble;
typedef struct qcorr_channel qcorr_channel;

/* Numerical thresholds shared by every analysis. */
typedef struct qcorr_tolerances {
  double rank;       /* relative singular-value cutoff, default 1e-10 */
  double discord;    /* zero-discord threshold in bits, default 1e-6 */
  double commutator; /* max-entry commutator norm, default 1e-9 */
} qcorr_tolerances;

typedef struct qcorr_witness {
  size_t rank_l;
  size_t d_min;
  int witness_fired;
  double max_commutator_a;
  double max_commutator_b;
  int zero_discord_a;
  int zero_discord_b;
  double rank_gap; /* c_L / c_{L+1}; +inf without a discarded tail */
} qcorr_witness;

typedef struct qcorr_discord_result {
  double value;
  qcorr_subsystem measured;
  double mutual_information;
  double classical_correlation;
  int converged;
  int certified; /* 0 when the measured side has dimension >= 3 */
  int has_bloch_vector;
  double bloch_vector[3];
} qcorr_discord_result;

typedef struct qcorr_classification {
  size_t rank_l;
  size_t d_min;
  double discord_a; /* NaN when derived from the commutator test */
  double discord_b;
  int zero_discord_a;
  int zero_discord_b;
  double min_sv_gap;
  qcorr_region region;
  int locally_producible; /* 1 = constructed from a supplied ensemble */
} qcorr_classification;

typedef struct qcorr_counting {
  int64_t dim_a, dim_b, s;
  int64_t params_class;
  int64_t params_full;
  int measure_zero;
  int64_t f_value;
} qcorr_counting;

typedef struct qcorr_monotonicity {
  size_t trials;
  size_t violations;
  size_t unchanged;
} qcorr_monotonicity;

typedef struct qcorr_trial {
  size_t l_before;
  size_t l_after;
  int ok;
} qcorr_trial;

typedef struct qcorr_rank_check {
  size_t terms;
  int independent_a;
  int independent_b;
  size_t predicted_l;
  size_t measured_l;
} qcorr_rank_check;

typedef struct qcorr_monte_carlo {
  size_t samples;
  size_t region_counts[3]; /* indexed by qcorr_region */
  size_t rank_deficient;
  size_t low_rank;
  double min_sv_gap;
} qcorr_monte_carlo;

/* ---- library ---------------------------------------------------------- */

QCORR_API const char* qcorr_version(void);
QCORR_API const char* qcorr_last_error(void);
QCORR_API void qcorr_string_free(char* s);
QCORR_API qcorr_tolerances qcorr_default_tolerances(void);
/* Exit code contract of the command-line tool for a status:
 * 0 success, 1 internal, 2 input validation, 3 domain precondition. */
QCORR_API int qcorr_status_exit_code(qcorr_status status);

/* ---- states ----------------------------------------------------------- */

/* `werner:z`, `rho_l`, `rho_c`, `bell`, `schmidt2:d`, `mixed:da:db`. */
QCORR_API qcorr_status qcorr_state_builtin(const char* literal, qcorr_state** out);
QCORR_API qcorr_status qcorr_state_load(const char* path, qcorr_state** out);
QCORR_API qcorr_status qcorr_state_save(const qcorr_state* state, const char* path);
QCORR_API qcorr_status qcorr_state_from_json(const char* json, qcorr_state** out);
QCORR_API qcorr_status qcorr_state_to_json(const qcorr_state* state, char** json);
/* Row-major interleaved (re, im) entries, 2 * (da*db)^2 doubles. */
QCORR_API qcorr_status qcorr_state_create(size_t dim_a, size_t dim_b, const double* entries,
                                          qcorr_state** out);
QCORR_API qcorr_status qcorr_state_random(size_t dim_a, size_t dim_b, uint64_t seed,
                                          qcorr_state** out);
/* Classical state in the computational bases; row-major da x db probabilities. */
QCORR_API qcorr_status qcorr_state_classical(size_t dim_a, size_t dim_b,
                                             const double* probabilities, qcorr_state** out);
QCORR_API qcorr_status qcorr_state_dims(const qcorr_state* state, size_t* dim_a, size_t* dim_b);
QCORR_API qcorr_status qcorr_state_entry(const qcorr_state* state, size_t row, size_t col,
                                         double* re, double* im);
/* Max-entry distance between two states of equal shape. */
QCORR_API qcorr_status qcorr_state_distance(const qcorr_state* a, const qcorr_state* b,
                                            double* distance);
QCORR_API void qcorr_state_free(qcorr_state* state);

/* ---- ensembles -------------------------------------------------------- */

QCORR_API qcorr_status qcorr_ensemble_load(const char* path, qcorr_ensemble** out);
QCORR_API qcorr_status qcorr_ensemble_save(const qcorr_ensemble* ensemble, const char* path);
QCORR_API qcorr_status qcorr_ensemble_from_json(const char* json, qcorr_ensemble** out);
QCORR_API qcorr_status qcorr_ensemble_random(size_t dim_a, size_t dim_b, size_t terms,
                                             uint64_t seed, qcorr_ensemble** out);
QCORR_API qcorr_status qcorr_ensemble_size(const qcorr_ensemble* ensemble, size_t* terms);
QCORR_API qcorr_status qcorr_ensemble_assemble(const qcorr_ensemble* ensemble, qcorr_state** out);
QCORR_API qcorr_status qcorr_ensemble_rank_check(const qcorr_ensemble* ensemble,
                                                 const qcorr_tolerances* tol,
                                                 qcorr_rank_check* out);
/* Eliminates one dependent term; writes the reduction report as JSON and the
 * max-entry reassembly residual. QCORR_ERR_DOMAIN when no dependence exists. */
QCORR_API qcorr_status qcorr_ensemble_reduce(const qcorr_ensemble* ensemble,
                                             const qcorr_tolerances* tol, double* residual,
                                             char** json);
QCORR_API void qcorr_ensemble_free(qcorr_ensemble* ensemble);

/* ---- channels --------------------------------------------------------- */

/* `identity:d`, `phi` (the map taking rho_c to rho_l on A), `depolarize:d`. */
QCORR_API qcorr_status qcorr_channel_builtin(const char* literal, qcorr_channel** out);
QCORR_API qcorr_status qcorr_channel_load(const char* path, qcorr_channel** out);
QCORR_API qcorr_status qcorr_channel_save(const qcorr_channel* channel, const char* path);
QCORR_API qcorr_status qcorr_channel_random(size_t dim, size_t kraus_count, uint64_t seed,
                                            qcorr_channel** out);
QCORR_API qcorr_status qcorr_channel_dims(const qcorr_channel* channel, size_t* dim_in,
                                          size_t* dim_out, size_t* kraus_count);
QCORR_API qcorr_status qcorr_apply_local(const qcorr_channel* channel_a,
                                         const qcorr_channel* channel_b,
                                         const qcorr_state* state, qcorr_state** out);
QCORR_API void qcorr_channel_free(qcorr_channel* channel);

/* ---- correlation analysis -------------------------------------------- */

/* tol may be NULL for defaults everywhere below. */
QCORR_API qcorr_status qcorr_witness_report(const qcorr_state* state, const qcorr_tolerances* tol,
                                            qcorr_witness* out);
/* Copies up to `capacity` singular values; `count` receives the full length.
 * QCORR_ERR_BUFFER_TOO_SMALL when capacity < count. */
QCORR_API qcorr_status qcorr_singular_values(const qcorr_state* state, double* values,
                                             size_t capacity, size_t* count);
QCORR_API qcorr_status qcorr_rank_json(const qcorr_state* state, const qcorr_tolerances* tol,
                                       char** json);

/* ---- discord ---------------------------------------------------------- */

QCORR_API qcorr_status qcorr_mutual_information(const qcorr_state* state, double* out);
QCORR_API qcorr_status qcorr_discord(const qcorr_state* state, qcorr_subsystem measured,
                                     qcorr_discord_result* out);
QCORR_API qcorr_status qcorr_discord_json(const qcorr_state* state, qcorr_subsystem measured,
                                          char** json);
/* Werner family, CSV `z,discord,rank_l,witness_fired`. */
QCORR_API qcorr_status qcorr_sweep_werner_csv(const double* z_values, size_t count,
                                              const qcorr_tolerances* tol, char** csv);

/* ---- local channels and creation ------------------------------------- */

/* Builds seed, channels and output for an ensemble with at most d_min terms.
 * Any output pointer may be NULL. QCORR_ERR_DOMAIN when s > d_min. */
QCORR_API qcorr_status qcorr_create_local(const qcorr_ensemble* target, qcorr_state** seed,
                                          qcorr_channel** channel_a, qcorr_channel** channel_b,
                                          qcorr_state** output, double* residual);
QCORR_API qcorr_status qcorr_monotonicity_trial(const qcorr_state* state,
                                                const qcorr_channel* channel,
                                                qcorr_subsystem side,
                                                const qcorr_tolerances* tol, qcorr_trial* out);
QCORR_API qcorr_status qcorr_monotonicity_sweep(size_t dim_a, size_t dim_b, size_t trials,
                                                uint64_t seed, const qcorr_tolerances* tol,
                                                qcorr_monotonicity* out);

/* ---- state-space geometry -------------------------------------------- */

QCORR_API qcorr_status qcorr_counting_report(int64_t dim_a, int64_t dim_b, int64_t s,
                                             qcorr_counting* out);
QCORR_API qcorr_status qcorr_f_monotonicity_check(int64_t max_dim, int* ok);
/* `ensemble` may be NULL; when given it backs the locally-producible hint. */
QCORR_API qcorr_status qcorr_classify(const qcorr_state* state, const qcorr_ensemble* ensemble,
                                      const qcorr_tolerances* tol, qcorr_classification* out);
QCORR_API qcorr_status qcorr_classify_json(const qcorr_state* state, const char* state_id,
                                           const qcorr_ensemble* ensemble,
                                           const qcorr_tolerances* tol, char** json);
/* ensemble_terms == 0 samples Hilbert-Schmidt states; otherwise assembled
 * random ensembles with that many terms. Any of summary/json/csv may be NULL. */
QCORR_API qcorr_status qcorr_monte_carlo_regions(size_t dim_a, size_t dim_b, size_t samples,
                                               uint64_t seed, size_t ensemble_terms,
                                               const qcorr_tolerances* tol, qcorr_monte_carlo* summary,
                                               char** json, char** csv);

#ifdef __cplusplus
}
#endif

#endif /* QCORR_QCORR_H_ */
