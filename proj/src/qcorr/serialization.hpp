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

// JSON codecs for states, ensembles and channels, plus JSON views of the
// analysis reports.
//
// Matrix encoding: row-major nested arrays, each entry a [re, im] pair.
//   state:    {"dim_a": int, "dim_b": int, "matrix": M}
//   ensemble: {"dim_a": int, "dim_b": int,
//              "terms": [{"weight": w, "state_a": M, "state_b": M}, ...]}
//   channel:  {"dim_in": int, "dim_out": int, "kraus": [M, ...],
//              "trace_decreasing": bool (optional, default false)}

#include <string>

#include <json.hpp>

#include "qcorr/channels.hpp"
#include "qcorr/correlation.hpp"
#include "qcorr/discord.hpp"
#include "qcorr/geometry.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

using Json = nlohmann::json;

Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j, const std::string& context);

Json state_to_json(const DensityMatrix& rho);
DensityMatrix state_from_json(const Json& j);

Json ensemble_to_json(const ProductEnsemble& ensemble);
ProductEnsemble ensemble_from_json(const Json& j);

Json channel_to_json(const QuantumChannel& channel);
QuantumChannel channel_from_json(const Json& j);

/// File helpers; read errors and malformed content throw kInvalidInput.
Json read_json_file(const std::string& path);
void write_json_file(const Json& j, const std::string& path);

void save_state(const DensityMatrix& rho, const std::string& path);
DensityMatrix load_state(const std::string& path);
void save_ensemble(const ProductEnsemble& ensemble, const std::string& path);
ProductEnsemble load_ensemble(const std::string& path);
void save_channel(const QuantumChannel& channel, const std::string& path);
QuantumChannel load_channel(const std::string& path);

/// Real vector as an array; +inf/NaN become null.
Json real_vector_to_json(const RealVector& v);

Json witness_to_json(const DiscordWitnessReport& report);
Json discord_to_json(const DiscordResult& result, bool include_trace = true);
Json classification_to_json(const ClassificationReport& report);
Json counting_to_json(const CountingReport& report);
Json monte_carlo_to_json(const MonteCarloSummary& summary);
Json monotonicity_to_json(const MonotonicitySweep& sweep);
Json rank_check_to_json(const EnsembleRankCheck& check);

}  // namespace qcorr
