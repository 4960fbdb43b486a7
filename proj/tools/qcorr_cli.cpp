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

// qcorr: command-line front end. Everything goes through the C API.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qcorr/qcorr.h"

namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

constexpr int kExitViolations = 4;

struct Failure {
  int exit_code;
  std::string message;
};

void check(qcorr_status status, const std::string& context) {
  if (status == QCORR_OK) return;
  throw Failure{qcorr_status_exit_code(status), context + ": " + qcorr_last_error()};
}

[[noreturn]] void usage_error(const std::string& message) { throw Failure{2, message}; }

// RAII owners for C handles and strings.
template <typename T, void (*Free)(T*)>
class Handle {
 public:
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() {
    if (ptr_) Free(ptr_);
  }
  T** out() { return &ptr_; }
  T* get() const { return ptr_; }

 private:
  T* ptr_ = nullptr;
};

using State = Handle<qcorr_state, qcorr_state_free>;
using Ensemble = Handle<qcorr_ensemble, qcorr_ensemble_free>;
using Channel = Handle<qcorr_channel, qcorr_channel_free>;
using String = Handle<char, qcorr_string_free>;

Json take_json(String& s) { return Json::parse(s.get()); }

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Options shared by the subcommands. Every field has a concrete default so
// the echoed config is complete.
struct Options {
  std::string state;
  std::string ensemble;
  std::string channel;
  std::string subsystem = "A";
  std::vector<std::size_t> dims{2, 2};
  std::uint64_t seed = 7;
  std::size_t samples = 0;
  std::size_t terms = 0;
  std::string out;
  std::string format;
  std::string family = "werner";
  double from = 0.0;
  double to = 1.0;
  std::string step = "1/30";
  std::int64_t max_dim = 10;
  bool trace = false;
  qcorr_tolerances tol = qcorr_default_tolerances();
};

Json tolerances_json(const qcorr_tolerances& t) {
  return {{"rank", t.rank}, {"discord", t.discord}, {"commutator", t.commutator}};
}

Json base_config(const std::string& command, const Options& o) {
  const char* threads = std::getenv("QCORR_THREADS");
  return {{"command", command},
          {"version", qcorr_version()},
          {"tolerances", tolerances_json(o.tol)},
          {"threads", threads ? threads : "auto"}};
}

// Writes to --out, or stdout when it is empty.
void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) usage_error("cannot write '" + o.out + "'");
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

// {"timestamp", "config", "result"}: the timestamp is the only field that
// changes between identical runs.
std::string json_document(const Json& config, Json result) {
  Json doc;
  doc["timestamp"] = utc_timestamp();
  doc["config"] = config;
  doc["result"] = std::move(result);
  return doc.dump(2);
}

std::string csv_document(const Json& config, const std::string& csv) {
  return "# timestamp: " + utc_timestamp() + "\n# config: " + config.dump() + "\n" + csv;
}

bool looks_like_path(const std::string& spec) {
  return spec.find('/') != std::string::npos || fs::path(spec).extension() == ".json";
}

void open_state(const std::string& spec, State& state) {
  if (spec.empty()) usage_error("--state is required");
  if (looks_like_path(spec) && !fs::is_regular_file(spec)) usage_error("no such state file '" + spec + "'");
  if (fs::is_regular_file(spec)) {
    check(qcorr_state_load(spec.c_str(), state.out()), "state file '" + spec + "'");
  } else {
    check(qcorr_state_builtin(spec.c_str(), state.out()), "state '" + spec + "'");
  }
}

void open_channel(const std::string& spec, Channel& channel) {
  if (looks_like_path(spec) && !fs::is_regular_file(spec)) usage_error("no such channel file '" + spec + "'");
  if (fs::is_regular_file(spec)) {
    check(qcorr_channel_load(spec.c_str(), channel.out()), "channel file '" + spec + "'");
  } else {
    check(qcorr_channel_builtin(spec.c_str(), channel.out()), "channel '" + spec + "'");
  }
}

qcorr_subsystem parse_subsystem(const std::string& s) {
  if (s == "A" || s == "a") return QCORR_SUBSYSTEM_A;
  if (s == "B" || s == "b") return QCORR_SUBSYSTEM_B;
  usage_error("subsystem must be A or B, got '" + s + "'");
}

void require_dims(const Options& o) {
  if (o.dims.size() != 2 || o.dims[0] < 1 || o.dims[1] < 1) usage_error("--dims takes two positive integers");
}

double parse_step(const std::string& s) {
  const auto slash = s.find('/');
  double value = 0.0;
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      value = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
    } else {
      const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
      std::size_t un = 0, ud = 0;
      value = std::stod(num, &un) / std::stod(den, &ud);
      if (un != num.size() || ud != den.size()) throw std::invalid_argument(s);
    }
  } catch (const std::exception&) {
    usage_error("--step must be a number or a fraction p/q, got '" + s + "'");
  }
  if (!(value > 0.0) || !std::isfinite(value)) usage_error("--step must be positive");
  return value;
}

// ---- commands -----------------------------------------------------------

int cmd_rank(const Options& o) {
  Json config = base_config("rank", o);
  config["state"] = o.state;
  State state;
  open_state(o.state, state);
  String json;
  check(qcorr_rank_json(state.get(), &o.tol, json.out()), "rank");
  emit(o, json_document(config, take_json(json)));
  return 0;
}

int cmd_discord(const Options& o) {
  Json config = base_config("discord", o);
  config["state"] = o.state;
  config["subsystem"] = o.subsystem;
  config["trace"] = o.trace;
  const qcorr_subsystem side = parse_subsystem(o.subsystem);
  State state;
  open_state(o.state, state);
  String json;
  check(qcorr_discord_json(state.get(), side, json.out()), "discord");
  Json result = take_json(json);
  if (!o.trace) result.erase("optimizer_trace");
  emit(o, json_document(config, std::move(result)));
  return 0;
}

int cmd_create_local(const Options& o) {
  Json config = base_config("create-local", o);
  Ensemble ensemble;
  if (!o.ensemble.empty()) {
    config["ensemble"] = o.ensemble;
    check(qcorr_ensemble_load(o.ensemble.c_str(), ensemble.out()), "ensemble file '" + o.ensemble + "'");
  } else {
    if (o.terms == 0) usage_error("give --ensemble FILE or --terms s with --dims and --seed");
    require_dims(o);
    config["dims"] = o.dims;
    config["terms"] = o.terms;
    config["seed"] = o.seed;
    check(qcorr_ensemble_random(o.dims[0], o.dims[1], o.terms, o.seed, ensemble.out()), "ensemble");
  }
  if (o.out.empty()) usage_error("--out DIR is required");
  config["out"] = o.out;

  State seed, output, target;
  Channel channel_a, channel_b;
  double residual = 0.0;
  check(qcorr_create_local(ensemble.get(), seed.out(), channel_a.out(), channel_b.out(), output.out(),
                           &residual),
        "create-local");
  check(qcorr_ensemble_assemble(ensemble.get(), target.out()), "ensemble");

  std::error_code ec;
  fs::create_directories(o.out, ec);
  if (ec) usage_error("cannot create '" + o.out + "': " + ec.message());
  const fs::path dir(o.out);
  check(qcorr_state_save(seed.get(), (dir / "seed.json").c_str()), "write seed");
  check(qcorr_channel_save(channel_a.get(), (dir / "channel_a.json").c_str()), "write channel_a");
  check(qcorr_channel_save(channel_b.get(), (dir / "channel_b.json").c_str()), "write channel_b");
  check(qcorr_state_save(output.get(), (dir / "output.json").c_str()), "write output");
  check(qcorr_ensemble_save(ensemble.get(), (dir / "target_ensemble.json").c_str()), "write ensemble");

  qcorr_witness seed_w{}, out_w{};
  check(qcorr_witness_report(seed.get(), &o.tol, &seed_w), "seed witness");
  check(qcorr_witness_report(output.get(), &o.tol, &out_w), "output witness");
  size_t terms = 0;
  check(qcorr_ensemble_size(ensemble.get(), &terms), "ensemble");
  double distance = 0.0;
  check(qcorr_state_distance(output.get(), target.get(), &distance), "distance");

  Json result = {{"terms", terms},
                 {"reassembly_residual", residual},
                 {"max_entry_distance", distance},
                 {"seed_zero_discord_a", bool(seed_w.zero_discord_a)},
                 {"seed_zero_discord_b", bool(seed_w.zero_discord_b)},
                 {"output_rank_l", out_w.rank_l},
                 {"output_zero_discord_a", bool(out_w.zero_discord_a)},
                 {"output_zero_discord_b", bool(out_w.zero_discord_b)},
                 {"files",
                  {"seed.json", "channel_a.json", "channel_b.json", "output.json", "target_ensemble.json"}}};
  const std::string doc = json_document(config, std::move(result));
  std::ofstream((dir / "verification.json").string(), std::ios::binary) << doc << '\n';
  std::cout << doc << '\n';
  return 0;
}

int cmd_classify(const Options& o) {
  if (o.samples > 0) {
    require_dims(o);
    Json config = base_config("classify", o);
    config["samples"] = o.samples;
    config["dims"] = o.dims;
    config["seed"] = o.seed;
    config["source"] = o.terms == 0 ? "hilbert_schmidt" : "product_ensemble";
    config["ensemble_terms"] = o.terms;
    const std::string format = o.format.empty() ? "csv" : o.format;
    config["format"] = format;
    if (format != "csv" && format != "json") usage_error("--format must be csv or json");
    String json, csv;
    check(qcorr_monte_carlo_regions(o.dims[0], o.dims[1], o.samples, o.seed, o.terms, &o.tol, nullptr,
                                    format == "json" ? json.out() : nullptr,
                                    format == "csv" ? csv.out() : nullptr),
          "classify");
    emit(o, format == "json" ? json_document(config, take_json(json)) : csv_document(config, csv.get()));
    return 0;
  }
  Json config = base_config("classify", o);
  config["state"] = o.state;
  State state;
  open_state(o.state, state);
  Ensemble ensemble;
  if (!o.ensemble.empty()) {
    config["ensemble"] = o.ensemble;
    check(qcorr_ensemble_load(o.ensemble.c_str(), ensemble.out()), "ensemble file '" + o.ensemble + "'");
  }
  String json;
  check(qcorr_classify_json(state.get(), o.state.c_str(), ensemble.get(), &o.tol, json.out()), "classify");
  emit(o, json_document(config, take_json(json)));
  return 0;
}

int cmd_sweep(const Options& o) {
  if (o.family != "werner") usage_error("unknown family '" + o.family + "' (only werner)");
  const double step = parse_step(o.step);
  if (!(o.to >= o.from)) usage_error("--to must not be below --from");
  const long n = std::lround((o.to - o.from) / step);
  if (n > 1000000) usage_error("sweep too long");
  std::vector<double> z;
  for (long k = 0; k <= n; ++k) z.push_back(n == 0 ? o.from : o.from + (o.to - o.from) * double(k) / double(n));

  Json config = base_config("sweep", o);
  config["family"] = o.family;
  config["from"] = o.from;
  config["to"] = o.to;
  config["step"] = o.step;
  config["points"] = z.size();
  String csv;
  check(qcorr_sweep_werner_csv(z.data(), z.size(), &o.tol, csv.out()), "sweep");
  emit(o, csv_document(config, csv.get()));
  return 0;
}

int cmd_monotonicity(const Options& o) {
  Json config = base_config("monotonicity", o);
  if (!o.state.empty()) {
    // Single trial with a given channel on one side.
    if (o.channel.empty()) usage_error("--state needs --channel");
    config["state"] = o.state;
    config["channel"] = o.channel;
    config["subsystem"] = o.subsystem;
    const qcorr_subsystem side = parse_subsystem(o.subsystem);
    State state;
    open_state(o.state, state);
    Channel channel;
    open_channel(o.channel, channel);
    qcorr_trial t{};
    check(qcorr_monotonicity_trial(state.get(), channel.get(), side, &o.tol, &t), "monotonicity");
    emit(o, json_document(config, {{"l_before", t.l_before}, {"l_after", t.l_after}, {"ok", bool(t.ok)}}));
    return t.ok ? 0 : kExitViolations;
  }
  require_dims(o);
  const std::size_t trials = o.samples == 0 ? 5000 : o.samples;
  config["trials"] = trials;
  config["dims"] = o.dims;
  config["seed"] = o.seed;
  qcorr_monotonicity m{};
  check(qcorr_monotonicity_sweep(o.dims[0], o.dims[1], trials, o.seed, &o.tol, &m), "monotonicity");
  emit(o, json_document(config, {{"trials", m.trials}, {"violations", m.violations}, {"unchanged", m.unchanged}}));
  return m.violations == 0 ? 0 : kExitViolations;
}

int cmd_counting(const Options& o) {
  require_dims(o);
  const std::int64_t s = o.terms == 0 ? std::int64_t(std::min(o.dims[0], o.dims[1])) : std::int64_t(o.terms);
  Json config = base_config("counting", o);
  config["dims"] = o.dims;
  config["terms"] = s;
  config["max_dim"] = o.max_dim;
  qcorr_counting c{};
  check(qcorr_counting_report(std::int64_t(o.dims[0]), std::int64_t(o.dims[1]), s, &c), "counting");
  int ok = 0;
  check(qcorr_f_monotonicity_check(o.max_dim, &ok), "counting");
  emit(o, json_document(config, {{"dim_a", c.dim_a},
                                 {"dim_b", c.dim_b},
                                 {"s", c.s},
                                 {"params_class", c.params_class},
                                 {"params_full", c.params_full},
                                 {"measure_zero", bool(c.measure_zero)},
                                 {"f_value", c.f_value},
                                 {"f_monotone", bool(ok)}}));
  return 0;
}

void add_common(CLI::App* app, Options& o) {
  app->add_option("--out", o.out, "Output file (directory for create-local)");
  app->add_option("--tol-rank", o.tol.rank, "Relative singular-value cutoff")->check(CLI::PositiveNumber);
  app->add_option("--tol-discord", o.tol.discord, "Zero-discord threshold in bits")->check(CLI::PositiveNumber);
  app->add_option("--tol-commutator", o.tol.commutator, "Commutator threshold")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Correlation rank, discord and local creation of bipartite quantum states"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(qcorr_version()));
  Options o;

  const std::string state_help = "State file or builtin (werner:z, rho_l, rho_c, bell, schmidt2:d, mixed:da:db)";

  auto* rank = app.add_subcommand("rank", "Correlation rank L, singular values and witness flags");
  rank->add_option("--state", o.state, state_help)->required();
  add_common(rank, o);

  auto* disc = app.add_subcommand("discord", "Quantum discord with a projective measurement on one side");
  disc->add_option("--state", o.state, state_help)->required();
  disc->add_option("--subsystem", o.subsystem, "Measured side, A or B");
  disc->add_flag("--trace", o.trace, "Include the optimizer trace");
  add_common(disc, o);

  auto* create = app.add_subcommand("create-local", "Classical seed and local channels for an ensemble");
  create->add_option("--ensemble", o.ensemble, "Ensemble file");
  create->add_option("--terms", o.terms, "Random ensemble with this many terms");
  create->add_option("--dims", o.dims, "Dimensions of A and B")->expected(2);
  create->add_option("--seed", o.seed, "Seed for --terms");
  add_common(create, o);

  auto* classify = app.add_subcommand("classify", "Region of a state, or a seeded batch of random states");
  classify->add_option("--state", o.state, state_help);
  classify->add_option("--ensemble", o.ensemble, "Ensemble backing the locally-producible hint");
  classify->add_option("--samples,--random", o.samples, "Number of random states");
  classify->add_option("--dims", o.dims, "Dimensions of A and B")->expected(2);
  classify->add_option("--seed", o.seed, "Master seed");
  classify->add_option("--ensemble-terms", o.terms, "Sample assembled ensembles with this many terms");
  classify->add_option("--format", o.format, "csv or json for batches");
  add_common(classify, o);

  auto* sweep = app.add_subcommand("sweep", "Discord and rank along a state family, as CSV");
  sweep->add_option("--family", o.family, "State family (werner)");
  sweep->add_option("--from", o.from, "First parameter value");
  sweep->add_option("--to", o.to, "Last parameter value");
  sweep->add_option("--step", o.step, "Step, a number or p/q");
  add_common(sweep, o);

  auto* mono = app.add_subcommand("monotonicity", "Check that local channels never raise L");
  mono->add_option("--samples,--trials", o.samples, "Number of random trials (default 5000)");
  mono->add_option("--dims", o.dims, "Dimensions of A and B")->expected(2);
  mono->add_option("--seed", o.seed, "Master seed");
  mono->add_option("--state", o.state, "Single trial: input state");
  mono->add_option("--channel", o.channel, "Single trial: channel file or builtin (phi, identity:d, depolarize:d)");
  mono->add_option("--subsystem", o.subsystem, "Single trial: side the channel acts on");
  add_common(mono, o);

  auto* counting = app.add_subcommand("counting", "Parameter counting for s-term product ensembles");
  counting->add_option("--dims", o.dims, "Dimensions of A and B")->expected(2);
  counting->add_option("--terms", o.terms, "Number of product terms s (default d_min)");
  counting->add_option("--max-dim", o.max_dim, "Range of the f monotonicity scan");
  add_common(counting, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*rank) return cmd_rank(o);
    if (*disc) return cmd_discord(o);
    if (*create) return cmd_create_local(o);
    if (*classify) return cmd_classify(o);
    if (*sweep) return cmd_sweep(o);
    if (*mono) return cmd_monotonicity(o);
    if (*counting) return cmd_counting(o);
  } catch (const Failure& f) {
    std::cerr << "qcorr: " << f.message << '\n';
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "qcorr: internal error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
