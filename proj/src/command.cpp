// Copyright 2026 The Meanpart Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "meanpart/command.hpp"

#include <cmath>
#include <limits>
#include <set>

#include "meanpart/diversity.hpp"
#include "meanpart/io.hpp"
#include "meanpart/report.hpp"
#include "meanpart/simulation.hpp"

namespace meanpart {
namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& key, const std::string& what) {
  fail(ErrorCode::kInvalidConfig, "\"" + key + "\" " + what);
}

// Reads keys out of the user config, fills in defaults and records every
// resolved value so the report can echo it back.
class Settings {
 public:
  explicit Settings(const json& raw) : raw_(raw) {
    if (!raw_.is_object()) fail(ErrorCode::kInvalidConfig, "config must be a JSON object");
  }

  bool has(const std::string& key) {
    seen_.insert(key);
    return raw_.contains(key) && !raw_.at(key).is_null();
  }

  std::uint64_t uint(const std::string& key, std::uint64_t def, std::uint64_t lo = 0,
                     std::uint64_t hi = std::numeric_limits<std::uint64_t>::max()) {
    std::uint64_t v = def;
    if (has(key)) v = as_uint(key, raw_.at(key));
    if (v < lo || v > hi)
      bad(key, "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    resolved_[key] = v;
    return v;
  }

  double real(const std::string& key, double def, double lo, double hi) {
    double v = def;
    if (has(key)) {
      if (!raw_.at(key).is_number()) bad(key, "must be a number");
      v = raw_.at(key).get<double>();
    }
    if (!(v >= lo && v <= hi)) bad(key, "out of range");
    resolved_[key] = v;
    return v;
  }

  std::string text(const std::string& key, const std::string& def) {
    std::string v = def;
    if (has(key)) {
      if (!raw_.at(key).is_string()) bad(key, "must be a string");
      v = raw_.at(key).get<std::string>();
    }
    resolved_[key] = v;
    return v;
  }

  std::string required_text(const std::string& key) {
    if (!has(key)) bad(key, "is required");
    return text(key, "");
  }

  std::optional<std::string> optional_text(const std::string& key) {
    if (!has(key)) {
      resolved_[key] = nullptr;
      return std::nullopt;
    }
    return text(key, "");
  }

  std::optional<std::size_t> optional_uint(const std::string& key, std::uint64_t lo,
                                           std::uint64_t hi) {
    if (!has(key)) {
      resolved_[key] = nullptr;
      return std::nullopt;
    }
    return static_cast<std::size_t>(uint(key, 0, lo, hi));
  }

  std::vector<std::uint64_t> uint_list(const std::string& key, std::vector<std::uint64_t> def,
                                       std::uint64_t lo, std::uint64_t hi) {
    if (has(key)) {
      const auto& v = raw_.at(key);
      if (!v.is_array()) bad(key, "must be an array of integers");
      def.clear();
      for (const auto& e : v) def.push_back(as_uint(key, e));
    }
    for (auto x : def)
      if (x < lo || x > hi)
        bad(key, "entries must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    resolved_[key] = def;
    return def;
  }

  // A number or an array of numbers, each in [lo, hi].
  std::vector<double> real_or_list(const std::string& key, double def, double lo, double hi) {
    std::vector<double> out{def};
    if (has(key)) {
      const auto& v = raw_.at(key);
      out.clear();
      if (v.is_number()) {
        out.push_back(v.get<double>());
      } else if (v.is_array()) {
        for (const auto& e : v) {
          if (!e.is_number()) bad(key, "must hold numbers only");
          out.push_back(e.get<double>());
        }
      } else {
        bad(key, "must be a number or an array of numbers");
      }
    }
    if (out.empty()) bad(key, "must not be empty");
    for (double x : out)
      if (!(x >= lo && x <= hi)) bad(key, "out of range");
    resolved_[key] = out.size() == 1 && !(has(key) && raw_.at(key).is_array()) ? json(out[0])
                                                                               : json(out);
    return out;
  }

  const json& resolved() const { return resolved_; }

  void reject_unknown() const {
    for (const auto& [key, value] : raw_.items())
      if (!seen_.count(key)) fail(ErrorCode::kInvalidConfig, "unknown config key \"" + key + "\"");
  }

 private:
  static std::uint64_t as_uint(const std::string& key, const json& v) {
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    if (v.is_number_integer()) {
      if (v.get<std::int64_t>() < 0) bad(key, "must be non-negative");
      return static_cast<std::uint64_t>(v.get<std::int64_t>());
    }
    if (v.is_number_float()) {
      const double d = v.get<double>();
      if (d >= 0 && d < 1.8e19 && std::floor(d) == d) return static_cast<std::uint64_t>(d);
    }
    bad(key, "must be a non-negative integer");
  }

  const json& raw_;
  json resolved_ = json::object();
  std::set<std::string> seen_;
};

MeanOptions mean_options(Settings& s) {
  MeanOptions o;
  const auto method = s.text("method", "auto");
  if (method == "auto") {
    o.method = MeanMethod::kAuto;
  } else if (method == "exact") {
    o.method = MeanMethod::kExact;
  } else if (method == "heuristic") {
    o.method = MeanMethod::kHeuristic;
  } else {
    bad("method", "must be auto, exact or heuristic");
  }
  o.budget = s.uint("budget", kDefaultBudget, 1);
  o.heuristic.max_iter = s.uint("max_iter", 100, 1, 1'000'000);
  o.heuristic.tol = s.real("tol", 1e-9, 0.0, 1.0);
  o.heuristic.restarts = s.uint("restarts", 0, 0, 1'000'000);
  o.heuristic.seed = s.uint("seed", 0);
  return o;
}

Sample input_sample(Settings& s) {
  const auto path = s.required_text("input");
  const auto ell = s.optional_uint("ell", 1, 1'000);
  return load_sample(path, ell);
}

std::vector<int> label_list(Settings& s, const std::string& key, std::size_t ell, std::size_t m) {
  const auto raw = s.uint_list(key, {}, 0, ell - 1);
  if (raw.size() != m) bad(key, "must hold m = " + std::to_string(m) + " labels");
  return {raw.begin(), raw.end()};
}

json partitions_json(const std::vector<Partition>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(to_json(p));
  return out;
}

json sample_summary(const Sample& sample) {
  return json{{"n", sample.size()}, {"ell", sample.ell()}, {"m", sample.m()}};
}

json run_consensus(Settings& s) {
  const Sample sample = input_sample(s);
  const auto options = mean_options(s);
  s.reject_unknown();
  const auto set = compute_mean_set(sample, options);
  const auto& best = set.best;
  const double residual = fixed_point_residual(sample, best.mean.canonical());
  return json{{"sample", sample_summary(sample)},
              {"exact", set.exact},
              {"mean", to_json(best.mean)},
              {"frechet_value", best.frechet_value},
              {"iterations", best.iterations},
              {"converged", best.converged},
              {"trace", best.trace},
              {"mean_set_size", set.means.size()},
              {"mean_set", partitions_json(set.means)},
              {"fixed_point_residual", residual},
              {"fixed_point", residual <= kTolerance}};
}

json run_distance(Settings& s) {
  const Sample sample = input_sample(s);
  if (sample.size() < 2) fail(ErrorCode::kInvalidArgument, "distance needs at least two rows");
  const auto pair = s.uint_list("pair", {0, 1}, 0, sample.size() - 1);
  s.reject_unknown();
  if (pair.size() != 2) bad("pair", "must hold two row indices");
  const std::size_t n = sample.size();
  std::vector<std::vector<double>> matrix(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      matrix[i][j] = matrix[j][i] = delta(sample[i], sample[j]).distance;
  const auto d = delta(sample[pair[0]], sample[pair[1]]);
  return json{{"sample", sample_summary(sample)},
              {"pair", pair},
              {"distance", d.distance},
              {"permutation", d.permutation},
              {"aligned", d.aligned.is_hard() ? json(d.aligned.labels()) : json(nullptr)},
              {"matrix", matrix}};
}

json asymmetry_value(double alpha) {
  return std::isinf(alpha) ? json("inf") : json(alpha);
}

json run_asymmetry(Settings& s) {
  const Sample sample = input_sample(s);
  const auto center = s.optional_uint("center", 0, sample.size() - 1);
  s.reject_unknown();
  json rows = json::array();
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double alpha = degree_of_asymmetry(sample[i]);
    json row{{"index", i},
             {"alpha", asymmetry_value(alpha)},
             {"ball_radius", asymmetry_value(alpha / 4.0)},
             {"symmetric", alpha == 0.0}};
    if (center) {
      const auto& z = sample[*center];
      row["distance_to_center"] = delta(sample[i], z).distance;
      row["in_open_ball"] = in_asymmetry_ball(sample[i], z, true);
      row["in_closed_ball"] = in_asymmetry_ball(sample[i], z, false);
    }
    rows.push_back(std::move(row));
  }
  json out{{"sample", sample_summary(sample)}, {"partitions", rows}};
  if (center) {
    bool all = true;
    for (const auto& r : rows) all = all && r["in_open_ball"].get<bool>();
    out["all_in_open_ball"] = all;
  }
  return out;
}

json run_diversity(Settings& s) {
  const Sample sample = input_sample(s);
  const auto options = mean_options(s);
  const auto truth_path = s.optional_text("truth");
  const auto candidates_path = s.optional_text("candidates");
  s.reject_unknown();

  std::vector<Partition> candidates;
  if (candidates_path) {
    const Sample c = load_sample(*candidates_path, sample.ell());
    candidates = c.elements();
  }
  const auto set = compute_mean_set(sample, options);
  const auto report = diversity_report(sample, set.best.mean, candidates, options);
  json out{{"sample", sample_summary(sample)},
           {"exact", set.exact},
           {"mean_set_size", set.means.size()},
           {"mean_set", partitions_json(set.means)},
           {"diversity", to_json(report)}};
  if (truth_path) {
    const Sample t = load_sample(*truth_path, sample.ell());
    if (!t[0].is_hard()) fail(ErrorCode::kInvalidArgument, "the truth partition must be hard");
    require_same_shape(t[0], sample[0]);
    const GroundTruth truth(t[0].canonical());
    out["loss"] = to_json(loss_decomposition(set.means, truth));
  } else {
    out["loss"] = nullptr;
  }
  return out;
}

CommandOutput run_simulate(Settings& s) {
  const std::size_t ell = s.uint("ell", 2, 1, 1'000);
  const std::size_t m = s.uint("m", 64, 1, 1'000'000);
  const auto p = s.real_or_list("p", 0.95, 0.0, 1.0);
  const auto mode = parse_sampling_mode(s.text("mode", "ball"));
  const auto n_grid = s.uint_list("n_grid", {1, 11, 51, 101}, 1, 1'000'000);
  const std::size_t trials = s.uint("trials", 100, 1, 100'000'000);
  const std::size_t max_retries = s.uint("max_retries", 10'000, 1);
  const std::size_t threads = s.uint("threads", 0, 0, 4096);

  std::vector<int> truth_labels(m);
  if (s.has("truth_labels")) {
    truth_labels = label_list(s, "truth_labels", ell, m);
  } else {
    for (std::size_t j = 0; j < m; ++j) truth_labels[j] = static_cast<int>(j % ell);
    s.uint_list("truth_labels", {truth_labels.begin(), truth_labels.end()}, 0, ell - 1);
  }
  std::optional<Partition> center;
  if (s.has("center_labels")) {
    center = Partition(LabeledPartition::from_labels(label_list(s, "center_labels", ell, m), ell));
  } else {
    s.optional_text("center_labels");
  }

  ExperimentConfig config;
  config.n_grid.assign(n_grid.begin(), n_grid.end());
  config.trials = trials;
  config.threads = threads;
  config.majority.mean = mean_options(s);
  config.seed = config.majority.mean.heuristic.seed;
  config.majority.vote.ell_cap = s.uint("vote_ell_cap", 8, 1, 10);
  s.reject_unknown();
  if (p.size() != 1 && p.size() != m) bad("p", "must be a scalar or hold m entries");

  const auto model = make_model(GroundTruth::from_labels(truth_labels, ell), p, mode,
                                std::move(center), max_retries);
  const auto report = run_convergence_experiment(model, config);
  return {to_json(report), experiment_csv(report)};
}

}  // namespace

CommandOutput run_command(std::string_view command, const json& config) {
  Settings s(config);
  CommandOutput out;
  if (command == "consensus") {
    out.report = run_consensus(s);
  } else if (command == "distance") {
    out.report = run_distance(s);
  } else if (command == "asymmetry") {
    out.report = run_asymmetry(s);
  } else if (command == "diversity") {
    out.report = run_diversity(s);
  } else if (command == "simulate") {
    out = run_simulate(s);
  } else {
    fail(ErrorCode::kUnknownCommand, "unknown command '" + std::string(command) + "'");
  }
  // Threads never change the numbers, so they stay out of the provenance.
  json resolved = s.resolved();
  resolved.erase("threads");
  out.report = json{{"version", kVersion},
                    {"command", command},
                    {"config", std::move(resolved)},
                    {"result", std::move(out.report)}};
  return out;
}

std::string render_json(const json& doc) { return doc.dump(2) + "\n"; }

json error_json(ErrorCode code, std::string_view message) {
  return json{{"error",
               {{"code", error_code_name(code)},
                {"status", static_cast<int>(code)},
                {"message", message}}}};
}

}  // namespace meanpart
