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

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "meanpart/meanpart.h"

namespace {

using nlohmann::json;

int emit_error(mp_status status, const std::string& message) {
  json err{{"error",
            {{"code", mp_status_name(status)}, {"status", static_cast<int>(status)},
             {"message", message}}}};
  std::cerr << err.dump(2) << "\n";
  return static_cast<int>(status);
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  return static_cast<bool>(out);
}

std::string csv_path_for(const std::string& output) {
  const auto dot = output.rfind('.');
  const auto slash = output.find_last_of("/\\");
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
    return output + ".csv";
  return output.substr(0, dot) + ".csv";
}

bool takes_mean_options(const std::string& command) {
  return command == "consensus" || command == "diversity" || command == "simulate";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mean partitions of clustering ensembles"};
  app.set_version_flag("--version", std::string(mp_version()));

  std::string command;
  std::string config_path;
  std::optional<std::string> input, truth, output, csv, mode;
  std::optional<std::uint64_t> seed, budget, ell, m, trials, threads;
  std::optional<double> p;
  std::vector<std::uint64_t> n_grid;
  bool exact = false, heuristic = false;

  app.add_option("command", command, "consensus | distance | asymmetry | diversity | simulate")
      ->required();
  app.add_option("--config", config_path, "JSON config file; flags override its keys");
  app.add_option("--input", input, "label file (.txt) or soft partitions (.json)");
  app.add_option("--truth", truth, "ground-truth label file for diversity");
  app.add_option("--output", output, "report path (stdout if omitted)");
  app.add_option("--csv", csv, "CSV path for simulate (defaults next to --output)");
  app.add_option("--seed", seed, "seed for every random choice");
  auto* ex = app.add_flag("--exact", exact, "exhaustive mean search");
  app.add_flag("--heuristic", heuristic, "multi-start alternating mean search")->excludes(ex);
  app.add_option("--mode", mode, "simulate sampling mode")
      ->check(CLI::IsMember({"unconstrained", "ball"}));
  app.add_option("--ell", ell, "number of cluster labels");
  app.add_option("--m", m, "points per partition (simulate)");
  app.add_option("--p", p, "per-point correctness probability (simulate)");
  app.add_option("--trials", trials, "trials per grid point (simulate)");
  app.add_option("--n-grid", n_grid, "sample sizes (simulate)");
  app.add_option("--budget", budget, "multiple-alignment enumeration budget");
  app.add_option("--threads", threads, "worker threads for simulate, 0 = all cores");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    return emit_error(MP_INVALID_CONFIG, e.what());
  }

  json config = json::object();
  if (!config_path.empty()) {
    std::ifstream in(config_path, std::ios::binary);
    if (!in) return emit_error(MP_IO_ERROR, "cannot open config '" + config_path + "'");
    try {
      config = json::parse(in);
    } catch (const json::exception& e) {
      return emit_error(MP_INVALID_CONFIG, std::string("config: ") + e.what());
    }
    if (!config.is_object()) return emit_error(MP_INVALID_CONFIG, "config must be an object");
  }

  if (input) config["input"] = *input;
  if (truth) config["truth"] = *truth;
  if (seed) config["seed"] = *seed;
  if (exact) config["method"] = "exact";
  if (heuristic) config["method"] = "heuristic";
  if (mode) config["mode"] = *mode;
  if (ell) config["ell"] = *ell;
  if (m) config["m"] = *m;
  if (p) config["p"] = *p;
  if (trials) config["trials"] = *trials;
  if (!n_grid.empty()) config["n_grid"] = n_grid;
  if (threads) config["threads"] = *threads;
  if (budget) {
    config["budget"] = *budget;
  } else if (const char* env = std::getenv("MEANPART_BUDGET");
             env && *env && takes_mean_options(command) && !config.contains("budget")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
      config["budget"] = v;
    } catch (const std::exception&) {
      return emit_error(MP_INVALID_CONFIG, "MEANPART_BUDGET must be a positive integer");
    }
  }
  // Output locations are CLI concerns and never reach the report.
  if (config.contains("output")) {
    if (!output && config["output"].is_string()) output = config["output"].get<std::string>();
    config.erase("output");
  }
  if (config.contains("csv")) {
    if (!csv && config["csv"].is_string()) csv = config["csv"].get<std::string>();
    config.erase("csv");
  }

  char* report = nullptr;
  char* csv_text = nullptr;
  const mp_status st = mp_run_command(command.c_str(), config.dump().c_str(), &report, &csv_text);
  const std::string report_str = report ? report : "";
  const std::string csv_str = csv_text ? csv_text : "";
  mp_string_free(report);
  mp_string_free(csv_text);
  if (st != MP_OK) {
    std::cerr << report_str;
    return static_cast<int>(st);
  }

  if (output) {
    if (!write_file(*output, report_str))
      return emit_error(MP_IO_ERROR, "cannot write '" + *output + "'");
  } else {
    std::cout << report_str;
  }
  if (!csv_str.empty() && (csv || output)) {
    const std::string path = csv ? *csv : csv_path_for(*output);
    if (!write_file(path, csv_str)) return emit_error(MP_IO_ERROR, "cannot write '" + path + "'");
  }
  return 0;
}
