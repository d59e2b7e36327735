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

#include "meanpart/report.hpp"

#include <cstdio>

#include "meanpart/error.hpp"

namespace meanpart {
namespace {

using nlohmann::json;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

json to_json(const Partition& p) {
  const auto& rep = p.canonical();
  json rows = json::array();
  for (std::size_t k = 0; k < rep.ell(); ++k) {
    const auto r = rep.row(k);
    rows.push_back(std::vector<double>(r.begin(), r.end()));
  }
  json out{{"ell", rep.ell()}, {"m", rep.m()}, {"hard", rep.is_hard()}, {"rows", rows}};
  if (rep.is_hard()) out["labels"] = rep.labels();
  return out;
}

Partition partition_from_json(const json& j) {
  try {
    if (!j.is_object()) fail(ErrorCode::kParseError, "partition must be a JSON object");
    if (j.contains("rows")) {
      const auto rows = j.at("rows").get<std::vector<std::vector<double>>>();
      if (rows.empty()) fail(ErrorCode::kParseError, "partition has no rows");
      if (j.contains("ell") && j.at("ell").get<std::size_t>() != rows.size())
        fail(ErrorCode::kParseError, "\"ell\" does not match the number of rows");
      for (const auto& r : rows)
        if (j.contains("m") && j.at("m").get<std::size_t>() != r.size())
          fail(ErrorCode::kParseError, "\"m\" does not match the row length");
      return Partition(LabeledPartition::from_rows(rows));
    }
    if (j.contains("labels")) {
      const auto labels = j.at("labels").get<std::vector<int>>();
      return Partition(LabeledPartition::from_labels(labels, j.at("ell").get<std::size_t>()));
    }
  } catch (const json::exception& e) {
    fail(ErrorCode::kParseError, std::string("malformed partition: ") + e.what());
  }
  fail(ErrorCode::kParseError, "partition needs \"rows\" or \"labels\"");
}

json to_json(const DiversityReport& r) {
  return json{{"pairwise_g", r.pairwise_g},
              {"variation_f", r.variation_f},
              {"homogeneous", r.homogeneous},
              {"certifying_center",
               r.certifying_center ? to_json(*r.certifying_center) : json(nullptr)},
              {"asymmetry_bound", optional_number(r.asymmetry_bound)}};
}

json to_json(const LossReport& r) {
  return json{{"worst", r.worst},
              {"best", r.best},
              {"estimation", r.estimation},
              {"approximation", r.approximation}};
}

json to_json(const ExperimentReport& r) {
  json grid = json::array();
  for (const auto& g : r.grid) {
    grid.push_back(json{{"n", g.n},
                        {"even_n", g.even_n},
                        {"rate", g.rate},
                        {"rate_stderr", g.rate_stderr},
                        {"binomial_ref", g.binomial_ref},
                        {"pooled_rate", g.pooled_rate},
                        {"pooled_stderr", g.pooled_stderr},
                        {"pooled_ref", g.pooled_ref},
                        {"recovery_rate", g.recovery_rate},
                        {"recovery_stderr", g.recovery_stderr},
                        {"mean_in_ball_rate", optional_number(g.mean_in_ball_rate)},
                        {"exact_trials", g.exact_trials},
                        {"singleton_mean_set_rate", g.singleton_mean_set_rate}});
  }
  return json{{"noise_model", kNoiseModelDescription},
              {"mode", sampling_mode_name(r.mode)},
              {"ell", r.ell},
              {"m", r.m},
              {"n_grid", r.n_grid},
              {"trials", r.trials},
              {"low_trials", r.low_trials},
              {"seed", r.seed},
              {"nominal_p", r.nominal_p},
              {"p_hat", r.p_hat},
              {"partitions_drawn", r.partitions_drawn},
              {"proposals", r.proposals},
              {"grid", grid}};
}

std::string experiment_csv(const ExperimentReport& r) {
  std::string out = "n,point,rate,stderr,binomial_ref,recovery_rate\n";
  for (const auto& g : r.grid) {
    for (std::size_t j = 0; j < g.rate.size(); ++j) {
      out += std::to_string(g.n) + ',' + std::to_string(j) + ',' + fmt(g.rate[j]) + ',' +
             fmt(g.rate_stderr[j]) + ',' + fmt(g.binomial_ref[j]) + ',' + fmt(g.recovery_rate) +
             '\n';
    }
  }
  return out;
}

}  // namespace meanpart
