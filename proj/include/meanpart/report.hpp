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

#pragma once

#include <string>

#include <json.hpp>

#include "meanpart/diversity.hpp"
#include "meanpart/frechet.hpp"
#include "meanpart/partition.hpp"
#include "meanpart/simulation.hpp"

namespace meanpart {

inline constexpr const char* kVersion = "0.1.0";

/// {"ell", "m", "rows", "hard"} plus "labels" for hard partitions.
nlohmann::json to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DiversityReport& r);
nlohmann::json to_json(const LossReport& r);
nlohmann::json to_json(const ExperimentReport& r);

/// Flat projection: n,point,rate,stderr,binomial_ref,recovery_rate.
std::string experiment_csv(const ExperimentReport& r);

}  // namespace meanpart
