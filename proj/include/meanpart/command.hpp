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
#include <string_view>

#include <json.hpp>

#include "meanpart/error.hpp"

namespace meanpart {

struct CommandOutput {
  nlohmann::json report;  // {"version", "command", "config", "result"}
  std::string csv;        // simulate only
};

/// Runs one of consensus, distance, asymmetry, diversity or simulate with a
/// JSON object of settings. Unknown keys and out-of-range values are
/// rejected with Error(kInvalidConfig) before any work starts.
CommandOutput run_command(std::string_view command, const nlohmann::json& config);

/// Two-space indented JSON with a trailing newline.
std::string render_json(const nlohmann::json& doc);

/// {"error": {"code": <kebab name>, "status": <int>, "message": ...}}
nlohmann::json error_json(ErrorCode code, std::string_view message);

}  // namespace meanpart
