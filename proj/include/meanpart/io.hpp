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

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "meanpart/alignment.hpp"
#include "meanpart/partition.hpp"

namespace meanpart {

/// Integer label file: an optional header line `ell=<k> m=<n>`, then one
/// clustering per line as m labels in [0, ell) separated by spaces, tabs or
/// commas. Blank lines and lines starting with '#' are ignored. Without a
/// header, ell comes from the caller or defaults to the largest label + 1.
struct LabelFile {
  std::size_t ell = 0;
  std::size_t m = 0;
  std::vector<std::vector<int>> rows;
};

LabelFile parse_label_text(std::string_view text, std::optional<std::size_t> ell = {});
LabelFile read_label_file(const std::filesystem::path& path,
                          std::optional<std::size_t> ell = {});

/// Header plus the labels of each canonical representative. Hard only.
std::string format_label_file(const Sample& sample);
void write_label_file(const std::filesystem::path& path, const Sample& sample);

Sample to_sample(const LabelFile& file);

/// Reads a label file into canonicalized hard partitions.
Sample parse_labels(const std::filesystem::path& path, std::optional<std::size_t> ell = {});

/// Dispatches on the extension: `.json` holds one soft partition
/// {"ell":..,"m":..,"rows":[[..]]} or an array of them; anything else is a
/// label file.
Sample load_sample(const std::filesystem::path& path, std::optional<std::size_t> ell = {});

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace meanpart
