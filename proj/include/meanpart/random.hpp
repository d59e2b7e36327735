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
#include <cstdint>
#include <initializer_list>
#include <random>

namespace meanpart {

using Rng = std::mt19937_64;

/// Generator for an independent stream keyed by a seed plus any number of
/// coordinates (sample size, trial index, purpose tag). Uses std::seed_seq,
/// whose mixing is fully specified, so streams are identical across
/// platforms and thread schedules.
Rng make_rng(std::uint64_t seed, std::initializer_list<std::uint64_t> keys = {});

/// Uniform double in [0, 1) from the top 53 bits.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, bound) by rejection; portable unlike
/// std::uniform_int_distribution.
std::size_t uniform_index(Rng& rng, std::size_t bound);

}  // namespace meanpart
