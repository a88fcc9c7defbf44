// Copyright 2026 The hrrp-mfn Authors
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

#ifndef HRRP_SRC_SEEDING_HPP_
#define HRRP_SRC_SEEDING_HPP_

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace hrrp::detail {

/// Engine keyed by a tuple of 64-bit words (seed, stream ids, ...).
inline std::mt19937_64 keyed_engine(std::initializer_list<std::uint64_t> key) {
  std::vector<std::uint32_t> words;
  words.reserve(2 * key.size());
  for (const auto k : key) {
    words.push_back(static_cast<std::uint32_t>(k));
    words.push_back(static_cast<std::uint32_t>(k >> 32));
  }
  std::seed_seq seq(words.begin(), words.end());
  return std::mt19937_64(seq);
}

}  // namespace hrrp::detail

#endif  // HRRP_SRC_SEEDING_HPP_
