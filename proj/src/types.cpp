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

#include "hrrp/types.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace hrrp {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      line_(line) {}

void RangeProfile::validate() const {
  if (cells.empty()) throw ParameterError("range profile has no cells");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!std::isfinite(cells[i]) || cells[i] < 0.0) {
      throw ParameterError("cell " + std::to_string(i) +
                           " is negative or not finite");
    }
  }
  if (!(aspect_deg >= 0.0 && aspect_deg < 360.0)) {
    throw ParameterError("aspect_deg must lie in [0, 360)");
  }
  if (!(delta_r_m > 0.0) || !std::isfinite(delta_r_m)) {
    throw ParameterError("delta_r_m must be positive");
  }
  if (!(ship_length_m > 0.0) || !(ship_width_m > 0.0) ||
      !std::isfinite(ship_length_m)) {
    throw ParameterError("ship dimensions must be positive");
  }
  if (ship_width_m > ship_length_m) {
    throw ParameterError("ship_width_m exceeds ship_length_m");
  }
  if (ship_id.find_first_of(",\n\r") != std::string::npos) {
    throw ParameterError("ship_id must not contain commas or line breaks");
  }
}

std::size_t first_run_length(std::span<const std::uint8_t> bits) noexcept {
  auto first = std::find_if(bits.begin(), bits.end(),
                            [](std::uint8_t b) { return b != 0; });
  auto last = std::find(first, bits.end(), std::uint8_t{0});
  return static_cast<std::size_t>(last - first);
}

CoiMask CoiMask::from_bits(Bits bits) {
  for (auto& b : bits) b = b ? 1 : 0;
  CoiMask mask;
  mask.lrp_cells = first_run_length(bits);
  mask.bits = std::move(bits);
  return mask;
}

std::size_t CoiMask::count() const noexcept {
  return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), 1));
}

Dataset::Dataset(std::size_t cells, std::vector<RangeProfile> profiles)
    : cells_(cells), profiles_(std::move(profiles)) {
  if (cells_ == 0) throw ParameterError("dataset cell count must be >= 1");
  for (std::size_t i = 0; i < profiles_.size(); ++i) {
    const auto& p = profiles_[i];
    if (p.size() != cells_) {
      throw ParameterError("profile " + std::to_string(i) + " has " +
                           std::to_string(p.size()) + " cells, expected " +
                           std::to_string(cells_));
    }
    p.validate();
  }
}

}  // namespace hrrp
