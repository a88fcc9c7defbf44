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

#include "hrrp/segmentation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hrrp {

void SegmentationParams::validate() const {
  if (uniform_window == 0 || uniform_window % 2 == 0) {
    throw ParameterError("uniform_window must be a positive odd integer");
  }
  if (!(threshold_frac > 0.0 && threshold_frac <= 1.0)) {
    throw ParameterError("threshold_frac must lie in (0, 1]");
  }
  if (close_gap_cells == 0) {
    throw ParameterError("close_gap_cells must be positive");
  }
}

std::vector<double> uniform_filter(std::span<const double> x,
                                   std::size_t window) {
  if (window == 0 || window % 2 == 0) {
    throw ParameterError("uniform filter window must be odd and positive");
  }
  if (window > x.size()) {
    throw ParameterError("uniform filter window longer than the signal");
  }
  const auto n = static_cast<std::ptrdiff_t>(x.size());
  const auto half = static_cast<std::ptrdiff_t>(window / 2);
  std::vector<double> out(x.size());
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (std::ptrdiff_t k = -half; k <= half; ++k) {
      sum += x[static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(i + k, 0, n - 1))];
    }
    out[static_cast<std::size_t>(i)] = sum / static_cast<double>(window);
  }
  return out;
}

Bits morph_close(std::span<const std::uint8_t> bits, std::size_t gap) {
  if (gap == 0) throw ParameterError("closing gap must be positive");
  // Segment of `gap` cells anchored at its first cell. Zero padding of
  // `gap` cells on both sides emulates an unbounded domain, so the leading
  // and trailing zero runs are never filled.
  const std::size_t len = gap;
  const std::size_t n = bits.size();
  const std::size_t padded = n + 2 * len;
  std::vector<std::uint8_t> src(padded, 0);
  for (std::size_t i = 0; i < n; ++i) src[len + i] = bits[i] ? 1 : 0;

  // dilated[i] = OR of src[i - len + 1 .. i]
  std::vector<std::uint8_t> dilated(padded, 0);
  std::size_t ones = 0;
  for (std::size_t i = 0; i < padded; ++i) {
    ones += src[i];
    if (i >= len) ones -= src[i - len];
    dilated[i] = ones > 0;
  }
  // eroded[i] = AND of dilated[i .. i + len - 1], out of range counts as 0
  Bits out(n, 0);
  ones = 0;
  for (std::size_t i = padded; i-- > 0;) {
    ones += dilated[i];
    if (i + len < padded) ones -= dilated[i + len];
    const bool full = i + len <= padded && ones == len;
    if (i >= len && i < len + n) out[i - len] = full ? 1 : 0;
  }
  return out;
}

CoiMask coi_mask(std::span<const double> cells, const SegmentationParams& p) {
  p.validate();
  if (cells.empty()) throw ParameterError("cannot segment an empty signal");
  std::size_t window = std::min(p.uniform_window, cells.size());
  if (window % 2 == 0) --window;

  const auto smoothed = uniform_filter(cells, window);
  const double peak = *std::max_element(smoothed.begin(), smoothed.end());
  Bits raw(cells.size(), 0);
  if (peak > 0.0) {
    const double level = p.threshold_frac * peak;
    for (std::size_t i = 0; i < smoothed.size(); ++i) {
      raw[i] = smoothed[i] >= level ? 1 : 0;
    }
  }
  return CoiMask::from_bits(morph_close(raw, p.close_gap_cells));
}

CoiMask coi_mask(const RangeProfile& rp, const SegmentationParams& p) {
  return coi_mask(std::span<const double>(rp.cells), p);
}

double tlop(double asp_deg, double length_m, double width_m) {
  const double a = asp_deg * std::numbers::pi / 180.0;
  return length_m * std::abs(std::cos(a)) + width_m * std::abs(std::sin(a));
}

}  // namespace hrrp
