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

// Cells-of-interest segmentation: box smoothing, relative threshold and
// morphological closing; plus the projected-length model of a rectangular
// target.

#ifndef HRRP_SEGMENTATION_HPP_
#define HRRP_SEGMENTATION_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "hrrp/types.hpp"

namespace hrrp {

struct SegmentationParams {
  std::size_t uniform_window = 5;  // odd, cells
  double threshold_frac = 0.5;     // fraction of the smoothed maximum
  std::size_t close_gap_cells = 14;

  void validate() const;
};

/// Centered moving average with edge replication. `window` must be odd and
/// no longer than `x`.
std::vector<double> uniform_filter(std::span<const double> x,
                                   std::size_t window);

/// Closing (dilation then erosion) with a flat segment of `gap` cells.
/// Interior zero runs shorter than `gap` are filled; longer or equal runs
/// and the leading / trailing zero runs are kept.
Bits morph_close(std::span<const std::uint8_t> bits, std::size_t gap);

/// Smooth, keep cells >= threshold_frac * max, close gaps. An all-zero
/// signal gives an empty mask. When the signal is shorter than the window,
/// the largest odd window that fits is used.
CoiMask coi_mask(std::span<const double> cells, const SegmentationParams& p);
CoiMask coi_mask(const RangeProfile& rp, const SegmentationParams& p);

/// Projected extent of an l x w rectangle seen at `asp_deg`:
/// l|cos asp| + w|sin asp|.
double tlop(double asp_deg, double length_m, double width_m);

inline double lrp_meters(const CoiMask& mask, double delta_r_m) {
  return static_cast<double>(mask.lrp_cells) * delta_r_m;
}

}  // namespace hrrp

#endif  // HRRP_SEGMENTATION_HPP_
