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

// Mask / Features / Noise decomposition of a range profile.
//
//   coi = cells-of-interest mask of RP
//   m   = mean(RP over coi) * coi
//   m_f = exp(-decay_rate * dist(i, coi))      (1 on coi, decays outside)
//   f   = gaussian_filter(RP * m_f, sigma)
//   n   = RP - f
//
// A profile without cells of interest decomposes as m = f = 0, n = RP.

#ifndef HRRP_MFN_HPP_
#define HRRP_MFN_HPP_

#include <span>
#include <vector>

#include "hrrp/segmentation.hpp"
#include "hrrp/types.hpp"

namespace hrrp {

struct DecompositionParams {
  double sigma = 0.5;  // Gaussian standard deviation, cells
  SegmentationParams seg;
  double decay_rate = 2.0;

  void validate() const;
};

/// Mean of `cells` over the mask. Throws DegenerateInputError on an empty
/// mask.
double mean_coi_amplitude(std::span<const double> cells, const CoiMask& mask);

/// Soft mask exp(-decay_rate * d) where d is the index distance to the
/// nearest set cell of `coi`. Throws DegenerateInputError if `coi` is empty.
std::vector<double> smooth_with_distance(std::span<const std::uint8_t> coi,
                                         double decay_rate);

/// Sampled Gaussian, radius ceil(4 sigma), normalized to unit sum. Index
/// `radius` is the center tap.
std::vector<double> gaussian_kernel(double sigma);

/// Convolution with gaussian_kernel(sigma), edge replication.
std::vector<double> gaussian_filter_1d(std::span<const double> x, double sigma);

/// Decomposition with a precomputed mask. `cells` may hold any finite
/// values; the mask is not re-derived.
MfnComponents mfn_decompose(std::span<const double> cells,
                            const CoiMask& mask,
                            const DecompositionParams& params);

MfnComponents mfn_decompose(std::span<const double> cells,
                            const DecompositionParams& params);
MfnComponents mfn_decompose(const RangeProfile& rp,
                            const DecompositionParams& params);

}  // namespace hrrp

#endif  // HRRP_MFN_HPP_
