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

#include "hrrp/mfn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hrrp {

void DecompositionParams::validate() const {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw ParameterError("sigma must be positive");
  }
  if (!(decay_rate > 0.0) || !std::isfinite(decay_rate)) {
    throw ParameterError("decay_rate must be positive");
  }
  seg.validate();
}

double mean_coi_amplitude(std::span<const double> cells, const CoiMask& mask) {
  if (mask.bits.size() != cells.size()) {
    throw ParameterError("mask and profile lengths differ");
  }
  double sum = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (mask.bits[i]) {
      sum += cells[i];
      ++count;
    }
  }
  if (count == 0) throw DegenerateInputError("empty cells-of-interest mask");
  return sum / static_cast<double>(count);
}

std::vector<double> smooth_with_distance(std::span<const std::uint8_t> coi,
                                         double decay_rate) {
  const std::size_t n = coi.size();
  constexpr auto kFar = std::numeric_limits<std::size_t>::max();
  // Two-pass distance transform.
  std::vector<std::size_t> dist(n, kFar);
  std::size_t last = kFar;
  for (std::size_t i = 0; i < n; ++i) {
    if (coi[i]) last = i;
    if (last != kFar) dist[i] = i - last;
  }
  if (last == kFar) throw DegenerateInputError("empty cells-of-interest mask");
  std::size_t next = kFar;
  for (std::size_t i = n; i-- > 0;) {
    if (coi[i]) next = i;
    if (next != kFar) dist[i] = std::min(dist[i], next - i);
  }

  std::vector<double> soft(n);
  for (std::size_t i = 0; i < n; ++i) {
    soft[i] = std::exp(-decay_rate * static_cast<double>(dist[i]));
  }
  return soft;
}

std::vector<double> gaussian_kernel(double sigma) {
  if (!(sigma > 0.0)) throw ParameterError("sigma must be positive");
  const auto radius = static_cast<std::ptrdiff_t>(std::ceil(4.0 * sigma));
  std::vector<double> k(static_cast<std::size_t>(2 * radius + 1));
  double total = 0.0;
  for (std::ptrdiff_t j = -radius; j <= radius; ++j) {
    const double x = static_cast<double>(j) / sigma;
    const double w = std::exp(-0.5 * x * x);
    k[static_cast<std::size_t>(j + radius)] = w;
    total += w;
  }
  for (auto& w : k) w /= total;
  return k;
}

std::vector<double> gaussian_filter_1d(std::span<const double> x,
                                       double sigma) {
  const auto kernel = gaussian_kernel(sigma);
  const auto radius = static_cast<std::ptrdiff_t>(kernel.size() / 2);
  const auto n = static_cast<std::ptrdiff_t>(x.size());
  std::vector<double> out(x.size(), 0.0);
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::ptrdiff_t j = -radius; j <= radius; ++j) {
      const auto src = std::clamp<std::ptrdiff_t>(i - j, 0, n - 1);
      acc += kernel[static_cast<std::size_t>(j + radius)] *
             x[static_cast<std::size_t>(src)];
    }
    out[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

MfnComponents mfn_decompose(std::span<const double> cells, const CoiMask& mask,
                            const DecompositionParams& params) {
  params.validate();
  if (mask.bits.size() != cells.size()) {
    throw ParameterError("mask and profile lengths differ");
  }
  const std::size_t n = cells.size();
  MfnComponents out;
  out.sigma = params.sigma;
  if (mask.count() == 0) {
    out.m.assign(n, 0.0);
    out.f.assign(n, 0.0);
    out.n.assign(cells.begin(), cells.end());
    return out;
  }

  const double level = mean_coi_amplitude(cells, mask);
  out.m.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.m[i] = mask.bits[i] ? level : 0.0;

  const auto soft = smooth_with_distance(mask.bits, params.decay_rate);
  std::vector<double> weighted(n);
  for (std::size_t i = 0; i < n; ++i) weighted[i] = cells[i] * soft[i];
  out.f = gaussian_filter_1d(weighted, params.sigma);

  out.n.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.n[i] = cells[i] - out.f[i];
  return out;
}

MfnComponents mfn_decompose(std::span<const double> cells,
                            const DecompositionParams& params) {
  params.validate();
  return mfn_decompose(cells, coi_mask(cells, params.seg), params);
}

MfnComponents mfn_decompose(const RangeProfile& rp,
                            const DecompositionParams& params) {
  return mfn_decompose(std::span<const double>(rp.cells), params);
}

}  // namespace hrrp
