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

// Discriminability protocol.
//
// Profiles are binned by aspect. In each bin, ships of similar length are
// paired and a fixed number of profiles is sampled per ship. For every query
// profile of one ship we take the top metric against the other profiles of
// the same ship (query excluded) and against the profiles of the paired
// ship, both directions pooled. A metric discriminates well when the
// same-ship average beats the different-ship average by a wide margin.

#ifndef HRRP_BENCH_HPP_
#define HRRP_BENCH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hrrp/metrics.hpp"
#include "hrrp/mfn.hpp"
#include "hrrp/types.hpp"

namespace hrrp {

struct PairingParams {
  double bin_width_deg = 10.0;
  std::size_t n_pairs_per_bin = 10;
  std::size_t n_per_ship_per_bin = 30;
  double length_tol_m = 5.0;
  double min_length_m = 50.0;
  std::uint64_t pairing_seed = 0;

  void validate() const;
  std::size_t bin_count() const;
};

/// bins[b] lists, in dataset order, the profiles with
/// floor(aspect / bin_width) == b. Throws ParameterError unless bin_width
/// divides 360.
std::vector<std::vector<std::size_t>> bin_by_aspect(const Dataset& ds,
                                                    double bin_width_deg);

struct ShipPair {
  std::size_t bin = 0;
  std::string ship_a;
  std::string ship_b;
  std::vector<std::size_t> indices_a;  // sorted dataset indices
  std::vector<std::size_t> indices_b;
};

/// Deterministic for a fixed pairing_seed. Bins without eligible pairs
/// contribute nothing.
std::vector<ShipPair> select_pairs(const Dataset& ds, const PairingParams& p);

struct MetricBinStats {
  MetricSpec spec;
  std::optional<double> mean_top_same;
  std::optional<double> mean_top_diff;
  std::optional<double> relative_evolution;
  std::size_t n_same = 0;  // defined top values
  std::size_t n_diff = 0;
  std::size_t absent_same = 0;  // queries with nothing in the aspect window
  std::size_t absent_diff = 0;

  std::size_t n_comparisons() const { return n_same + n_diff; }
};

struct BinReport {
  std::size_t bin_index = 0;
  std::size_t n_pairs = 0;
  std::vector<MetricBinStats> metrics;  // one per requested spec, same order

  const MetricBinStats* find(MetricKind kind) const;
};

struct ProtocolOptions {
  double half_window_deg = 5.0;
  std::size_t bin_count = 36;
  Execution exec = Execution::parallel;
};

/// One report per bin in [0, opts.bin_count), populated or not.
std::vector<BinReport> discriminability(const Dataset& ds,
                                        std::span<const ShipPair> pairs,
                                        const DecompositionParams& params,
                                        std::span<const MetricSpec> specs,
                                        const ProtocolOptions& opts = {});

/// Positive when same-ship scores beat different-ship scores. Empty when
/// the denominator is zero.
std::optional<double> relative_evolution(double mean_top_same,
                                         double mean_top_diff,
                                         Orientation orientation);

/// Mean of the defined relative evolutions of `kind` over populated bins.
std::optional<double> mean_relative_evolution(std::span<const BinReport> bins,
                                              MetricKind kind);

struct SweepPoint {
  double sigma = 0.0;
  std::vector<BinReport> bins;
};

/// discriminability() once per sigma, everything else from `base`.
std::vector<SweepPoint> sigma_sweep(const Dataset& ds,
                                    std::span<const ShipPair> pairs,
                                    const DecompositionParams& base,
                                    std::span<const double> sigmas,
                                    std::span<const MetricSpec> specs,
                                    const ProtocolOptions& opts = {});

}  // namespace hrrp

#endif  // HRRP_BENCH_HPP_
