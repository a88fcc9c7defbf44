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

// Data-parallel batch kernels. Each takes an Execution argument: `parallel`
// runs an OpenMP loop over independent items, `serial` runs the plain loop.
// Both paths write every result to a fixed slot, so outputs are identical.

#ifndef HRRP_BATCH_HPP_
#define HRRP_BATCH_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hrrp/metrics.hpp"
#include "hrrp/types.hpp"

namespace hrrp {

std::vector<DecomposedProfile> decompose_batch(
    const Dataset& ds, const DecompositionParams& params,
    Execution exec = Execution::parallel);

/// Decomposes only ds[indices[k]]; result k belongs to indices[k].
std::vector<DecomposedProfile> decompose_batch(
    const Dataset& ds, std::span<const std::size_t> indices,
    const DecompositionParams& params, Execution exec = Execution::parallel);

constexpr std::array<MetricKind, 4> kAllMetricKinds = {
    MetricKind::mse, MetricKind::cosine, MetricKind::mse_f, MetricKind::cos_f};

/// One row of a pairwise metric table, indexed like kAllMetricKinds. Empty
/// entries are undefined metrics.
struct PairMetrics {
  std::size_t i = 0;
  std::size_t j = 0;
  std::array<std::optional<double>, 4> values;
};

/// All (i, j) pairs, row-major.
std::vector<PairMetrics> pairwise_metrics(
    std::span<const DecomposedProfile> a, std::span<const DecomposedProfile> b,
    Execution exec = Execution::parallel);

/// Only the listed pairs, in the given order.
std::vector<PairMetrics> pairwise_metrics(
    std::span<const DecomposedProfile> a, std::span<const DecomposedProfile> b,
    std::span<const std::pair<std::size_t, std::size_t>> pairs,
    Execution exec = Execution::parallel);

/// Number of OpenMP threads the parallel path would use (1 without OpenMP).
int max_threads();

}  // namespace hrrp

#endif  // HRRP_BATCH_HPP_
