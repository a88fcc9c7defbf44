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

#include "hrrp/batch.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hrrp {
namespace {

template <typename Fn>
void for_each_index(std::size_t count, Execution exec, Fn&& fn) {
  if (exec == Execution::parallel) {
    const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t k = 0; k < n; ++k) fn(static_cast<std::size_t>(k));
  } else {
    for (std::size_t k = 0; k < count; ++k) fn(k);
  }
}

PairMetrics evaluate_pair(const DecomposedProfile& x,
                          const DecomposedProfile& y, std::size_t i,
                          std::size_t j) {
  PairMetrics row{i, j, {}};
  for (std::size_t k = 0; k < kAllMetricKinds.size(); ++k) {
    try {
      row.values[k] = evaluate(kAllMetricKinds[k], x, y);
    } catch (const UndefinedMetricError&) {
      row.values[k].reset();
    }
  }
  return row;
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<DecomposedProfile> decompose_batch(
    const Dataset& ds, const DecompositionParams& params, Execution exec) {
  std::vector<std::size_t> all(ds.size());
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
  return decompose_batch(ds, all, params, exec);
}

std::vector<DecomposedProfile> decompose_batch(
    const Dataset& ds, std::span<const std::size_t> indices,
    const DecompositionParams& params, Execution exec) {
  params.validate();
  for (const auto idx : indices) {
    if (idx >= ds.size()) throw ParameterError("profile index out of range");
  }
  std::vector<DecomposedProfile> out(indices.size());
  for_each_index(indices.size(), exec, [&](std::size_t k) {
    out[k] = decompose_profile(ds[indices[k]], params);
  });
  return out;
}

std::vector<PairMetrics> pairwise_metrics(std::span<const DecomposedProfile> a,
                                          std::span<const DecomposedProfile> b,
                                          Execution exec) {
  std::vector<PairMetrics> out(a.size() * b.size());
  for_each_index(out.size(), exec, [&](std::size_t k) {
    const std::size_t i = k / b.size();
    const std::size_t j = k % b.size();
    out[k] = evaluate_pair(a[i], b[j], i, j);
  });
  return out;
}

std::vector<PairMetrics> pairwise_metrics(
    std::span<const DecomposedProfile> a, std::span<const DecomposedProfile> b,
    std::span<const std::pair<std::size_t, std::size_t>> pairs,
    Execution exec) {
  for (const auto& [i, j] : pairs) {
    if (i >= a.size() || j >= b.size()) {
      throw ParameterError("pair index out of range");
    }
  }
  std::vector<PairMetrics> out(pairs.size());
  for_each_index(out.size(), exec, [&](std::size_t k) {
    out[k] = evaluate_pair(a[pairs[k].first], b[pairs[k].second],
                           pairs[k].first, pairs[k].second);
  });
  return out;
}

}  // namespace hrrp
