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

#ifndef HRRP_METRICS_HPP_
#define HRRP_METRICS_HPP_

#include <optional>
#include <span>
#include <string_view>

#include "hrrp/mfn.hpp"
#include "hrrp/types.hpp"

namespace hrrp {

/// A profile together with its decomposition and mask.
struct DecomposedProfile {
  RangeProfile rp;
  MfnComponents comps;
  CoiMask mask;
};

DecomposedProfile decompose_profile(const RangeProfile& rp,
                                    const DecompositionParams& params);

enum class MetricKind { mse, cosine, mse_f, cos_f };
enum class Orientation { maximize, minimize };

struct MetricSpec {
  MetricKind kind = MetricKind::cos_f;
  Orientation orientation = Orientation::maximize;

  /// The only valid orientation for each kind: MSE-like metrics minimize,
  /// cosine-like metrics maximize.
  static MetricSpec of(MetricKind kind);
  bool operator==(const MetricSpec&) const = default;
};

std::string_view to_string(MetricKind kind);
std::optional<MetricKind> parse_metric_kind(std::string_view name);

/// Squared Euclidean distance (a sum, not a mean).
double mse(std::span<const double> x1, std::span<const double> x2);

/// x1.x2 / (|x1| |x2|). Throws UndefinedMetricError on a zero-norm input.
double cosine(std::span<const double> x1, std::span<const double> x2);

/// mse(f1, f2) divided by the mean LRP (cells) of the two profiles.
double mse_f(const DecomposedProfile& d1, const DecomposedProfile& d2);

/// Cosine of mean-centered features restricted to the union of both COIs.
/// Each f is centered by its mean over its own COI.
double cos_f(const DecomposedProfile& d1, const DecomposedProfile& d2);

/// Standard MSE on raw amplitudes, normalized by the mean LRP so it is on the
/// same scale as mse_f.
double mse_lrp_normalized(const DecomposedProfile& d1,
                          const DecomposedProfile& d2);

/// Value of `kind` between two decomposed profiles. The `mse` kind is the
/// LRP-normalized standard MSE; `cosine` is the plain cosine of raw cells.
double evaluate(MetricKind kind, const DecomposedProfile& d1,
                const DecomposedProfile& d2);

/// Smallest angle between two aspect angles, in [0, 180].
double circular_distance_deg(double a_deg, double b_deg);

/// Best metric value between `query` and the candidates whose aspect lies
/// within +-half_window_deg of the query's (circular distance). Candidates
/// for which the metric is undefined are skipped. Empty when nothing is in
/// the window.
std::optional<double> top_metric(
    const DecomposedProfile& query,
    std::span<const DecomposedProfile* const> candidates,
    const MetricSpec& spec, double half_window_deg = 5.0);

std::optional<double> top_metric(const DecomposedProfile& query,
                                 std::span<const DecomposedProfile> candidates,
                                 const MetricSpec& spec,
                                 double half_window_deg = 5.0);

}  // namespace hrrp

#endif  // HRRP_METRICS_HPP_
