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

#include "hrrp/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace hrrp {
namespace {

void require_same_length(std::size_t a, std::size_t b) {
  if (a != b) throw ParameterError("metric inputs differ in length");
}

double mean_lrp(const DecomposedProfile& d1, const DecomposedProfile& d2) {
  const double lrp = 0.5 * static_cast<double>(d1.mask.lrp_cells +
                                               d2.mask.lrp_cells);
  if (lrp == 0.0) {
    throw UndefinedMetricError("both profiles have zero LRP");
  }
  return lrp;
}

// sqrt(n1 * n2) is exact for n1 == n2, so a vector compared with itself
// scores exactly 1. The split form only guards the range.
double norm_product(double n1, double n2) {
  const double prod = n1 * n2;
  if (std::isfinite(prod) && prod > 0.0) return std::sqrt(prod);
  return std::sqrt(n1) * std::sqrt(n2);
}

double mean_over_mask(std::span<const double> f, const Bits& bits) {
  double sum = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (bits[i]) {
      sum += f[i];
      ++count;
    }
  }
  if (count == 0) throw UndefinedMetricError("profile has no cells of interest");
  return sum / static_cast<double>(count);
}

}  // namespace

DecomposedProfile decompose_profile(const RangeProfile& rp,
                                    const DecompositionParams& params) {
  params.validate();
  DecomposedProfile d{rp, {}, coi_mask(rp, params.seg)};
  d.comps = mfn_decompose(std::span<const double>(rp.cells), d.mask, params);
  return d;
}

MetricSpec MetricSpec::of(MetricKind kind) {
  switch (kind) {
    case MetricKind::mse:
    case MetricKind::mse_f:
      return {kind, Orientation::minimize};
    case MetricKind::cosine:
    case MetricKind::cos_f:
      return {kind, Orientation::maximize};
  }
  return {kind, Orientation::maximize};
}

std::string_view to_string(MetricKind kind) {
  switch (kind) {
    case MetricKind::mse: return "mse";
    case MetricKind::cosine: return "cosine";
    case MetricKind::mse_f: return "mse_f";
    case MetricKind::cos_f: return "cos_f";
  }
  return "?";
}

std::optional<MetricKind> parse_metric_kind(std::string_view name) {
  for (auto k : {MetricKind::mse, MetricKind::cosine, MetricKind::mse_f,
                 MetricKind::cos_f}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

double mse(std::span<const double> x1, std::span<const double> x2) {
  require_same_length(x1.size(), x2.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < x1.size(); ++i) {
    const double d = x1[i] - x2[i];
    acc += d * d;
  }
  return acc;
}

double cosine(std::span<const double> x1, std::span<const double> x2) {
  require_same_length(x1.size(), x2.size());
  double dot = 0.0, n1 = 0.0, n2 = 0.0;
  for (std::size_t i = 0; i < x1.size(); ++i) {
    dot += x1[i] * x2[i];
    n1 += x1[i] * x1[i];
    n2 += x2[i] * x2[i];
  }
  if (n1 == 0.0 || n2 == 0.0) {
    throw UndefinedMetricError("cosine of a zero-norm vector");
  }
  return dot / norm_product(n1, n2);
}

double mse_f(const DecomposedProfile& d1, const DecomposedProfile& d2) {
  const double lrp = mean_lrp(d1, d2);
  return mse(d1.comps.f, d2.comps.f) / lrp;
}

double mse_lrp_normalized(const DecomposedProfile& d1,
                          const DecomposedProfile& d2) {
  const double lrp = mean_lrp(d1, d2);
  return mse(d1.rp.cells, d2.rp.cells) / lrp;
}

double cos_f(const DecomposedProfile& d1, const DecomposedProfile& d2) {
  const auto& f1 = d1.comps.f;
  const auto& f2 = d2.comps.f;
  require_same_length(f1.size(), f2.size());
  require_same_length(d1.mask.bits.size(), f1.size());
  require_same_length(d2.mask.bits.size(), f2.size());
  const double c1 = mean_over_mask(f1, d1.mask.bits);
  const double c2 = mean_over_mask(f2, d2.mask.bits);

  double dot = 0.0, n1 = 0.0, n2 = 0.0;
  for (std::size_t i = 0; i < f1.size(); ++i) {
    if (!d1.mask.bits[i] && !d2.mask.bits[i]) continue;
    const double a = f1[i] - c1;
    const double b = f2[i] - c2;
    dot += a * b;
    n1 += a * a;
    n2 += b * b;
  }
  if (n1 == 0.0 || n2 == 0.0) {
    throw UndefinedMetricError("centered features have zero norm on the union");
  }
  return dot / norm_product(n1, n2);
}

double evaluate(MetricKind kind, const DecomposedProfile& d1,
                const DecomposedProfile& d2) {
  switch (kind) {
    case MetricKind::mse: return mse_lrp_normalized(d1, d2);
    case MetricKind::cosine: return cosine(d1.rp.cells, d2.rp.cells);
    case MetricKind::mse_f: return mse_f(d1, d2);
    case MetricKind::cos_f: return cos_f(d1, d2);
  }
  throw ParameterError("unknown metric kind");
}

double circular_distance_deg(double a_deg, double b_deg) {
  const double d = std::fmod(std::abs(a_deg - b_deg), 360.0);
  return std::min(d, 360.0 - d);
}

std::optional<double> top_metric(
    const DecomposedProfile& query,
    std::span<const DecomposedProfile* const> candidates,
    const MetricSpec& spec, double half_window_deg) {
  std::optional<double> best;
  for (const auto* c : candidates) {
    if (circular_distance_deg(query.rp.aspect_deg, c->rp.aspect_deg) >
        half_window_deg) {
      continue;
    }
    double v = 0.0;
    try {
      v = evaluate(spec.kind, query, *c);
    } catch (const UndefinedMetricError&) {
      continue;
    }
    if (!best || (spec.orientation == Orientation::maximize ? v > *best
                                                            : v < *best)) {
      best = v;
    }
  }
  return best;
}

std::optional<double> top_metric(const DecomposedProfile& query,
                                 std::span<const DecomposedProfile> candidates,
                                 const MetricSpec& spec,
                                 double half_window_deg) {
  std::vector<const DecomposedProfile*> ptrs;
  ptrs.reserve(candidates.size());
  for (const auto& c : candidates) ptrs.push_back(&c);
  return top_metric(query, ptrs, spec, half_window_deg);
}

}  // namespace hrrp
