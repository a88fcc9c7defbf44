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

#include "hrrp/bench.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <utility>

#include "hrrp/batch.hpp"
#include "seeding.hpp"

namespace hrrp {
namespace {

enum Stream : std::uint64_t { kPairChoice = 11, kProfileChoice = 12 };

struct Accum {
  double sum_same = 0.0;
  double sum_diff = 0.0;
  std::size_t n_same = 0;
  std::size_t n_diff = 0;
  std::size_t absent_same = 0;
  std::size_t absent_diff = 0;

  Accum& operator+=(const Accum& o) {
    sum_same += o.sum_same;
    sum_diff += o.sum_diff;
    n_same += o.n_same;
    n_diff += o.n_diff;
    absent_same += o.absent_same;
    absent_diff += o.absent_diff;
    return *this;
  }
};

void add(std::optional<double> v, double& sum, std::size_t& n,
         std::size_t& absent) {
  if (v) {
    sum += *v;
    ++n;
  } else {
    ++absent;
  }
}

// One direction of one pair: queries from `own`, references from `own`
// (minus the query) and from `other`.
void score_direction(std::span<const DecomposedProfile* const> own,
                     std::span<const DecomposedProfile* const> other,
                     std::span<const MetricSpec> specs, double half_window,
                     std::vector<Accum>& acc) {
  std::vector<const DecomposedProfile*> same;
  same.reserve(own.size());
  for (std::size_t q = 0; q < own.size(); ++q) {
    same.clear();
    for (std::size_t c = 0; c < own.size(); ++c) {
      if (c != q) same.push_back(own[c]);
    }
    for (std::size_t m = 0; m < specs.size(); ++m) {
      add(top_metric(*own[q], same, specs[m], half_window), acc[m].sum_same,
          acc[m].n_same, acc[m].absent_same);
      add(top_metric(*own[q], other, specs[m], half_window), acc[m].sum_diff,
          acc[m].n_diff, acc[m].absent_diff);
    }
  }
}

}  // namespace

void PairingParams::validate() const {
  if (!(bin_width_deg > 0.0) || bin_width_deg > 360.0) {
    throw ParameterError("bin_width_deg must lie in (0, 360]");
  }
  const double bins = 360.0 / bin_width_deg;
  if (std::abs(bins - std::round(bins)) > 1e-9) {
    throw ParameterError("bin_width_deg must divide 360");
  }
  if (n_pairs_per_bin == 0 || n_per_ship_per_bin == 0) {
    throw ParameterError("pair and profile counts must be positive");
  }
  if (!(length_tol_m >= 0.0) || !(min_length_m >= 0.0)) {
    throw ParameterError("length tolerances must be non-negative");
  }
}

std::size_t PairingParams::bin_count() const {
  validate();
  return static_cast<std::size_t>(std::lround(360.0 / bin_width_deg));
}

std::vector<std::vector<std::size_t>> bin_by_aspect(const Dataset& ds,
                                                    double bin_width_deg) {
  PairingParams p;
  p.bin_width_deg = bin_width_deg;
  const std::size_t nbins = p.bin_count();
  std::vector<std::vector<std::size_t>> bins(nbins);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    auto b = static_cast<std::size_t>(std::floor(ds[i].aspect_deg / bin_width_deg));
    bins[std::min(b, nbins - 1)].push_back(i);
  }
  return bins;
}

std::vector<ShipPair> select_pairs(const Dataset& ds, const PairingParams& p) {
  const auto bins = bin_by_aspect(ds, p.bin_width_deg);

  // Ships in order of first appearance; length from their first profile.
  std::vector<std::string> ships;
  std::vector<double> lengths;
  std::map<std::string, std::size_t> ship_slot;
  for (const auto& rp : ds) {
    if (ship_slot.emplace(rp.ship_id, ships.size()).second) {
      ships.push_back(rp.ship_id);
      lengths.push_back(rp.ship_length_m);
    }
  }

  std::vector<ShipPair> out;
  for (std::size_t b = 0; b < bins.size(); ++b) {
    std::vector<std::vector<std::size_t>> members(ships.size());
    for (const auto idx : bins[b]) members[ship_slot.at(ds[idx].ship_id)].push_back(idx);

    std::vector<std::size_t> eligible;
    for (std::size_t s = 0; s < ships.size(); ++s) {
      if (lengths[s] >= p.min_length_m &&
          members[s].size() >= p.n_per_ship_per_bin) {
        eligible.push_back(s);
      }
    }
    std::vector<std::pair<std::size_t, std::size_t>> candidates;
    for (std::size_t x = 0; x < eligible.size(); ++x) {
      for (std::size_t y = x + 1; y < eligible.size(); ++y) {
        if (std::abs(lengths[eligible[x]] - lengths[eligible[y]]) <=
            p.length_tol_m) {
          candidates.emplace_back(eligible[x], eligible[y]);
        }
      }
    }
    if (candidates.size() > p.n_pairs_per_bin) {
      auto rng = detail::keyed_engine({p.pairing_seed, kPairChoice, b});
      std::shuffle(candidates.begin(), candidates.end(), rng);
      candidates.resize(p.n_pairs_per_bin);
      std::sort(candidates.begin(), candidates.end());
    }

    for (std::size_t k = 0; k < candidates.size(); ++k) {
      auto sample = [&](std::size_t ship, std::uint64_t side) {
        auto pool = members[ship];
        auto rng = detail::keyed_engine({p.pairing_seed, kProfileChoice, b, k, side});
        std::shuffle(pool.begin(), pool.end(), rng);
        pool.resize(p.n_per_ship_per_bin);
        std::sort(pool.begin(), pool.end());
        return pool;
      };
      const auto [sa, sb] = candidates[k];
      out.push_back({b, ships[sa], ships[sb], sample(sa, 0), sample(sb, 1)});
    }
  }
  return out;
}

const MetricBinStats* BinReport::find(MetricKind kind) const {
  for (const auto& m : metrics) {
    if (m.spec.kind == kind) return &m;
  }
  return nullptr;
}

std::optional<double> relative_evolution(double mean_top_same,
                                         double mean_top_diff,
                                         Orientation orientation) {
  if (orientation == Orientation::minimize) {
    if (mean_top_same == 0.0) return std::nullopt;
    return (mean_top_diff - mean_top_same) / mean_top_same;
  }
  if (mean_top_diff == 0.0) return std::nullopt;
  return (mean_top_same - mean_top_diff) / std::abs(mean_top_diff);
}

std::vector<BinReport> discriminability(const Dataset& ds,
                                        std::span<const ShipPair> pairs,
                                        const DecompositionParams& params,
                                        std::span<const MetricSpec> specs,
                                        const ProtocolOptions& opts) {
  params.validate();
  for (const auto& spec : specs) {
    if (spec != MetricSpec::of(spec.kind)) {
      throw ParameterError("metric orientation does not match its kind");
    }
  }
  for (const auto& pair : pairs) {
    if (pair.bin >= opts.bin_count) throw ParameterError("pair bin out of range");
  }

  // Decompose each referenced profile once.
  std::vector<std::size_t> used;
  for (const auto& pair : pairs) {
    used.insert(used.end(), pair.indices_a.begin(), pair.indices_a.end());
    used.insert(used.end(), pair.indices_b.begin(), pair.indices_b.end());
  }
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  const auto decomposed = decompose_batch(ds, used, params, opts.exec);
  auto lookup = [&](std::size_t idx) {
    const auto it = std::lower_bound(used.begin(), used.end(), idx);
    return &decomposed[static_cast<std::size_t>(it - used.begin())];
  };

  std::vector<std::vector<Accum>> per_pair(pairs.size(),
                                           std::vector<Accum>(specs.size()));
  auto score_pair = [&](std::size_t k) {
    std::vector<const DecomposedProfile*> a, b;
    for (const auto idx : pairs[k].indices_a) a.push_back(lookup(idx));
    for (const auto idx : pairs[k].indices_b) b.push_back(lookup(idx));
    score_direction(a, b, specs, opts.half_window_deg, per_pair[k]);
    score_direction(b, a, specs, opts.half_window_deg, per_pair[k]);
  };
  if (opts.exec == Execution::parallel) {
    const auto n = static_cast<std::ptrdiff_t>(pairs.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t k = 0; k < n; ++k) score_pair(static_cast<std::size_t>(k));
  } else {
    for (std::size_t k = 0; k < pairs.size(); ++k) score_pair(k);
  }

  // Reduce in pair order so both execution paths sum identically.
  std::vector<BinReport> reports(opts.bin_count);
  std::vector<std::vector<Accum>> per_bin(opts.bin_count,
                                          std::vector<Accum>(specs.size()));
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    ++reports[pairs[k].bin].n_pairs;
    for (std::size_t m = 0; m < specs.size(); ++m) {
      per_bin[pairs[k].bin][m] += per_pair[k][m];
    }
  }
  for (std::size_t b = 0; b < opts.bin_count; ++b) {
    reports[b].bin_index = b;
    for (std::size_t m = 0; m < specs.size(); ++m) {
      const auto& acc = per_bin[b][m];
      MetricBinStats st;
      st.spec = specs[m];
      st.n_same = acc.n_same;
      st.n_diff = acc.n_diff;
      st.absent_same = acc.absent_same;
      st.absent_diff = acc.absent_diff;
      if (acc.n_same > 0) st.mean_top_same = acc.sum_same / static_cast<double>(acc.n_same);
      if (acc.n_diff > 0) st.mean_top_diff = acc.sum_diff / static_cast<double>(acc.n_diff);
      if (st.mean_top_same && st.mean_top_diff) {
        st.relative_evolution = relative_evolution(
            *st.mean_top_same, *st.mean_top_diff, st.spec.orientation);
      }
      reports[b].metrics.push_back(st);
    }
  }
  return reports;
}

std::optional<double> mean_relative_evolution(std::span<const BinReport> bins,
                                              MetricKind kind) {
  double sum = 0.0;
  std::size_t n = 0;
  for (const auto& bin : bins) {
    if (bin.n_pairs == 0) continue;
    const auto* st = bin.find(kind);
    if (st && st->relative_evolution) {
      sum += *st->relative_evolution;
      ++n;
    }
  }
  if (n == 0) return std::nullopt;
  return sum / static_cast<double>(n);
}

std::vector<SweepPoint> sigma_sweep(const Dataset& ds,
                                    std::span<const ShipPair> pairs,
                                    const DecompositionParams& base,
                                    std::span<const double> sigmas,
                                    std::span<const MetricSpec> specs,
                                    const ProtocolOptions& opts) {
  if (sigmas.empty()) throw ParameterError("sigma list is empty");
  std::vector<SweepPoint> out;
  for (const double sigma : sigmas) {
    auto params = base;
    params.sigma = sigma;
    out.push_back({sigma, discriminability(ds, pairs, params, specs, opts)});
  }
  return out;
}

}  // namespace hrrp
