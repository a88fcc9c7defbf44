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


// Serial reference loops against the OpenMP kernels on the reference fleet.
// Run with OMP_NUM_THREADS set to compare thread counts.

#include <benchmark/benchmark.h>

#include <vector>

#include "hrrp/batch.hpp"
#include "hrrp/bench.hpp"
#include "hrrp/synth.hpp"
#include "reference_fleet.hpp"

namespace {

using hrrp::Execution;

const hrrp::Dataset& fleet() {
  static const hrrp::Dataset ds = reference::dataset();
  return ds;
}

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void BM_RenderFleet(benchmark::State& state) {
  const auto ships = reference::ships();
  const auto aspects = reference::aspects();
  for (auto _ : state) {
    auto ds = hrrp::render_fleet(ships, aspects, 1, reference::scene(), mode(state));
    benchmark::DoNotOptimize(ds);
  }
  state.SetItemsProcessed(state.iterations() * ships.size() * aspects.size());
}

void BM_DecomposeBatch(benchmark::State& state) {
  const auto& ds = fleet();
  for (auto _ : state) {
    auto parts = hrrp::decompose_batch(ds, hrrp::DecompositionParams{}, mode(state));
    benchmark::DoNotOptimize(parts);
  }
  state.SetItemsProcessed(state.iterations() * ds.size());
}

void BM_PairwiseMetrics(benchmark::State& state) {
  const auto& ds = fleet();
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < 400; ++i) idx.push_back(i * 53 % ds.size());
  const auto parts = hrrp::decompose_batch(ds, idx, hrrp::DecompositionParams{});
  for (auto _ : state) {
    auto rows = hrrp::pairwise_metrics(parts, parts, mode(state));
    benchmark::DoNotOptimize(rows);
  }
  state.SetItemsProcessed(state.iterations() * parts.size() * parts.size());
}

void BM_Discriminability(benchmark::State& state) {
  const auto& ds = fleet();
  const auto pairs = hrrp::select_pairs(ds, hrrp::PairingParams{});
  std::vector<hrrp::MetricSpec> specs;
  for (auto k : hrrp::kAllMetricKinds) specs.push_back(hrrp::MetricSpec::of(k));
  hrrp::ProtocolOptions opts;
  opts.exec = mode(state);
  for (auto _ : state) {
    auto bins = hrrp::discriminability(ds, pairs, hrrp::DecompositionParams{}, specs, opts);
    benchmark::DoNotOptimize(bins);
  }
  state.SetItemsProcessed(state.iterations() * pairs.size());
}

void exec_args(benchmark::internal::Benchmark* b) {
  b->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
}

BENCHMARK(BM_RenderFleet)->Apply(exec_args);
BENCHMARK(BM_DecomposeBatch)->Apply(exec_args);
BENCHMARK(BM_PairwiseMetrics)->Apply(exec_args);
BENCHMARK(BM_Discriminability)->Apply(exec_args)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
