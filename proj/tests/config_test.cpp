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


#include "hrrp/config.hpp"

#include <string>

#include "gtest/gtest.h"

namespace hrrp {
namespace {

const char* kFleet = R"({
  "scene": {"cells": 200, "seed": 4, "speckle_sd": 0.1},
  "ships": [
    {"id": "a", "length_m": 80, "width_m": 12, "n_scatterers": 30, "seed": 1},
    {"id": "b", "length_m": 82, "width_m": 12, "n_scatterers": 30, "hull_fraction": 0.5}
  ],
  "aspects": {"start": 0, "stop": 20, "step": 2.5},
  "draws_per_aspect": 3
})";

TEST(FleetConfig, Parses) {
  const auto cfg = parse_fleet_config(kFleet);
  EXPECT_EQ(cfg.scene.cells, 200u);
  EXPECT_EQ(cfg.scene.seed, 4u);
  EXPECT_EQ(cfg.scene.speckle_sd, 0.1);
  EXPECT_EQ(cfg.scene.clutter_mean, SceneParams{}.clutter_mean);
  ASSERT_EQ(cfg.ships.size(), 2u);
  EXPECT_EQ(cfg.ships[1].layout.hull_fraction, 0.5);
  EXPECT_EQ(cfg.aspects_deg.size(), 8u);
  EXPECT_EQ(cfg.aspects_deg.back(), 17.5);
  EXPECT_EQ(cfg.draws_per_aspect, 3u);
  EXPECT_EQ(cfg.build_ships()[0].scatterers.size(), 30u);
}

TEST(FleetConfig, RejectsProblems) {
  EXPECT_THROW(parse_fleet_config("{"), ConfigError);
  EXPECT_THROW(parse_fleet_config("[]"), ConfigError);
  EXPECT_THROW(parse_fleet_config(R"({"ships": [], "aspects_deg": [0], "colour": 1})"),
               ConfigError);
  EXPECT_THROW(parse_fleet_config(R"({"ships": [{"id": "a"}], "aspects_deg": [0]})"),
               ConfigError);
  EXPECT_THROW(parse_fleet_config(R"({"ships": [], "aspects_deg": [0], "scene": {"cells": -3}})"),
               ConfigError);
  EXPECT_THROW(parse_fleet_config(R"({"ships": [], "aspects_deg": [0], "scene": {"delta_r_m": 0}})"),
               ConfigError);
  EXPECT_THROW(parse_fleet_config(R"({"ships": []})"), ConfigError);
  EXPECT_THROW(parse_fleet_config(
                   R"({"ships": [{"id": "a,b", "length_m": 80, "width_m": 9, "n_scatterers": 3}],
                       "aspects_deg": [0]})"),
               ConfigError);
  const auto cfg = parse_fleet_config(
      R"({"ships": [{"id": "a", "length_m": 8, "width_m": 9, "n_scatterers": 3}],
          "aspects_deg": [0]})");
  EXPECT_THROW(cfg.build_ships(), ConfigError);
}

TEST(BenchConfig, DefaultsAndOverrides) {
  const auto defaults = parse_bench_config("{}");
  EXPECT_EQ(defaults.metrics.size(), 4u);
  EXPECT_EQ(defaults.pairing.n_pairs_per_bin, 10u);
  EXPECT_TRUE(defaults.sigmas.empty());

  const auto cfg = parse_bench_config(R"({
    "pairing": {"bin_width_deg": 20, "pairing_seed": 3},
    "decomposition": {"sigma": 2, "uniform_window": 7},
    "metrics": ["cos_f", "mse"],
    "sigmas": [0.5, 8],
    "half_window_deg": 3
  })");
  EXPECT_EQ(cfg.pairing.bin_count(), 18u);
  EXPECT_EQ(cfg.decomposition.sigma, 2.0);
  EXPECT_EQ(cfg.decomposition.seg.uniform_window, 7u);
  ASSERT_EQ(cfg.metrics.size(), 2u);
  EXPECT_EQ(cfg.metrics[1], MetricSpec::of(MetricKind::mse));
  EXPECT_EQ(cfg.sigmas.size(), 2u);
  EXPECT_EQ(cfg.half_window_deg, 3.0);
}

TEST(BenchConfig, RejectsProblems) {
  EXPECT_THROW(parse_bench_config(R"({"metrics": ["l1"]})"), ConfigError);
  EXPECT_THROW(parse_bench_config(R"({"pairing": {"bin_width_deg": 7}})"), ConfigError);
  EXPECT_THROW(parse_bench_config(R"({"decomposition": {"uniform_window": 4}})"), ConfigError);
  EXPECT_THROW(parse_bench_config(R"({"decomposition": {"sigma": "big"}})"), ConfigError);
  EXPECT_THROW(parse_bench_config(R"({"sigmas": [0]})"), ConfigError);
  EXPECT_THROW(parse_bench_config(R"({"pairing": {"extra": 1}})"), ConfigError);
  EXPECT_THROW(load_bench_config("/nonexistent/bench.json"), ConfigError);
}

}  // namespace
}  // namespace hrrp
