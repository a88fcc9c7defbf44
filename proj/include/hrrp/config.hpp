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

// JSON configuration files: fleet description for `synth`, protocol setup
// for `bench`. See docs/FORMATS.md for the schemas.

#ifndef HRRP_CONFIG_HPP_
#define HRRP_CONFIG_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "hrrp/bench.hpp"
#include "hrrp/metrics.hpp"
#include "hrrp/mfn.hpp"
#include "hrrp/synth.hpp"

namespace hrrp {

struct ShipSpec {
  std::string id;
  double length_m = 0.0;
  double width_m = 0.0;
  std::size_t n_scatterers = 2;
  std::uint64_t seed = 0;
  ShipLayout layout;
};

struct FleetConfig {
  SceneParams scene;
  std::vector<ShipSpec> ships;
  std::vector<double> aspects_deg;
  std::size_t draws_per_aspect = 1;

  std::vector<ShipModel> build_ships() const;
};

struct BenchConfig {
  PairingParams pairing;
  DecompositionParams decomposition;
  std::vector<MetricSpec> metrics;  // defaults to all four kinds
  std::vector<double> sigmas;       // empty: no sweep
  double half_window_deg = 5.0;
};

/// Throws ConfigError with a description of the first problem found.
FleetConfig parse_fleet_config(std::string_view json_text);
FleetConfig load_fleet_config(const std::filesystem::path& path);

BenchConfig parse_bench_config(std::string_view json_text);
BenchConfig load_bench_config(const std::filesystem::path& path);

}  // namespace hrrp

#endif  // HRRP_CONFIG_HPP_
