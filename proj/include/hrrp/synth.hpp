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

// Deterministic point-scatterer range-profile generator.
//
// A ship is a rectangle (along axis = length, across axis = width) carrying
// point scatterers. At aspect a, a scatterer at (along, across) projects to
// the range offset along*cos(a) + across*sin(a) and deposits its amplitude
// into the nearest range cell. Clutter is exponential on every cell.
//
// Randomness is derived from (scene seed, draw, stream) through
// std::seed_seq; within a profile the speckle stream is consumed in
// scatterer order and the clutter stream in cell order, so every value is a
// function of (seed, draw, index) alone.

#ifndef HRRP_SYNTH_HPP_
#define HRRP_SYNTH_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hrrp/types.hpp"

namespace hrrp {

struct Scatterer {
  double along_m = 0.0;
  double across_m = 0.0;
  double reflectivity = 1.0;
};

struct ShipModel {
  std::string ship_id;
  double length_m = 100.0;
  double width_m = 20.0;
  double base_rcs = 1.0;
  std::vector<Scatterer> scatterers;

  /// Checks the dimension / scatterer invariants, including one scatterer
  /// within 5% of the length from each end.
  void validate() const;
};

/// How the free (non-forced) scatterers are placed.
struct ShipLayout {
  /// Fraction of the free scatterers placed on the hull outline; the rest
  /// are uniform over the deck rectangle.
  double hull_fraction = 0.0;
  double base_rcs = 1.0;
};

/// Two scatterers are forced at (+-length/2, 0); the other n - 2 follow
/// `layout`. Reflectivities are log-uniform in [0.3, 1] * base_rcs.
ShipModel make_ship(std::string ship_id, double length_m, double width_m,
                    std::size_t n_scatterers, std::uint64_t seed,
                    const ShipLayout& layout = {});

struct SceneParams {
  std::size_t cells = 1024;
  double delta_r_m = 1.0;
  std::size_t target_start_cell = 32;
  double clutter_mean = 0.02;
  double speckle_sd = 0.3;  // log-normal spread of scatterer amplitudes
  std::uint64_t seed = 0;

  void validate() const;
  /// Throws ConfigError if `ship` cannot fit at every aspect.
  void check_fits(const ShipModel& ship) const;
};

/// Deterministic for fixed (ship, aspect, scene, draw).
RangeProfile render_hrrp(const ShipModel& ship, double aspect_deg,
                         const SceneParams& scene, std::uint64_t draw);

/// Rows ordered (ship, aspect, draw); the draw key of a row is its row index.
Dataset render_fleet(std::span<const ShipModel> ships,
                     std::span<const double> aspects_deg,
                     std::size_t draws_per_aspect, const SceneParams& scene,
                     Execution exec = Execution::parallel);

/// Wraps an angle into [0, 360).
double wrap_degrees(double deg);

}  // namespace hrrp

#endif  // HRRP_SYNTH_HPP_
