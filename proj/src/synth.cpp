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

#include "hrrp/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <utility>

#include "seeding.hpp"

namespace hrrp {
namespace {

enum Stream : std::uint32_t { kShip = 1, kSpeckle = 2, kClutter = 3 };

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t draw,
                            Stream stream) {
  return detail::keyed_engine({seed, draw, stream});
}

Scatterer point_on_hull(double t, double length, double width) {
  // t runs along the outline: starboard side, bow, port side, stern.
  const double hl = 0.5 * length;
  const double hw = 0.5 * width;
  if (t < length) return {-hl + t, hw, 0.0};
  t -= length;
  if (t < width) return {hl, hw - t, 0.0};
  t -= width;
  if (t < length) return {hl - t, -hw, 0.0};
  t -= length;
  return {-hl, -hw + std::min(t, width), 0.0};
}

}  // namespace

double wrap_degrees(double deg) {
  double a = std::fmod(deg, 360.0);
  if (a < 0.0) a += 360.0;
  if (a >= 360.0) a = 0.0;
  return a;
}

void ShipModel::validate() const {
  if (!(length_m > 0.0) || !(width_m > 0.0) || width_m > length_m) {
    throw ParameterError("ship needs 0 < width <= length");
  }
  if (!(base_rcs > 0.0)) throw ParameterError("base_rcs must be positive");
  if (scatterers.size() < 2) {
    throw ParameterError("ship needs at least two scatterers");
  }
  const double hl = 0.5 * length_m;
  const double tol = 0.05 * length_m;
  bool bow = false, stern = false;
  for (const auto& s : scatterers) {
    if (std::abs(s.along_m) > hl * (1 + 1e-12) ||
        std::abs(s.across_m) > 0.5 * width_m * (1 + 1e-12)) {
      throw ParameterError("scatterer outside the ship rectangle");
    }
    if (!(s.reflectivity > 0.0)) {
      throw ParameterError("scatterer reflectivity must be positive");
    }
    bow = bow || s.along_m >= hl - tol;
    stern = stern || s.along_m <= -hl + tol;
  }
  if (!bow || !stern) {
    throw ParameterError("ship needs a scatterer near each end");
  }
}

ShipModel make_ship(std::string ship_id, double length_m, double width_m,
                    std::size_t n_scatterers, std::uint64_t seed,
                    const ShipLayout& layout) {
  if (!(length_m > 0.0) || !(width_m > 0.0) || width_m > length_m) {
    throw ParameterError("ship needs 0 < width <= length");
  }
  if (n_scatterers < 2) {
    throw ParameterError("ship needs at least two scatterers");
  }
  if (!(layout.hull_fraction >= 0.0 && layout.hull_fraction <= 1.0)) {
    throw ParameterError("hull_fraction must lie in [0, 1]");
  }
  if (!(layout.base_rcs > 0.0)) throw ParameterError("base_rcs must be positive");

  ShipModel ship;
  ship.ship_id = std::move(ship_id);
  ship.length_m = length_m;
  ship.width_m = width_m;
  ship.base_rcs = layout.base_rcs;

  auto rng = make_engine(seed, 0, kShip);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double log_lo = std::log(0.3);
  auto reflectivity = [&] {
    return layout.base_rcs * std::exp(log_lo * (1.0 - unit(rng)));
  };

  ship.scatterers.reserve(n_scatterers);
  ship.scatterers.push_back({0.5 * length_m, 0.0, reflectivity()});
  ship.scatterers.push_back({-0.5 * length_m, 0.0, reflectivity()});
  const double perimeter = 2.0 * (length_m + width_m);
  for (std::size_t i = 2; i < n_scatterers; ++i) {
    Scatterer s;
    if (unit(rng) < layout.hull_fraction) {
      s = point_on_hull(perimeter * unit(rng), length_m, width_m);
    } else {
      s.along_m = length_m * (unit(rng) - 0.5);
      s.across_m = width_m * (unit(rng) - 0.5);
    }
    s.reflectivity = reflectivity();
    ship.scatterers.push_back(s);
  }
  return ship;
}

void SceneParams::validate() const {
  if (cells == 0) throw ConfigError("scene needs at least one cell");
  if (!(delta_r_m > 0.0)) throw ConfigError("delta_r_m must be positive");
  if (!(clutter_mean >= 0.0) || !std::isfinite(clutter_mean)) {
    throw ConfigError("clutter_mean must be non-negative");
  }
  if (!(speckle_sd >= 0.0) || !std::isfinite(speckle_sd)) {
    throw ConfigError("speckle_sd must be non-negative");
  }
}

void SceneParams::check_fits(const ShipModel& ship) const {
  const double diag = std::hypot(ship.length_m, ship.width_m);
  const auto span = static_cast<std::size_t>(std::ceil(diag / delta_r_m));
  if (target_start_cell + span >= cells) {
    throw ConfigError("ship '" + ship.ship_id + "' does not fit in " +
                      std::to_string(cells) + " cells starting at " +
                      std::to_string(target_start_cell));
  }
}

RangeProfile render_hrrp(const ShipModel& ship, double aspect_deg,
                         const SceneParams& scene, std::uint64_t draw) {
  scene.validate();
  ship.validate();
  scene.check_fits(ship);

  const double a = wrap_degrees(aspect_deg) * std::numbers::pi / 180.0;
  const double c = std::cos(a);
  const double s = std::sin(a);
  std::vector<double> offsets;
  offsets.reserve(ship.scatterers.size());
  for (const auto& sc : ship.scatterers) {
    offsets.push_back(sc.along_m * c + sc.across_m * s);
  }
  const double near = *std::min_element(offsets.begin(), offsets.end());

  RangeProfile rp;
  rp.cells.assign(scene.cells, 0.0);
  rp.aspect_deg = wrap_degrees(aspect_deg);
  rp.delta_r_m = scene.delta_r_m;
  rp.ship_id = ship.ship_id;
  rp.ship_length_m = ship.length_m;
  rp.ship_width_m = ship.width_m;

  auto speckle_rng = make_engine(scene.seed, draw, kSpeckle);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (std::size_t k = 0; k < ship.scatterers.size(); ++k) {
    const auto cell = scene.target_start_cell +
                      static_cast<std::size_t>(std::llround(
                          (offsets[k] - near) / scene.delta_r_m));
    if (cell >= scene.cells) {
      throw ConfigError("scatterer projects outside the range window");
    }
    double amp = ship.scatterers[k].reflectivity;
    if (scene.speckle_sd > 0.0) amp *= std::exp(scene.speckle_sd * gauss(speckle_rng));
    rp.cells[cell] += amp;
  }

  if (scene.clutter_mean > 0.0) {
    auto clutter_rng = make_engine(scene.seed, draw, kClutter);
    std::exponential_distribution<double> clutter(1.0 / scene.clutter_mean);
    for (auto& v : rp.cells) v += clutter(clutter_rng);
  }
  return rp;
}

Dataset render_fleet(std::span<const ShipModel> ships,
                     std::span<const double> aspects_deg,
                     std::size_t draws_per_aspect, const SceneParams& scene,
                     Execution exec) {
  scene.validate();
  for (const auto& ship : ships) {
    ship.validate();
    scene.check_fits(ship);
  }
  const std::size_t per_ship = aspects_deg.size() * draws_per_aspect;
  const std::size_t rows = ships.size() * per_ship;
  std::vector<RangeProfile> profiles(rows);

  auto render_row = [&](std::size_t row) {
    const std::size_t ship = row / per_ship;
    const std::size_t aspect = (row % per_ship) / draws_per_aspect;
    profiles[row] = render_hrrp(ships[ship], aspects_deg[aspect], scene, row);
  };
  if (exec == Execution::parallel) {
    const auto n = static_cast<std::ptrdiff_t>(rows);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t row = 0; row < n; ++row) {
      render_row(static_cast<std::size_t>(row));
    }
  } else {
    for (std::size_t row = 0; row < rows; ++row) render_row(row);
  }
  return Dataset(scene.cells, std::move(profiles));
}

}  // namespace hrrp
