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

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hrrp {
namespace {

using nlohmann::json;

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
}

template <typename T>
void read_opt(const json& obj, const char* key, T& out) {
  if (!obj.contains(key)) return;
  try {
    out = obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("field '") + key + "': " + e.what());
  }
}

void read_opt(const json& obj, const char* key, std::size_t& out) {
  if (!obj.contains(key)) return;
  const auto& v = obj.at(key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    throw ConfigError(std::string("field '") + key +
                      "' must be a non-negative integer");
  }
  out = v.get<std::size_t>();
}

template <typename T>
T read_req(const json& obj, const char* key) {
  if (!obj.contains(key)) {
    throw ConfigError(std::string("missing required field '") + key + "'");
  }
  T out{};
  read_opt(obj, key, out);
  return out;
}

void reject_unknown(const json& obj, std::initializer_list<std::string_view> known,
                    std::string_view where) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (auto k : known) ok = ok || key == k;
    if (!ok) {
      throw ConfigError("unknown field '" + key + "' in " + std::string(where));
    }
  }
}

const json& object_at(const json& obj, const char* key) {
  const auto& v = obj.at(key);
  if (!v.is_object()) throw ConfigError(std::string("'") + key + "' must be an object");
  return v;
}

// Rethrows library parameter errors as configuration errors.
template <typename Fn>
void checked(Fn&& fn) {
  try {
    fn();
  } catch (const ParameterError& e) {
    throw ConfigError(e.what());
  }
}

std::vector<double> parse_aspects(const json& root) {
  if (root.contains("aspects_deg")) {
    std::vector<double> out;
    read_opt(root, "aspects_deg", out);
    return out;
  }
  if (root.contains("aspects")) {
    const auto& a = object_at(root, "aspects");
    reject_unknown(a, {"start", "stop", "step"}, "aspects");
    double start = 0.0, stop = 360.0;
    read_opt(a, "start", start);
    read_opt(a, "stop", stop);
    const double step = read_req<double>(a, "step");
    if (!(step > 0.0)) throw ConfigError("aspects.step must be positive");
    std::vector<double> out;
    for (std::size_t k = 0;; ++k) {
      const double v = start + static_cast<double>(k) * step;
      if (v >= stop - 1e-9) break;
      out.push_back(v);
    }
    return out;
  }
  throw ConfigError("fleet config needs 'aspects_deg' or 'aspects'");
}

}  // namespace

std::vector<ShipModel> FleetConfig::build_ships() const {
  std::vector<ShipModel> out;
  out.reserve(ships.size());
  for (const auto& s : ships) {
    checked([&] {
      out.push_back(make_ship(s.id, s.length_m, s.width_m, s.n_scatterers,
                              s.seed, s.layout));
    });
  }
  return out;
}

FleetConfig parse_fleet_config(std::string_view json_text) {
  const json root = parse_json(json_text);
  if (!root.is_object()) throw ConfigError("fleet config must be an object");
  reject_unknown(root, {"scene", "ships", "aspects_deg", "aspects", "draws_per_aspect"},
                 "fleet config");
  FleetConfig cfg;
  if (root.contains("scene")) {
    const auto& sc = object_at(root, "scene");
    reject_unknown(sc, {"cells", "delta_r_m", "target_start_cell", "clutter_mean",
                        "speckle_sd", "seed"},
                   "scene");
    read_opt(sc, "cells", cfg.scene.cells);
    read_opt(sc, "delta_r_m", cfg.scene.delta_r_m);
    read_opt(sc, "target_start_cell", cfg.scene.target_start_cell);
    read_opt(sc, "clutter_mean", cfg.scene.clutter_mean);
    read_opt(sc, "speckle_sd", cfg.scene.speckle_sd);
    read_opt(sc, "seed", cfg.scene.seed);
  }
  cfg.scene.validate();

  if (!root.contains("ships") || !root.at("ships").is_array()) {
    throw ConfigError("fleet config needs a 'ships' array");
  }
  for (const auto& s : root.at("ships")) {
    if (!s.is_object()) throw ConfigError("each ship must be an object");
    reject_unknown(s, {"id", "length_m", "width_m", "n_scatterers", "seed",
                       "hull_fraction", "base_rcs"},
                   "ship");
    ShipSpec spec;
    spec.id = read_req<std::string>(s, "id");
    spec.length_m = read_req<double>(s, "length_m");
    spec.width_m = read_req<double>(s, "width_m");
    spec.n_scatterers = read_req<std::size_t>(s, "n_scatterers");
    read_opt(s, "seed", spec.seed);
    read_opt(s, "hull_fraction", spec.layout.hull_fraction);
    read_opt(s, "base_rcs", spec.layout.base_rcs);
    if (spec.id.empty() || spec.id.find_first_of(",\r\n") != std::string::npos) {
      throw ConfigError("ship id must be non-empty and contain no commas");
    }
    cfg.ships.push_back(std::move(spec));
  }
  cfg.aspects_deg = parse_aspects(root);
  read_opt(root, "draws_per_aspect", cfg.draws_per_aspect);
  if (cfg.draws_per_aspect == 0) throw ConfigError("draws_per_aspect must be >= 1");
  return cfg;
}

FleetConfig load_fleet_config(const std::filesystem::path& path) {
  return parse_fleet_config(read_text(path));
}

BenchConfig parse_bench_config(std::string_view json_text) {
  const json root = parse_json(json_text);
  if (!root.is_object()) throw ConfigError("bench config must be an object");
  reject_unknown(root, {"pairing", "decomposition", "metrics", "sigmas", "half_window_deg"},
                 "bench config");
  BenchConfig cfg;
  if (root.contains("pairing")) {
    const auto& p = object_at(root, "pairing");
    reject_unknown(p, {"bin_width_deg", "n_pairs_per_bin", "n_per_ship_per_bin",
                       "length_tol_m", "min_length_m", "pairing_seed"},
                   "pairing");
    read_opt(p, "bin_width_deg", cfg.pairing.bin_width_deg);
    read_opt(p, "n_pairs_per_bin", cfg.pairing.n_pairs_per_bin);
    read_opt(p, "n_per_ship_per_bin", cfg.pairing.n_per_ship_per_bin);
    read_opt(p, "length_tol_m", cfg.pairing.length_tol_m);
    read_opt(p, "min_length_m", cfg.pairing.min_length_m);
    read_opt(p, "pairing_seed", cfg.pairing.pairing_seed);
  }
  if (root.contains("decomposition")) {
    const auto& d = object_at(root, "decomposition");
    reject_unknown(d, {"sigma", "decay_rate", "uniform_window", "threshold_frac",
                       "close_gap_cells"},
                   "decomposition");
    read_opt(d, "sigma", cfg.decomposition.sigma);
    read_opt(d, "decay_rate", cfg.decomposition.decay_rate);
    read_opt(d, "uniform_window", cfg.decomposition.seg.uniform_window);
    read_opt(d, "threshold_frac", cfg.decomposition.seg.threshold_frac);
    read_opt(d, "close_gap_cells", cfg.decomposition.seg.close_gap_cells);
  }
  if (root.contains("metrics")) {
    std::vector<std::string> names;
    read_opt(root, "metrics", names);
    for (const auto& n : names) {
      const auto kind = parse_metric_kind(n);
      if (!kind) throw ConfigError("unknown metric '" + n + "'");
      cfg.metrics.push_back(MetricSpec::of(*kind));
    }
  } else {
    for (auto k : {MetricKind::mse, MetricKind::cosine, MetricKind::mse_f,
                   MetricKind::cos_f}) {
      cfg.metrics.push_back(MetricSpec::of(k));
    }
  }
  read_opt(root, "sigmas", cfg.sigmas);
  read_opt(root, "half_window_deg", cfg.half_window_deg);

  checked([&] {
    cfg.pairing.validate();
    cfg.decomposition.validate();
    for (const double s : cfg.sigmas) {
      if (!(s > 0.0) || !std::isfinite(s)) throw ParameterError("sigmas must be positive");
    }
    if (!(cfg.half_window_deg > 0.0)) {
      throw ParameterError("half_window_deg must be positive");
    }
  });
  return cfg;
}

BenchConfig load_bench_config(const std::filesystem::path& path) {
  return parse_bench_config(read_text(path));
}

}  // namespace hrrp
