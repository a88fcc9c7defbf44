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

#include "hrrp/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <vector>

#include "CLI11.hpp"
#include "hrrp/batch.hpp"
#include "hrrp/bench.hpp"
#include "hrrp/config.hpp"
#include "hrrp/io.hpp"
#include "hrrp/metrics.hpp"
#include "hrrp/mfn.hpp"
#include "hrrp/segmentation.hpp"
#include "hrrp/synth.hpp"

namespace hrrp::cli {
namespace {

namespace fs = std::filesystem;

struct SegFlags {
  CLI::Option* window = nullptr;
  CLI::Option* threshold = nullptr;
  CLI::Option* gap = nullptr;
};

struct DecompFlags {
  SegFlags seg;
  CLI::Option* sigma = nullptr;
  CLI::Option* decay = nullptr;
};

SegFlags add_seg_flags(CLI::App* app, SegmentationParams& p) {
  SegFlags f;
  f.window = app->add_option("--uniform-window", p.uniform_window,
                             "Box filter width in cells (odd)")
                 ->check(CLI::PositiveNumber)
                 ->check(CLI::Validator(
                     [](std::string& s) {
                       const auto v = std::strtoull(s.c_str(), nullptr, 10);
                       return v % 2 == 1 ? std::string{}
                                         : std::string("must be odd");
                     },
                     "ODD"));
  f.threshold = app->add_option("--threshold-frac", p.threshold_frac,
                                "Threshold as a fraction of the smoothed max")
                    ->check(CLI::Range(0.0, 1.0))
                    ->check(CLI::PositiveNumber);
  f.gap = app->add_option("--close-gap-cells", p.close_gap_cells,
                          "Fill interior gaps shorter than this many cells")
              ->check(CLI::PositiveNumber);
  return f;
}

DecompFlags add_decomp_flags(CLI::App* app, DecompositionParams& p) {
  DecompFlags f;
  f.seg = add_seg_flags(app, p.seg);
  f.sigma = app->add_option("--sigma", p.sigma,
                            "Gaussian standard deviation in cells")
                ->check(CLI::PositiveNumber);
  f.decay = app->add_option("--decay-rate", p.decay_rate,
                            "Distance decay of the soft mask")
                ->check(CLI::PositiveNumber);
  return f;
}

void write_cells_header(std::ostream& out, std::string_view prefix,
                        std::size_t cells) {
  out << prefix;
  for (std::size_t c = 0; c < cells; ++c) out << ",c" << c;
  out << '\n';
}

void write_row(std::ostream& out, std::span<const double> values) {
  for (const double v : values) out << ',' << format_double(v);
  out << '\n';
}

std::vector<std::pair<std::size_t, std::size_t>> load_pairs(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::string line;
  if (!std::getline(in, line) || (line != "i,j" && line != "i,j\r")) {
    throw ParseError(1, "pair list header must be 'i,j'");
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto cols = split_csv_line(line);
    if (cols.size() != 2) throw ParseError(line_no, "expected two columns");
    const double i = parse_double(cols[0], line_no);
    const double j = parse_double(cols[1], line_no);
    if (i < 0 || j < 0 || i != std::floor(i) || j != std::floor(j)) {
      throw ParseError(line_no, "pair indices must be non-negative integers");
    }
    pairs.emplace_back(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  }
  return pairs;
}

std::string opt_to_text(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string("nan");
}

// --------------------------------------------------------------------------

struct SynthCmd {
  std::string fleet;
  std::string out;
  std::uint64_t seed = 0;
  CLI::Option* seed_opt = nullptr;

  void run() const {
    auto cfg = load_fleet_config(fleet);
    if (seed_opt->count() > 0) cfg.scene.seed = seed;
    const auto ships = cfg.build_ships();
    Dataset ds = [&] {
      try {
        return render_fleet(ships, cfg.aspects_deg, cfg.draws_per_aspect, cfg.scene);
      } catch (const ParameterError& e) {
        throw ConfigError(e.what());
      }
    }();
    save_dataset(ds, out);
  }
};

struct SegmentCmd {
  std::string in;
  std::string out;
  SegmentationParams params;

  void run() const {
    const auto ds = load_dataset(in);
    write_file_atomically(out, [&](std::ostream& os) {
      write_cells_header(os, "row_index,ship_id,aspect_deg,lrp_cells,lrp_m,tlop_m",
                         ds.cells());
      for (std::size_t i = 0; i < ds.size(); ++i) {
        const auto& rp = ds[i];
        const auto mask = coi_mask(rp, params);
        os << i << ',' << rp.ship_id << ',' << format_double(rp.aspect_deg) << ','
           << mask.lrp_cells << ',' << format_double(lrp_meters(mask, rp.delta_r_m))
           << ','
           << format_double(tlop(rp.aspect_deg, rp.ship_length_m, rp.ship_width_m));
        for (const auto b : mask.bits) os << ',' << static_cast<int>(b);
        os << '\n';
      }
    });
  }
};

struct DecomposeCmd {
  std::string in;
  std::string out;
  DecompositionParams params;

  void run() const {
    const auto ds = load_dataset(in);
    const auto parts = decompose_batch(ds, params);
    write_file_atomically(out, [&](std::ostream& os) {
      write_cells_header(os, "row_index,component", ds.cells());
      for (std::size_t i = 0; i < parts.size(); ++i) {
        os << i << ",m";
        write_row(os, parts[i].comps.m);
        os << i << ",f";
        write_row(os, parts[i].comps.f);
        os << i << ",n";
        write_row(os, parts[i].comps.n);
      }
    });
  }
};

struct MetricsCmd {
  std::string in;
  std::string against;
  std::string pairs;
  std::string out;
  DecompositionParams params;

  void run() const {
    const auto a = load_dataset(in);
    const auto da = decompose_batch(a, params);
    std::vector<DecomposedProfile> db_storage;
    std::span<const DecomposedProfile> db = da;
    if (!against.empty()) {
      const auto b = load_dataset(against);
      if (b.cells() != a.cells()) {
        throw ConfigError("datasets have different cell counts");
      }
      db_storage = decompose_batch(b, params);
      db = db_storage;
    }
    const auto rows = pairs.empty()
                          ? pairwise_metrics(da, db)
                          : [&] {
                              const auto list = load_pairs(pairs);
                              try {
                                return pairwise_metrics(da, db, list);
                              } catch (const ParameterError& e) {
                                throw ConfigError(e.what());
                              }
                            }();
    write_file_atomically(out, [&](std::ostream& os) {
      os << "i,j";
      for (const auto k : kAllMetricKinds) os << ',' << to_string(k);
      os << '\n';
      for (const auto& r : rows) {
        os << r.i << ',' << r.j;
        for (const auto& v : r.values) os << ',' << opt_to_text(v);
        os << '\n';
      }
    });
  }
};

struct BenchCmd {
  std::string in;
  std::string config;
  std::string out;
  BenchConfig overrides;
  std::vector<double> sigmas;
  DecompFlags decomp_flags;
  CLI::Option* half_window = nullptr;
  CLI::Option* bin_width = nullptr;
  CLI::Option* n_pairs = nullptr;
  CLI::Option* n_per_ship = nullptr;
  CLI::Option* length_tol = nullptr;
  CLI::Option* min_length = nullptr;
  CLI::Option* pairing_seed = nullptr;
  CLI::Option* sigmas_opt = nullptr;

  BenchConfig effective(BenchConfig cfg) const {
    const auto& o = overrides;
    auto& d = cfg.decomposition;
    if (decomp_flags.sigma->count()) d.sigma = o.decomposition.sigma;
    if (decomp_flags.decay->count()) d.decay_rate = o.decomposition.decay_rate;
    if (decomp_flags.seg.window->count()) d.seg.uniform_window = o.decomposition.seg.uniform_window;
    if (decomp_flags.seg.threshold->count()) d.seg.threshold_frac = o.decomposition.seg.threshold_frac;
    if (decomp_flags.seg.gap->count()) d.seg.close_gap_cells = o.decomposition.seg.close_gap_cells;
    if (half_window->count()) cfg.half_window_deg = o.half_window_deg;
    if (bin_width->count()) cfg.pairing.bin_width_deg = o.pairing.bin_width_deg;
    if (n_pairs->count()) cfg.pairing.n_pairs_per_bin = o.pairing.n_pairs_per_bin;
    if (n_per_ship->count()) cfg.pairing.n_per_ship_per_bin = o.pairing.n_per_ship_per_bin;
    if (length_tol->count()) cfg.pairing.length_tol_m = o.pairing.length_tol_m;
    if (min_length->count()) cfg.pairing.min_length_m = o.pairing.min_length_m;
    if (pairing_seed->count()) cfg.pairing.pairing_seed = o.pairing.pairing_seed;
    if (sigmas_opt->count()) cfg.sigmas = sigmas;
    try {
      cfg.pairing.validate();
      cfg.decomposition.validate();
    } catch (const ParameterError& e) {
      throw ConfigError(e.what());
    }
    return cfg;
  }

  void run() const {
    const auto cfg = effective(load_bench_config(config));
    const auto ds = load_dataset(in);
    const auto pairs = select_pairs(ds, cfg.pairing);
    ProtocolOptions opts;
    opts.half_window_deg = cfg.half_window_deg;
    opts.bin_count = cfg.pairing.bin_count();
    const auto bins = discriminability(ds, pairs, cfg.decomposition, cfg.metrics, opts);
    std::vector<SweepPoint> sweep;
    if (!cfg.sigmas.empty()) {
      sweep = sigma_sweep(ds, pairs, cfg.decomposition, cfg.sigmas, cfg.metrics, opts);
    }

    const fs::path dir(out);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create '" + dir.string() + "': " + ec.message());
    write_file_atomically(dir / "bins.csv", [&](std::ostream& os) {
      os << "bin,metric,mean_top_same,mean_top_diff,relative_evolution,n\n";
      for (const auto& bin : bins) {
        for (const auto& st : bin.metrics) {
          os << bin.bin_index << ',' << to_string(st.spec.kind) << ','
             << opt_to_text(st.mean_top_same) << ',' << opt_to_text(st.mean_top_diff)
             << ',' << opt_to_text(st.relative_evolution) << ',' << st.n_comparisons()
             << '\n';
        }
      }
    });
    if (!sweep.empty()) {
      write_file_atomically(dir / "sweep.csv", [&](std::ostream& os) {
        os << "sigma,metric,mean_relative_evolution,populated_bins\n";
        for (const auto& point : sweep) {
          std::size_t populated = 0;
          for (const auto& b : point.bins) populated += b.n_pairs > 0;
          for (const auto& spec : cfg.metrics) {
            os << format_double(point.sigma) << ',' << to_string(spec.kind) << ','
               << opt_to_text(mean_relative_evolution(point.bins, spec.kind)) << ','
               << populated << '\n';
          }
        }
      });
    }
  }
};

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"HRRP mask/features/noise decomposition toolkit", "hrrp"};
  app.require_subcommand(1);

  SynthCmd synth;
  auto* synth_app = app.add_subcommand("synth", "Render a synthetic dataset from a fleet JSON");
  synth_app->add_option("--fleet", synth.fleet, "Fleet configuration (JSON)")->required();
  synth_app->add_option("--out", synth.out, "Dataset CSV to write")->required();
  synth.seed_opt = synth_app->add_option("--seed", synth.seed, "Override the scene seed");

  SegmentCmd segment;
  auto* segment_app = app.add_subcommand("segment", "Cells of interest, LRP and TLOP per profile");
  segment_app->add_option("--in", segment.in, "Dataset CSV")->required();
  segment_app->add_option("--out", segment.out, "Segmentation CSV to write")->required();
  add_seg_flags(segment_app, segment.params);

  DecomposeCmd decompose;
  auto* decompose_app = app.add_subcommand("decompose", "MFN decomposition of every profile");
  decompose_app->add_option("--in", decompose.in, "Dataset CSV")->required();
  decompose_app->add_option("--out", decompose.out, "Component CSV to write")->required();
  add_decomp_flags(decompose_app, decompose.params);

  MetricsCmd metrics;
  auto* metrics_app = app.add_subcommand("metrics", "Pairwise mse, cosine, mse_f and cos_f");
  metrics_app->add_option("--in", metrics.in, "Dataset CSV (rows i)")->required();
  metrics_app->add_option("--against", metrics.against,
                          "Second dataset CSV (rows j); defaults to --in");
  metrics_app->add_option("--pairs", metrics.pairs, "CSV with header i,j listing pairs");
  metrics_app->add_option("--out", metrics.out, "Metric CSV to write")->required();
  add_decomp_flags(metrics_app, metrics.params);

  BenchCmd bench;
  auto* bench_app = app.add_subcommand("bench", "Same-ship vs different-ship discriminability");
  bench_app->add_option("--in", bench.in, "Dataset CSV")->required();
  bench_app->add_option("--config", bench.config, "Benchmark configuration (JSON)")->required();
  bench_app->add_option("--out", bench.out, "Output directory")->required();
  bench.decomp_flags = add_decomp_flags(bench_app, bench.overrides.decomposition);
  auto& po = bench.overrides.pairing;
  bench.half_window = bench_app->add_option("--half-window-deg", bench.overrides.half_window_deg)
                          ->check(CLI::PositiveNumber);
  bench.bin_width = bench_app->add_option("--bin-width-deg", po.bin_width_deg)
                        ->check(CLI::PositiveNumber);
  bench.n_pairs = bench_app->add_option("--n-pairs-per-bin", po.n_pairs_per_bin)
                      ->check(CLI::PositiveNumber);
  bench.n_per_ship = bench_app->add_option("--n-per-ship-per-bin", po.n_per_ship_per_bin)
                         ->check(CLI::PositiveNumber);
  bench.length_tol = bench_app->add_option("--length-tol-m", po.length_tol_m)
                         ->check(CLI::NonNegativeNumber);
  bench.min_length = bench_app->add_option("--min-length-m", po.min_length_m)
                         ->check(CLI::NonNegativeNumber);
  bench.pairing_seed = bench_app->add_option("--pairing-seed", po.pairing_seed);
  bench.sigmas_opt = bench_app->add_option("--sigmas", bench.sigmas, "Sigma sweep values")
                         ->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*synth_app) synth.run();
    if (*segment_app) segment.run();
    if (*decompose_app) decompose.run();
    if (*metrics_app) metrics.run();
    if (*bench_app) bench.run();
  } catch (const std::exception& e) {
    err << "hrrp: error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitOk;
}

}  // namespace hrrp::cli
