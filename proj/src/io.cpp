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

#include "hrrp/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <system_error>

namespace hrrp {
namespace {

constexpr std::array<std::string_view, 5> kMetaColumns = {
    "ship_id", "aspect_deg", "delta_r_m", "ship_length_m", "ship_width_m"};

std::string_view strip_cr(std::string_view s) {
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  return s;
}

std::size_t parse_header(std::string_view header) {
  const auto cols = split_csv_line(strip_cr(header));
  if (cols.size() <= kMetaColumns.size()) {
    throw ParseError(1, "header must list metadata columns and at least c0");
  }
  for (std::size_t i = 0; i < kMetaColumns.size(); ++i) {
    if (cols[i] != kMetaColumns[i]) {
      throw ParseError(1, "expected header column '" +
                              std::string(kMetaColumns[i]) + "', found '" +
                              std::string(cols[i]) + "'");
    }
  }
  const std::size_t cells = cols.size() - kMetaColumns.size();
  for (std::size_t c = 0; c < cells; ++c) {
    if (cols[kMetaColumns.size() + c] != "c" + std::to_string(c)) {
      throw ParseError(1, "expected header column 'c" + std::to_string(c) +
                              "'");
    }
  }
  return cells;
}

}  // namespace

std::vector<std::string_view> split_csv_line(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

double parse_double(std::string_view field, std::size_t line) {
  double v = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  if (!field.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (field.empty() || ec != std::errc{} || ptr != last) {
    throw ParseError(line, "not a number: '" + std::string(field) + "'");
  }
  return v;
}

Dataset read_dataset(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, "missing header");
  const std::size_t cells = parse_header(line);
  const std::size_t expected_cols = kMetaColumns.size() + cells;

  std::vector<RangeProfile> profiles;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text = strip_cr(line);
    if (text.empty()) continue;
    const auto cols = split_csv_line(text);
    if (cols.size() != expected_cols) {
      throw ParseError(line_no, "expected " + std::to_string(expected_cols) +
                                    " columns, found " +
                                    std::to_string(cols.size()));
    }
    RangeProfile rp;
    rp.ship_id = std::string(cols[0]);
    rp.aspect_deg = parse_double(cols[1], line_no);
    rp.delta_r_m = parse_double(cols[2], line_no);
    rp.ship_length_m = parse_double(cols[3], line_no);
    rp.ship_width_m = parse_double(cols[4], line_no);
    rp.cells.reserve(cells);
    for (std::size_t c = 0; c < cells; ++c) {
      const double a = parse_double(cols[kMetaColumns.size() + c], line_no);
      if (a < 0.0) {
        throw ParseError(line_no,
                         "negative amplitude in c" + std::to_string(c));
      }
      rp.cells.push_back(a);
    }
    try {
      rp.validate();
    } catch (const ParameterError& e) {
      throw ParseError(line_no, e.what());
    }
    profiles.push_back(std::move(rp));
  }
  return Dataset(cells, std::move(profiles));
}

void write_dataset(const Dataset& ds, std::ostream& out) {
  for (const auto col : kMetaColumns) out << col << ',';
  for (std::size_t c = 0; c < ds.cells(); ++c) {
    out << 'c' << c << (c + 1 == ds.cells() ? '\n' : ',');
  }
  for (const auto& rp : ds) {
    out << rp.ship_id << ',' << format_double(rp.aspect_deg) << ','
        << format_double(rp.delta_r_m) << ','
        << format_double(rp.ship_length_m) << ','
        << format_double(rp.ship_width_m);
    for (const double a : rp.cells) out << ',' << format_double(a);
    out << '\n';
  }
}

Dataset load_dataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return read_dataset(in);
}

void save_dataset(const Dataset& ds, const std::filesystem::path& path) {
  write_file_atomically(path,
                        [&](std::ostream& out) { write_dataset(ds, out); });
}

void write_file_atomically(const std::filesystem::path& path,
                           const std::function<void(std::ostream&)>& writer) {
  auto tmp = path;
  tmp += ".tmp";
  try {
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) {
        throw IoError("cannot open '" + tmp.string() + "' for writing");
      }
      writer(out);
      out.flush();
      if (!out) throw IoError("write failed for '" + tmp.string() + "'");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
      throw IoError("cannot rename '" + tmp.string() + "' to '" +
                    path.string() + "': " + ec.message());
    }
  } catch (...) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw;
  }
}

}  // namespace hrrp
