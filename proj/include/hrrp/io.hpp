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

// Plain-text dataset format and file helpers.
//
// A dataset file is CSV with the header
//
//   ship_id,aspect_deg,delta_r_m,ship_length_m,ship_width_m,c0,c1,...,c{s-1}
//
// and one profile per following line. The cell count s is inferred from the
// header. Numbers are written in shortest round-trip form, so a save/load
// cycle reproduces every double exactly.

#ifndef HRRP_IO_HPP_
#define HRRP_IO_HPP_

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hrrp/types.hpp"

namespace hrrp {

Dataset read_dataset(std::istream& in);
void write_dataset(const Dataset& ds, std::ostream& out);

/// Throws IoError if the file cannot be opened, ParseError on bad content.
Dataset load_dataset(const std::filesystem::path& path);
/// Writes through a temporary sibling file and renames it into place.
void save_dataset(const Dataset& ds, const std::filesystem::path& path);

/// Shortest decimal text that parses back to exactly `v`. NaN is "nan".
std::string format_double(double v);

/// Strict double parse of the whole field; throws ParseError at `line`.
double parse_double(std::string_view field, std::size_t line);

std::vector<std::string_view> split_csv_line(std::string_view line);

/// Runs `writer` against a temporary file next to `path`, then renames the
/// temporary over `path`. On any exception the temporary is removed and
/// `path` is left untouched.
void write_file_atomically(const std::filesystem::path& path,
                           const std::function<void(std::ostream&)>& writer);

}  // namespace hrrp

#endif  // HRRP_IO_HPP_
