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

#ifndef HRRP_TYPES_HPP_
#define HRRP_TYPES_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hrrp {

// ---------------------------------------------------------------------------
// Error types. Every failure in the library is reported with one of these.

/// Malformed input file; carries the 1-based line number of the offending row.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A numeric argument violates its documented range.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The input has no structure to operate on (e.g. an empty COI mask).
class DegenerateInputError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A similarity metric is undefined for this pair of inputs.
class UndefinedMetricError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Invalid fleet / benchmark / scene configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------

using Bits = std::vector<std::uint8_t>;

/// Batch kernels take this to select the OpenMP path or the plain serial
/// loop kept as the reference.
enum class Execution { serial, parallel };

/// One high-resolution range profile: non-negative echo amplitude per range
/// cell (cell 0 is the nearest range) plus acquisition metadata.
struct RangeProfile {
  std::vector<double> cells;
  double aspect_deg = 0.0;
  double delta_r_m = 1.0;
  std::string ship_id;
  double ship_length_m = 1.0;
  double ship_width_m = 1.0;

  /// Throws ParameterError when any field invariant is broken.
  void validate() const;
  std::size_t size() const noexcept { return cells.size(); }
};

/// Binary mask of the cells attributed to the target, and the length of the
/// first connected object in it.
struct CoiMask {
  Bits bits;
  std::size_t lrp_cells = 0;

  static CoiMask from_bits(Bits bits);
  bool empty() const noexcept { return lrp_cells == 0; }
  std::size_t count() const noexcept;
};

/// Length of the first maximal run of non-zero entries, scanning from 0.
std::size_t first_run_length(std::span<const std::uint8_t> bits) noexcept;

/// Mask / features / noise split of one profile.
struct MfnComponents {
  std::vector<double> m;
  std::vector<double> f;
  std::vector<double> n;
  double sigma = 0.5;
};

/// Ordered collection of profiles that share one cell count.
class Dataset {
 public:
  /// Throws ParameterError if cells == 0 or a profile is invalid / has a
  /// different length.
  Dataset(std::size_t cells, std::vector<RangeProfile> profiles);

  std::size_t cells() const noexcept { return cells_; }
  std::size_t size() const noexcept { return profiles_.size(); }
  bool empty() const noexcept { return profiles_.empty(); }
  const RangeProfile& operator[](std::size_t i) const { return profiles_[i]; }
  std::span<const RangeProfile> profiles() const noexcept { return profiles_; }

  auto begin() const noexcept { return profiles_.begin(); }
  auto end() const noexcept { return profiles_.end(); }

 private:
  std::size_t cells_;
  std::vector<RangeProfile> profiles_;
};

}  // namespace hrrp

#endif  // HRRP_TYPES_HPP_
