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

#ifndef HRRP_CLI_HPP_
#define HRRP_CLI_HPP_

#include <iosfwd>
#include <span>
#include <string>

namespace hrrp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Entry point of the `hrrp` tool. `args[0]` is the program name.
/// Subcommands: synth, segment, decompose, metrics, bench.
int run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err);

}  // namespace hrrp::cli

#endif  // HRRP_CLI_HPP_
