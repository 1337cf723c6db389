// Copyright 2026 The mnrisk Authors
//
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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace mnrisk::cli {

/// Seed used when neither --seed nor MNRISK_SEED is given.
inline constexpr std::uint64_t kDefaultSeed = 20250417;

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kComputeError = 1;
inline constexpr int kUsageError = 2;

/// MNRISK_SEED if set and valid, otherwise kDefaultSeed.
std::uint64_t default_seed();

/// Runs the tool on `args` (without the program name). Results go to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mnrisk::cli
