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

#include <cstdio>
#include <string>

namespace mnrisk {

/// CSV cell for a real value: 6 significant digits, trailing zeros kept.
inline std::string csv_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%#.6g", x);
    return buf;
}

} // namespace mnrisk
