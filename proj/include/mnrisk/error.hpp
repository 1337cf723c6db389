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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mnrisk {

/// Raised when an argument lies outside the domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The requested dimension has no closed form; callers should fall back to
/// the corner-cutting bound or Monte Carlo.
class UnsupportedDimension : public DomainError {
public:
    using DomainError::DomainError;
};

/// Malformed input data. Carries the 1-based data row that failed (0 for
/// file-level problems such as a bad header or a bad total).
class IngestError : public std::runtime_error {
public:
    IngestError(std::size_t row, const std::string& what)
        : std::runtime_error(row == 0 ? what : "row " + std::to_string(row) + ": " + what),
          row_(row) {}

    std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

} // namespace mnrisk
