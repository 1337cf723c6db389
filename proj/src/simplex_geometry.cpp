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

#include "mnrisk/simplex_geometry.hpp"

#include "mnrisk/core_risk.hpp"
#include "mnrisk/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace mnrisk {

RegionSpec::RegionSpec(std::size_t k_, double R_) : k(k_), R(R_) {
    if (k < 2) throw DomainError("region needs k >= 2");
    if (!std::isfinite(R)) throw DomainError("region threshold must be finite");
}

double simplex_volume(std::size_t k, double r) {
    if (k < 1) throw DomainError("simplex_volume needs k >= 1");
    if (!(r > 0.0)) throw DomainError("simplex scale must be positive");
    const auto kd = static_cast<double>(k);
    return std::exp(kd * std::log(r) - std::lgamma(kd + 1.0));
}

double simplex_surface_area(std::size_t k, double r) {
    if (k < 2) throw DomainError("simplex_surface_area needs k >= 2");
    if (!(r > 0.0)) throw DomainError("simplex scale must be positive");
    const auto kd = static_cast<double>(k);
    return std::exp((kd - 1.0) * std::log(r) + 0.5 * std::log(kd) - std::lgamma(kd));
}

double sphere_distance(std::size_t k, double R) {
    const double inv_k = 1.0 / static_cast<double>(k);
    if (R < inv_k) throw DomainError("R < 1/k: the region is empty");
    return std::sqrt(R - inv_k);
}

double boundary_distance(std::size_t k, std::size_t j) {
    if (k < 2 || j < 1 || j >= k) {
        throw DomainError("boundary index j must satisfy 1 <= j <= k-1");
    }
    const auto kd = static_cast<double>(k);
    const auto jd = static_cast<double>(j);
    return std::sqrt(jd / (kd * (kd - jd)));
}

namespace {

double proportion_k2(double R) {
    if (R <= 0.5) return 0.0;
    if (R >= 1.0) return 1.0;
    return std::clamp(std::sqrt(2.0 * R - 1.0), 0.0, 1.0);
}

double proportion_k3(double R) {
    constexpr double third = 1.0 / 3.0;
    if (R <= third) return 0.0;
    if (R >= 1.0) return 1.0;
    if (R <= 0.5) {
        // Disc of radius sphere_distance inside the triangle.
        return 2.0 * std::numbers::sqrt3 / 3.0 * std::numbers::pi * (R - third);
    }
    // Disc clipped by the three edges: three triangles to the edge chords
    // plus three circular sectors toward the corners.
    const double s = std::sqrt(2.0 * R - 1.0);
    const double cos_angle = (0.25 * (2.0 * R - 1.0) + 0.5 * s - 1.0 / 12.0) / (R - third);
    const double angle = std::acos(std::clamp(cos_angle, -1.0, 1.0));
    return std::min(1.0, s + std::numbers::sqrt3 * (R - third) * angle);
}

} // namespace

double region_proportion_exact(const RegionSpec& region) {
    switch (region.k) {
    case 2: return proportion_k2(region.R);
    case 3: return proportion_k3(region.R);
    default:
        throw UnsupportedDimension("no closed-form region volume for k = " + std::to_string(region.k) +
                                   "; use the corner-cutting bound (R in [1/2, 1)) or Monte Carlo");
    }
}

double corner_mass(std::size_t k, double R) {
    const double ratio = (R - std::sqrt(std::max(0.0, 2.0 * R - 1.0))) / 2.0;
    if (ratio <= 0.0) return 0.0;
    const auto kd = static_cast<double>(k);
    return std::exp(std::log(kd) + 0.5 * (kd - 1.0) * std::log(ratio));
}

double region_proportion_lower_bound(const RegionSpec& region) {
    if (region.k < 3) throw DomainError("corner-cutting bound needs k >= 3");
    if (region.R < 0.5 || region.R >= 1.0) {
        throw DomainError("corner-cutting bound only holds for R in [1/2, 1)");
    }
    return std::max(0.0, 1.0 - corner_mass(region.k, region.R));
}

double mle_region_upper_bound(const ModelDims& dims, const SymmetricPrior& prior) {
    if (dims.k() < 3) throw DomainError("corner-cutting bound needs k >= 3");
    const double R = dominance_threshold(dims, prior);
    if (R < 0.5 || R >= 1.0) {
        throw DomainError("dominance threshold R = " + std::to_string(R) +
                          " is outside [1/2, 1); no bound available, use Monte Carlo");
    }
    return std::min(1.0, corner_mass(dims.k(), R));
}

} // namespace mnrisk
