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

#include "mnrisk/prob_vector.hpp"

#include <cstddef>

namespace mnrisk {

/// The sub-level set {theta in E_k : |theta|^2 <= R} of the simplex, i.e.
/// where the posterior mean beats the MLE when R is the dominance threshold.
struct RegionSpec {
    RegionSpec(std::size_t k, double R);

    std::size_t k;
    double R;
};

/// Volume r^k / k! of the corner simplex {x >= 0, sum x <= r} in R^k.
double simplex_volume(std::size_t k, double r);
/// (k-1)-volume r^(k-1) sqrt(k) / (k-1)! of the face {x >= 0, sum x = r}.
double simplex_surface_area(std::size_t k, double r);

/// Distance from the barycenter to the sphere |theta|^2 = R within E_k.
/// Throws DomainError for R < 1/k (the region is empty).
double sphere_distance(std::size_t k, double R);

/// Distance from the barycenter to the nearest point of the boundary face
/// with j zero coordinates, 1 <= j <= k-1. Strictly increasing in j.
double boundary_distance(std::size_t k, std::size_t j);

/// Exact vol(region) / vol(E_k) for k in {2, 3}. Throws UnsupportedDimension
/// for other k.
double region_proportion_exact(const RegionSpec& region);

/// Corner-cutting lower bound on vol(region) / vol(E_k), valid for k >= 3
/// and R in [1/2, 1). Throws DomainError outside that range.
double region_proportion_lower_bound(const RegionSpec& region);

/// Complement of the lower bound at the dominance threshold: an upper bound
/// on the fraction of E_k where the MLE is at least as good. Requires the
/// threshold to fall in [1/2, 1); otherwise Monte Carlo is the only option.
double mle_region_upper_bound(const ModelDims& dims, const SymmetricPrior& prior);

/// k * ((R - sqrt(2R - 1)) / 2)^((k-1)/2) without range checks on R beyond
/// R in [1/2, 1]; shared by the two functions above.
double corner_mass(std::size_t k, double R);

} // namespace mnrisk
