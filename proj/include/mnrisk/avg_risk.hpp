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

namespace mnrisk {

// Averages are taken with respect to the (k-1)-dimensional volume measure
// on E_k, i.e. the uniform distribution on the simplex.

/// Mean of |theta|^2 over E_k: 2 / (k + 1).
double simplex_mean_squared_norm(std::size_t k);

/// Integral of |theta|^2 over E_k: 2k sqrt(k) / (k+1)!.
double simplex_squared_norm_integral(std::size_t k);

/// (k - 1) / (n (k + 1)).
double mle_avg_risk(const ModelDims& dims);

/// (k - 1)(kC^2 + n) / ((kC + n)^2 (k + 1)).
double bayes_avg_risk(const ModelDims& dims, const SymmetricPrior& prior);

/// (mle_avg_risk - bayes_avg_risk) / mle_avg_risk = 1 - n(kC^2 + n)/(kC + n)^2.
/// Maximized at C = 1 where it equals k / (k + n); negative for large C.
double proportional_decrease(const ModelDims& dims, const SymmetricPrior& prior);

} // namespace mnrisk
