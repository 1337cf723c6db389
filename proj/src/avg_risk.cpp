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

#include "mnrisk/avg_risk.hpp"

#include "mnrisk/error.hpp"

#include <cmath>

namespace mnrisk {

double simplex_mean_squared_norm(std::size_t k) {
    if (k < 2) throw DomainError("simplex needs k >= 2");
    return 2.0 / (static_cast<double>(k) + 1.0);
}

double simplex_squared_norm_integral(std::size_t k) {
    if (k < 2) throw DomainError("simplex needs k >= 2");
    const auto kd = static_cast<double>(k);
    return std::exp(std::log(2.0 * kd) + 0.5 * std::log(kd) - std::lgamma(kd + 2.0));
}

double mle_avg_risk(const ModelDims& dims) {
    const auto k = static_cast<double>(dims.k());
    const auto n = static_cast<double>(dims.n());
    return (k - 1.0) / (n * (k + 1.0));
}

double bayes_avg_risk(const ModelDims& dims, const SymmetricPrior& prior) {
    const auto k = static_cast<double>(dims.k());
    const auto n = static_cast<double>(dims.n());
    const double c = prior.concentration(dims.k(), dims.n());
    const double denom = k * c + n;
    return (k - 1.0) * (k * c * c + n) / (denom * denom * (k + 1.0));
}

double proportional_decrease(const ModelDims& dims, const SymmetricPrior& prior) {
    const auto k = static_cast<double>(dims.k());
    const auto n = static_cast<double>(dims.n());
    const double c = prior.concentration(dims.k(), dims.n());
    const double denom = k * c + n;
    // (kC + n)^2 - n(kC^2 + n) = kC(kC + 2n - nC); no cancellation as C -> 0.
    return k * c * (k * c + 2.0 * n - n * c) / (denom * denom);
}

} // namespace mnrisk
