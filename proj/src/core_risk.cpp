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

#include "mnrisk/core_risk.hpp"

#include "mnrisk/error.hpp"

#include <algorithm>

namespace mnrisk {

double mle_squared_risk_at(double squared_norm, std::uint64_t n) {
    if (n == 0) throw DomainError("sample size n must be at least 1");
    return std::max(0.0, 1.0 - squared_norm) / static_cast<double>(n);
}

double bayes_squared_risk_at(double squared_norm, std::size_t k, std::uint64_t n,
                             double concentration) {
    if (n == 0) throw DomainError("sample size n must be at least 1");
    const auto nd = static_cast<double>(n);
    const auto kd = static_cast<double>(k);
    const double c = concentration;
    // (n - kC^2 + (k^2C^2 - n)|t|^2) / (n + kC)^2, regrouped so that each
    // summand is non-negative on the simplex (|t|^2 in [1/k, 1]).
    const double variance = nd * std::max(0.0, 1.0 - squared_norm);
    const double bias = c * c * kd * std::max(0.0, kd * squared_norm - 1.0);
    const double denom = nd + kd * c;
    return (variance + bias) / (denom * denom);
}

double mle_squared_risk(const ProbVector& theta, std::uint64_t n) {
    return mle_squared_risk_at(theta.squared_norm(), n);
}

double bayes_squared_risk(const ProbVector& theta, std::uint64_t n, const SymmetricPrior& prior) {
    const std::size_t k = theta.size();
    return bayes_squared_risk_at(theta.squared_norm(), k, n, prior.concentration(k, n));
}

double dominance_threshold(std::size_t k, std::uint64_t n, double concentration) {
    if (k < 2) throw DomainError("cell count k must be at least 2");
    if (n == 0) throw DomainError("sample size n must be at least 1");
    if (!(concentration > 0.0)) throw DomainError("prior concentration must be positive");
    const auto nd = static_cast<double>(n);
    const auto kd = static_cast<double>(k);
    const double c = concentration;
    return (2.0 * nd + (nd + kd) * c) / (2.0 * nd + (kd + kd * nd) * c);
}

double dominance_threshold(const ModelDims& dims, const SymmetricPrior& prior) {
    return dominance_threshold(dims.k(), dims.n(), prior.concentration(dims.k(), dims.n()));
}

RiskComparison compare_at(const ProbVector& theta, const ModelDims& dims, const SymmetricPrior& prior) {
    if (theta.size() != dims.k()) {
        throw DomainError("theta has " + std::to_string(theta.size()) + " cells but k = " +
                          std::to_string(dims.k()));
    }
    const double c = prior.concentration(dims.k(), dims.n());
    RiskComparison out;
    out.squared_norm = theta.squared_norm();
    out.mle_risk = mle_squared_risk_at(out.squared_norm, dims.n());
    out.bayes_risk = bayes_squared_risk_at(out.squared_norm, dims.k(), dims.n(), c);
    out.threshold = dominance_threshold(dims.k(), dims.n(), c);
    out.mle_wins = mle_wins(out.squared_norm, out.threshold);
    return out;
}

double uniform_prior_margin(double squared_norm, const ModelDims& dims) {
    const auto n = static_cast<double>(dims.n());
    const auto k = static_cast<double>(dims.k());
    return -3.0 * n - k + (n * k + 2.0 * n + k) * squared_norm;
}

double scaled_prior_margin(double squared_norm, const ModelDims& dims, double c) {
    const auto n = static_cast<double>(dims.n());
    const auto k = static_cast<double>(dims.k());
    return -c * n / k - 2.0 * n - c + (2.0 * n + c + n * c) * squared_norm;
}

double constant_prior_margin(double squared_norm, const ModelDims& dims, double c) {
    const auto n = static_cast<double>(dims.n());
    const auto k = static_cast<double>(dims.k());
    return -2.0 * n - c * (k + n) + (2.0 * n + c * (k + k * n)) * squared_norm;
}

} // namespace mnrisk
