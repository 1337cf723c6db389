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
#include <cstdint>

namespace mnrisk {

/// Pointwise comparison of the two estimators' squared-error risks.
struct RiskComparison {
    double mle_risk = 0.0;
    double bayes_risk = 0.0;
    double squared_norm = 0.0;
    /// Squared-norm threshold above which the MLE is at least as good.
    double threshold = 0.0;
    /// Ties go to the MLE.
    bool mle_wins = false;
};

// Both risks are affine in |theta|^2, so every entry point below reduces to
// the *_at(squared_norm, ...) forms.

double mle_squared_risk_at(double squared_norm, std::uint64_t n);
double bayes_squared_risk_at(double squared_norm, std::size_t k, std::uint64_t n,
                             double concentration);

/// E|theta_hat - theta|^2 for the cell-frequency estimator n_i / n.
double mle_squared_risk(const ProbVector& theta, std::uint64_t n);

/// E|d_B - theta|^2 for the posterior mean (n_i + C) / (n + kC).
double bayes_squared_risk(const ProbVector& theta, std::uint64_t n, const SymmetricPrior& prior);

/// Squared-norm threshold R separating the two risk regimes:
/// the posterior mean has strictly lower risk exactly when |theta|^2 < R.
double dominance_threshold(std::size_t k, std::uint64_t n, double concentration);
double dominance_threshold(const ModelDims& dims, const SymmetricPrior& prior);

/// The MLE is at least as good as the posterior mean.
inline bool mle_wins(double squared_norm, double threshold) noexcept {
    return squared_norm >= threshold;
}

RiskComparison compare_at(const ProbVector& theta, const ModelDims& dims, const SymmetricPrior& prior);

// Sign functions used by the simulation sweeps, one per prior family. Each
// is non-negative exactly where the MLE wins.

/// Uniform prior Dir(1, ..., 1).
double uniform_prior_margin(double squared_norm, const ModelDims& dims);
/// Dir(C/k, ..., C/k).
double scaled_prior_margin(double squared_norm, const ModelDims& dims, double c);
/// Dir(C, ..., C).
double constant_prior_margin(double squared_norm, const ModelDims& dims, double c);

} // namespace mnrisk
