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

#include "mnrisk/abs_risk.hpp"

#include "mnrisk/beta.hpp"
#include "mnrisk/core_risk.hpp"
#include "mnrisk/error.hpp"
#include "mnrisk/log_gamma.hpp"
#include "mnrisk/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mnrisk {

namespace {

std::vector<double> log_factorials(std::uint64_t n) {
    std::vector<double> lf(n + 1);
    for (std::uint64_t r = 0; r <= n; ++r) lf[r] = log_gamma(static_cast<double>(r) + 1.0);
    return lf;
}

} // namespace

std::vector<double> binomial_pmf(std::uint64_t n, double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("binomial probability outside [0, 1]");
    std::vector<double> pmf(n + 1, 0.0);
    if (p == 0.0) {
        pmf[0] = 1.0;
        return pmf;
    }
    if (p == 1.0) {
        pmf[n] = 1.0;
        return pmf;
    }
    const auto lf = log_factorials(n);
    const double lp = std::log(p);
    const double lq = std::log1p(-p);
    for (std::uint64_t r = 0; r <= n; ++r) {
        const auto rd = static_cast<double>(r);
        pmf[r] = std::exp(lf[n] - lf[r] - lf[n - r] + rd * lp + (static_cast<double>(n) - rd) * lq);
    }
    return pmf;
}

AbsRiskKernel::AbsRiskKernel(std::size_t k, std::uint64_t n)
    : k_(k), n_(n), log_factorial_(log_factorials(n)), medians_(n + 1) {
    if (k < 2) throw DomainError("cell count k must be at least 2");
    if (n < 1) throw DomainError("sample size n must be at least 1");
    const double prior = 1.0 / static_cast<double>(k);
    const auto nd = static_cast<double>(n);
    for (std::uint64_t r = 0; r <= n; ++r) {
        const auto rd = static_cast<double>(r);
        medians_[r] = beta_median(BetaParams(prior + rd, nd + 1.0 - rd - prior));
    }
}

void AbsRiskKernel::accumulate_cell(double theta, double& mle, double& bayes) const {
    const auto nd = static_cast<double>(n_);
    // Degenerate cells: the count is 0 or n with certainty and the MLE is exact.
    if (theta <= 0.0) {
        bayes += medians_[0];
        return;
    }
    if (theta >= 1.0) {
        bayes += 1.0 - medians_[n_];
        return;
    }
    // Anchor at the mode with the log-gamma form, then walk outward with the
    // term ratio. Terms decrease monotonically away from the mode; once one
    // drops below the smallest normal double the rest cannot register.
    const auto mode = static_cast<std::uint64_t>(std::min(nd, std::floor((nd + 1.0) * theta)));
    const double lq = std::log1p(-theta);
    const double log_mode = log_factorial_[n_] - log_factorial_[mode] - log_factorial_[n_ - mode] +
                            static_cast<double>(mode) * std::log(theta) +
                            (nd - static_cast<double>(mode)) * lq;
    const double odds = theta / (1.0 - theta);
    const double inv_n = 1.0 / nd;
    constexpr double floor_term = std::numeric_limits<double>::min();

    double term = std::exp(log_mode);
    double sum_mle = term * std::abs(static_cast<double>(mode) * inv_n - theta);
    double sum_bayes = term * std::abs(medians_[mode] - theta);
    for (std::uint64_t r = mode; r < n_;) {
        term *= static_cast<double>(n_ - r) / static_cast<double>(r + 1) * odds;
        ++r;
        if (term < floor_term) break;
        sum_mle += term * std::abs(static_cast<double>(r) * inv_n - theta);
        sum_bayes += term * std::abs(medians_[r] - theta);
    }
    term = std::exp(log_mode);
    for (std::uint64_t r = mode; r > 0;) {
        term *= static_cast<double>(r) / (static_cast<double>(n_ - r + 1) * odds);
        --r;
        if (term < floor_term) break;
        sum_mle += term * std::abs(static_cast<double>(r) * inv_n - theta);
        sum_bayes += term * std::abs(medians_[r] - theta);
    }
    mle += sum_mle;
    bayes += sum_bayes;
}

AbsRiskKernel::Risks AbsRiskKernel::risks(std::span<const double> theta) const {
    if (theta.size() != k_) {
        throw DomainError("theta has " + std::to_string(theta.size()) + " cells but k = " +
                          std::to_string(k_));
    }
    Risks out;
    for (double t : theta) accumulate_cell(t, out.mle, out.bayes);
    return out;
}

double mle_abs_risk(const ProbVector& theta, std::uint64_t n) {
    return AbsRiskKernel(theta.size(), n).risks(theta.components()).mle;
}

double bayes_abs_risk(const ProbVector& theta, std::uint64_t n) {
    return AbsRiskKernel(theta.size(), n).risks(theta.components()).bayes;
}

std::vector<L1TableRow> avg_l1_table(std::span<const std::size_t> ks, std::span<const std::uint64_t> ns,
                                     std::uint64_t theta_samples, std::uint64_t seed, unsigned workers) {
    if (theta_samples == 0) throw DomainError("theta sample count must be positive");
    std::vector<L1TableRow> rows;
    for (std::size_t k : ks) {
        std::vector<AbsRiskKernel> kernels;
        kernels.reserve(ns.size());
        for (std::uint64_t n : ns) kernels.emplace_back(k, n);
        const std::uint64_t k_seed = derive_seed(seed, k);
        const auto means = simplex_average(
            k, 2 * ns.size(), theta_samples, k_seed, workers,
            [&](std::span<const double> theta, std::span<double> out) {
                for (std::size_t i = 0; i < kernels.size(); ++i) {
                    const auto r = kernels[i].risks(theta);
                    out[2 * i] = r.mle;
                    out[2 * i + 1] = r.bayes;
                }
            });
        for (std::size_t i = 0; i < ns.size(); ++i) {
            rows.push_back({k, ns[i], means[2 * i], means[2 * i + 1], k_seed, theta_samples});
        }
    }
    return rows;
}

std::vector<std::uint64_t> default_l1_n_grid() {
    return {20, 30, 40, 50, 100, 200, 300, 400, 500, 600, 700, 800, 900, 1000};
}

DensityScaling::DensityScaling(double omega_total_, std::size_t k_) : omega_total(omega_total_), k(k_) {
    if (!(omega_total > 0.0) || !std::isfinite(omega_total)) {
        throw DomainError("state-space measure must be positive");
    }
    if (k < 2) throw DomainError("cell count k must be at least 2");
}

double l2_density_distance(const ModelDims& dims, const SymmetricPrior& prior, const ProbVector& theta,
                           const DensityScaling& scaling, Estimator estimator) {
    if (theta.size() != dims.k() || scaling.k != dims.k()) {
        throw DomainError("theta, dims and scaling disagree on the cell count");
    }
    const double risk = estimator == Estimator::Mle ? mle_squared_risk(theta, dims.n())
                                                    : bayes_squared_risk(theta, dims.n(), prior);
    return std::sqrt(static_cast<double>(dims.k()) / scaling.omega_total) * std::sqrt(risk);
}

} // namespace mnrisk
