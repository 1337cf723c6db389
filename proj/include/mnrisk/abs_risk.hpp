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

#include "mnrisk/mc_simplex.hpp"
#include "mnrisk/prob_vector.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mnrisk {

/// Binomial(n, p) probabilities for r = 0..n, each term evaluated as
/// exp(log C(n, r) + r log p + (n - r) log(1 - p)).
std::vector<double> binomial_pmf(std::uint64_t n, double p);

/// Absolute-error risks of the MLE and of the coordinatewise posterior
/// median under Dir(1/k, ..., 1/k), for a fixed (k, n).
///
/// Cell j's count is Binomial(n, theta_j) and its posterior marginal is
/// Beta(1/k + r, n + 1 - r - 1/k); the n + 1 possible medians are computed
/// once here and reused for every theta.
class AbsRiskKernel {
public:
    AbsRiskKernel(std::size_t k, std::uint64_t n);

    std::size_t k() const noexcept { return k_; }
    std::uint64_t n() const noexcept { return n_; }

    /// Posterior median for each count r = 0..n.
    std::span<const double> posterior_medians() const noexcept { return medians_; }

    /// sum_j E|r_j / n - theta_j| and sum_j E|median(r_j) - theta_j|.
    struct Risks {
        double mle = 0.0;
        double bayes = 0.0;
    };
    Risks risks(std::span<const double> theta) const;

private:
    void accumulate_cell(double theta, double& mle, double& bayes) const;

    std::size_t k_;
    std::uint64_t n_;
    std::vector<double> log_factorial_;
    std::vector<double> medians_;
};

double mle_abs_risk(const ProbVector& theta, std::uint64_t n);

/// Risk of the posterior-median estimator; the prior is pinned to Dir(1/k).
double bayes_abs_risk(const ProbVector& theta, std::uint64_t n);

struct L1TableRow {
    std::size_t k = 0;
    std::uint64_t n = 0;
    MeanEstimate mle;
    MeanEstimate bayes;
    std::uint64_t seed = 0;
    std::uint64_t theta_samples = 0;
};

/// Average L1 risks over uniformly sampled theta. All n for a given k share
/// one theta sample drawn with seed derive_seed(seed, k).
std::vector<L1TableRow> avg_l1_table(std::span<const std::size_t> ks, std::span<const std::uint64_t> ns,
                                     std::uint64_t theta_samples, std::uint64_t seed,
                                     unsigned workers = 0);

/// The n values of the reference L1 tables: 20, 30, 40, 50, 100, 200, ..., 1000.
std::vector<std::uint64_t> default_l1_n_grid();

/// Total measure of the state space, split into k cells of equal measure.
struct DensityScaling {
    DensityScaling(double omega_total, std::size_t k);

    double omega_total;
    std::size_t k;
};

enum class Estimator { Mle, Bayes };

/// L2 distance between the histogram density built from theta and the one
/// built from an estimator, in root-mean-square form:
/// sqrt(k / omega) * sqrt(squared-error risk).
double l2_density_distance(const ModelDims& dims, const SymmetricPrior& prior, const ProbVector& theta,
                           const DensityScaling& scaling, Estimator estimator);

} // namespace mnrisk
