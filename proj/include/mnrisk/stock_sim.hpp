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

#include "mnrisk/rng.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace mnrisk {

struct Category {
    std::string label;
    double probability = 0.0;
    /// False for sink categories (e.g. "No size") that customers can fall
    /// into but that never receive stock.
    bool stockable = true;
};

/// Labelled categorical distribution with at least two categories.
class CategoryDistribution {
public:
    /// Reference tables round each probability, so totals are accepted within
    /// this tolerance and renormalized.
    static constexpr double kSumTolerance = 1e-4;

    explicit CategoryDistribution(std::vector<Category> categories);

    std::size_t size() const noexcept { return categories_.size(); }
    std::span<const Category> categories() const noexcept { return categories_; }
    const Category& operator[](std::size_t i) const { return categories_[i]; }
    std::vector<double> probabilities() const;
    std::vector<std::string> labels() const;

private:
    std::vector<Category> categories_;
};

/// Parses CSV with header `label,probability[,stockable]`. A missing
/// stockable column defaults to true except for the label "No size".
/// Throws IngestError naming the offending data row.
CategoryDistribution load_distribution(std::istream& in);
CategoryDistribution load_distribution_file(const std::filesystem::path& path);

/// Gives every zero-probability stockable category half the smallest nonzero
/// probability, then renormalizes. Throws DomainError if all are zero.
CategoryDistribution zero_floor_adjust(std::span<const Category> raw);
CategoryDistribution zero_floor_adjust(const CategoryDistribution& raw);

enum class StockEstimator {
    Mle,             ///< counts / n
    PosteriorMean,   ///< (count + 1) / (n + k), uniform prior
    PosteriorMedian, ///< median of Beta(1 + count, k - 1 + n - count), uniform prior
};

inline constexpr std::array<StockEstimator, 3> kStockEstimators = {
    StockEstimator::PosteriorMean, StockEstimator::PosteriorMedian, StockEstimator::Mle};

std::string to_string(StockEstimator e);

/// Point estimate from category counts. The posterior-median estimate is the
/// vector of marginal medians and is not renormalized, so it need not sum to 1.
std::vector<double> estimate_from_counts(std::span<const std::uint64_t> counts, StockEstimator e);

/// Draws `customers` i.i.d. categories and returns the per-category counts.
std::vector<std::uint64_t> draw_counts(const CategoryDistribution& dist, std::uint64_t customers,
                                       CounterRng& rng);

struct Distances {
    double l1 = 0.0;
    double l2 = 0.0;
    double linf = 0.0;
};

Distances distances(std::span<const double> estimate, std::span<const double> truth);

struct StockPlan {
    std::vector<std::string> labels;
    std::vector<std::int64_t> counts;
    std::int64_t total = 0;
};

/// Splits `stock_total` units over the stockable categories in proportion
/// to `weights` renormalized over those categories, rounding each share to
/// the nearest integer (halves away from zero). Non-stockable categories get
/// nothing. The total can differ from stock_total by rounding.
StockPlan allocate_stock(const CategoryDistribution& categories, std::span<const double> weights,
                         std::int64_t stock_total);

/// Sum of absolute per-category differences. Throws DomainError if the plans
/// cover different categories.
std::int64_t stock_abs_error(const StockPlan& plan, const StockPlan& reference);

struct SimConfig {
    std::uint64_t customers = 100;
    std::uint64_t reps = 1000;
    std::int64_t stock_total = 1000;
    std::uint64_t seed = 0;
    unsigned workers = 0;
    bool keep_reps = false;
};

struct RepRecord {
    /// Indexed like kStockEstimators.
    std::array<Distances, 3> distances;
    std::array<std::int64_t, 3> stock_errors{};
    std::uint64_t unsampled = 0;
};

struct EstimatorSummary {
    StockEstimator estimator = StockEstimator::Mle;
    Distances mean;
    double mean_stock_error = 0.0;
};

struct SimReport {
    SimConfig config;
    std::size_t categories = 0;
    /// Indexed like kStockEstimators.
    std::array<EstimatorSummary, 3> estimators;
    /// Fraction of reps in which each Bayes estimator (posterior mean, then
    /// posterior median) is strictly closer to the truth than the MLE, per
    /// metric (L1, L2, Linf).
    std::array<Distances, 2> win_fractions;
    /// Fraction of reps in which each Bayes stock plan has a strictly smaller
    /// absolute stock error than the MLE plan, and in which both do.
    std::array<double, 2> stock_win_fractions{};
    double both_bayes_stock_better = 0.0;
    double mean_unsampled = 0.0;
    std::uint64_t min_unsampled = 0;
    std::uint64_t max_unsampled = 0;
    StockPlan truth_plan;
    /// Plans from rep 0, indexed like kStockEstimators.
    std::array<StockPlan, 3> example_plans;
    std::vector<RepRecord> per_rep;
};

/// Rep i draws its customers from substream (config.seed, i).
SimReport run_stocking_sim(const CategoryDistribution& dist, const SimConfig& config);

nlohmann::json to_json(const SimReport& report);
void write_per_rep_csv(std::ostream& out, const SimReport& report);
/// Table with the truth, the stock from the true probabilities and the
/// example stock plans.
void write_stock_csv(std::ostream& out, const CategoryDistribution& dist, const SimReport& report);

} // namespace mnrisk
