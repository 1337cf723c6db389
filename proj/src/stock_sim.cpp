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

#include "mnrisk/stock_sim.hpp"

#include "mnrisk/beta.hpp"
#include "mnrisk/error.hpp"
#include "mnrisk/format.hpp"
#include "mnrisk/parallel.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>

namespace mnrisk {

CategoryDistribution::CategoryDistribution(std::vector<Category> categories)
    : categories_(std::move(categories)) {
    if (categories_.size() < 2) throw DomainError("a category distribution needs at least 2 categories");
    double sum = 0.0;
    for (const auto& c : categories_) {
        if (!std::isfinite(c.probability) || c.probability < 0.0) {
            throw DomainError("category '" + c.label + "' has a negative or non-finite probability");
        }
        sum += c.probability;
    }
    if (std::abs(sum - 1.0) > kSumTolerance) {
        throw DomainError("category probabilities sum to " + std::to_string(sum) + ", not 1");
    }
    for (auto& c : categories_) c.probability /= sum;
}

std::vector<double> CategoryDistribution::probabilities() const {
    std::vector<double> p;
    p.reserve(size());
    for (const auto& c : categories_) p.push_back(c.probability);
    return p;
}

std::vector<std::string> CategoryDistribution::labels() const {
    std::vector<std::string> out;
    out.reserve(size());
    for (const auto& c : categories_) out.push_back(c.label);
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string> split_row(std::string_view line) {
    std::vector<std::string> cells;
    std::string cell;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cell += '"';
                ++i;
            } else if (ch == '"') {
                quoted = false;
            } else {
                cell += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            cells.emplace_back(trim(cell));
            cell.clear();
        } else {
            cell += ch;
        }
    }
    cells.emplace_back(trim(cell));
    return cells;
}

bool parse_flag(std::string_view text, std::size_t row) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "true" || lower == "1" || lower == "yes") return true;
    if (lower == "false" || lower == "0" || lower == "no") return false;
    throw IngestError(row, "stockable must be true or false, got '" + std::string(text) + "'");
}

} // namespace

CategoryDistribution load_distribution(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw IngestError(0, "empty input");
    const auto header = split_row(trim(line));
    const bool has_flag = header.size() == 3 && header[2] == "stockable";
    if (header.size() < 2 || header[0] != "label" || header[1] != "probability" ||
        (header.size() == 3 && !has_flag) || header.size() > 3) {
        throw IngestError(0, "expected header 'label,probability[,stockable]'");
    }

    std::vector<Category> categories;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        ++row;
        const auto cells = split_row(line);
        if (cells.size() != header.size()) {
            throw IngestError(row, "expected " + std::to_string(header.size()) + " fields, got " +
                                       std::to_string(cells.size()));
        }
        Category c;
        c.label = cells[0];
        if (c.label.empty()) throw IngestError(row, "empty label");
        const auto& text = cells[1];
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), c.probability);
        if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(c.probability)) {
            throw IngestError(row, "probability '" + text + "' is not a number");
        }
        if (c.probability < 0.0) throw IngestError(row, "probability " + text + " is negative");
        c.stockable = has_flag ? parse_flag(cells[2], row) : c.label != "No size";
        categories.push_back(std::move(c));
    }
    if (categories.size() < 2) throw IngestError(0, "need at least 2 categories");
    const double sum = std::accumulate(categories.begin(), categories.end(), 0.0,
                                       [](double s, const Category& c) { return s + c.probability; });
    if (std::abs(sum - 1.0) > CategoryDistribution::kSumTolerance) {
        throw IngestError(0, "probabilities sum to " + std::to_string(sum) + ", not 1");
    }
    return CategoryDistribution(std::move(categories));
}

CategoryDistribution load_distribution_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IngestError(0, "cannot open " + path.string());
    return load_distribution(in);
}

CategoryDistribution zero_floor_adjust(std::span<const Category> raw) {
    double min_nonzero = 0.0;
    for (const auto& c : raw) {
        if (c.probability < 0.0) throw DomainError("negative probability for '" + c.label + "'");
        if (c.probability > 0.0 && (min_nonzero == 0.0 || c.probability < min_nonzero)) {
            min_nonzero = c.probability;
        }
    }
    if (min_nonzero == 0.0) throw DomainError("all probabilities are zero");
    std::vector<Category> adjusted(raw.begin(), raw.end());
    double sum = 0.0;
    for (auto& c : adjusted) {
        if (c.probability == 0.0 && c.stockable) c.probability = 0.5 * min_nonzero;
        sum += c.probability;
    }
    for (auto& c : adjusted) c.probability /= sum;
    return CategoryDistribution(std::move(adjusted));
}

CategoryDistribution zero_floor_adjust(const CategoryDistribution& raw) {
    return zero_floor_adjust(raw.categories());
}

std::string to_string(StockEstimator e) {
    switch (e) {
    case StockEstimator::Mle: return "mle";
    case StockEstimator::PosteriorMean: return "bayes_l2";
    case StockEstimator::PosteriorMedian: return "bayes_l1";
    }
    return "?";
}

namespace {

// Posterior medians indexed by count, for fixed (k, n).
std::vector<double> median_table(std::size_t k, std::uint64_t n) {
    std::vector<double> table(n + 1);
    const auto kd = static_cast<double>(k);
    const auto nd = static_cast<double>(n);
    for (std::uint64_t c = 0; c <= n; ++c) {
        const auto cd = static_cast<double>(c);
        table[c] = beta_median(BetaParams(1.0 + cd, kd - 1.0 + nd - cd));
    }
    return table;
}

std::vector<double> estimate_with(std::span<const std::uint64_t> counts, StockEstimator e,
                                  std::span<const double> medians) {
    const std::uint64_t n = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
    if (n == 0) throw DomainError("estimate needs at least one observation");
    const auto kd = static_cast<double>(counts.size());
    const auto nd = static_cast<double>(n);
    std::vector<double> out(counts.size());
    for (std::size_t j = 0; j < counts.size(); ++j) {
        const auto c = static_cast<double>(counts[j]);
        switch (e) {
        case StockEstimator::Mle: out[j] = c / nd; break;
        case StockEstimator::PosteriorMean: out[j] = (c + 1.0) / (nd + kd); break;
        case StockEstimator::PosteriorMedian: out[j] = medians[counts[j]]; break;
        }
    }
    return out;
}

} // namespace

std::vector<double> estimate_from_counts(std::span<const std::uint64_t> counts, StockEstimator e) {
    if (counts.size() < 2) throw DomainError("estimate needs at least 2 categories");
    std::vector<double> medians;
    if (e == StockEstimator::PosteriorMedian) {
        const std::uint64_t n = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
        if (n == 0) throw DomainError("estimate needs at least one observation");
        medians = median_table(counts.size(), n);
    }
    return estimate_with(counts, e, medians);
}

std::vector<std::uint64_t> draw_counts(const CategoryDistribution& dist, std::uint64_t customers,
                                       CounterRng& rng) {
    std::vector<double> cumulative(dist.size());
    double running = 0.0;
    for (std::size_t j = 0; j < dist.size(); ++j) {
        running += dist[j].probability;
        cumulative[j] = running;
    }
    std::vector<std::uint64_t> counts(dist.size(), 0);
    for (std::uint64_t i = 0; i < customers; ++i) {
        const double u = rng.uniform() * running;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        if (it == cumulative.end()) --it;
        ++counts[static_cast<std::size_t>(it - cumulative.begin())];
    }
    return counts;
}

Distances distances(std::span<const double> estimate, std::span<const double> truth) {
    if (estimate.size() != truth.size()) throw DomainError("distance between vectors of different length");
    Distances d;
    double sq = 0.0;
    for (std::size_t j = 0; j < truth.size(); ++j) {
        const double diff = std::abs(estimate[j] - truth[j]);
        d.l1 += diff;
        sq += diff * diff;
        d.linf = std::max(d.linf, diff);
    }
    d.l2 = std::sqrt(sq);
    return d;
}

StockPlan allocate_stock(const CategoryDistribution& categories, std::span<const double> weights,
                         std::int64_t stock_total) {
    if (stock_total < 1) throw DomainError("stock total must be at least 1");
    if (weights.size() != categories.size()) {
        throw DomainError("estimate has " + std::to_string(weights.size()) + " entries for " +
                          std::to_string(categories.size()) + " categories");
    }
    double stockable_mass = 0.0;
    for (std::size_t j = 0; j < weights.size(); ++j) {
        if (!(weights[j] >= 0.0)) throw DomainError("stock weights must be non-negative");
        if (categories[j].stockable) stockable_mass += weights[j];
    }
    if (!(stockable_mass > 0.0)) throw DomainError("no weight on stockable categories");
    StockPlan plan;
    plan.labels = categories.labels();
    plan.counts.assign(weights.size(), 0);
    const auto total = static_cast<double>(stock_total);
    for (std::size_t j = 0; j < weights.size(); ++j) {
        if (!categories[j].stockable) continue;
        plan.counts[j] = static_cast<std::int64_t>(std::round(total * weights[j] / stockable_mass));
        plan.total += plan.counts[j];
    }
    return plan;
}

std::int64_t stock_abs_error(const StockPlan& plan, const StockPlan& reference) {
    if (plan.labels != reference.labels || plan.counts.size() != reference.counts.size()) {
        throw DomainError("stock plans cover different categories");
    }
    std::int64_t err = 0;
    for (std::size_t j = 0; j < plan.counts.size(); ++j) {
        err += plan.counts[j] > reference.counts[j] ? plan.counts[j] - reference.counts[j]
                                                    : reference.counts[j] - plan.counts[j];
    }
    return err;
}

SimReport run_stocking_sim(const CategoryDistribution& dist, const SimConfig& config) {
    if (config.customers < 1) throw DomainError("need at least one customer per rep");
    if (config.reps < 1) throw DomainError("need at least one rep");

    const auto truth = dist.probabilities();
    const auto medians = median_table(dist.size(), config.customers);

    SimReport report;
    report.config = config;
    report.categories = dist.size();
    report.truth_plan = allocate_stock(dist, truth, config.stock_total);

    std::vector<RepRecord> records(config.reps);
    parallel_for_chunks(config.reps, config.workers, [&](std::size_t rep) {
        CounterRng rng(config.seed, rep);
        const auto counts = draw_counts(dist, config.customers, rng);
        RepRecord& rec = records[rep];
        rec.unsampled = static_cast<std::uint64_t>(std::count(counts.begin(), counts.end(), 0u));
        for (std::size_t e = 0; e < kStockEstimators.size(); ++e) {
            const auto est = estimate_with(counts, kStockEstimators[e], medians);
            rec.distances[e] = distances(est, truth);
            auto plan = allocate_stock(dist, est, config.stock_total);
            rec.stock_errors[e] = stock_abs_error(plan, report.truth_plan);
            if (rep == 0) report.example_plans[e] = std::move(plan);
        }
    });

    constexpr std::size_t mle = 2;
    const auto reps = static_cast<double>(config.reps);
    std::array<std::array<std::uint64_t, 3>, 2> wins{};
    std::array<std::uint64_t, 2> stock_wins{};
    std::uint64_t both = 0;
    std::uint64_t unsampled_total = 0;
    report.min_unsampled = records.front().unsampled;
    report.max_unsampled = records.front().unsampled;
    for (std::size_t e = 0; e < 3; ++e) report.estimators[e].estimator = kStockEstimators[e];
    for (const auto& rec : records) {
        for (std::size_t e = 0; e < 3; ++e) {
            auto& s = report.estimators[e];
            s.mean.l1 += rec.distances[e].l1;
            s.mean.l2 += rec.distances[e].l2;
            s.mean.linf += rec.distances[e].linf;
            s.mean_stock_error += static_cast<double>(rec.stock_errors[e]);
        }
        for (std::size_t b = 0; b < 2; ++b) {
            wins[b][0] += rec.distances[b].l1 < rec.distances[mle].l1;
            wins[b][1] += rec.distances[b].l2 < rec.distances[mle].l2;
            wins[b][2] += rec.distances[b].linf < rec.distances[mle].linf;
            stock_wins[b] += rec.stock_errors[b] < rec.stock_errors[mle];
        }
        both += rec.stock_errors[0] < rec.stock_errors[mle] && rec.stock_errors[1] < rec.stock_errors[mle];
        unsampled_total += rec.unsampled;
        report.min_unsampled = std::min(report.min_unsampled, rec.unsampled);
        report.max_unsampled = std::max(report.max_unsampled, rec.unsampled);
    }
    for (auto& s : report.estimators) {
        s.mean.l1 /= reps;
        s.mean.l2 /= reps;
        s.mean.linf /= reps;
        s.mean_stock_error /= reps;
    }
    for (std::size_t b = 0; b < 2; ++b) {
        report.win_fractions[b] = {static_cast<double>(wins[b][0]) / reps,
                                   static_cast<double>(wins[b][1]) / reps,
                                   static_cast<double>(wins[b][2]) / reps};
        report.stock_win_fractions[b] = static_cast<double>(stock_wins[b]) / reps;
    }
    report.both_bayes_stock_better = static_cast<double>(both) / reps;
    report.mean_unsampled = static_cast<double>(unsampled_total) / reps;
    if (config.keep_reps) report.per_rep = std::move(records);
    return report;
}

namespace {

nlohmann::json plan_json(const StockPlan& plan) {
    nlohmann::json counts = nlohmann::json::object();
    for (std::size_t j = 0; j < plan.labels.size(); ++j) counts[plan.labels[j]] = plan.counts[j];
    return {{"total", plan.total}, {"counts", counts}};
}

} // namespace

nlohmann::json to_json(const SimReport& report) {
    using nlohmann::json;
    json out;
    out["reps"] = report.config.reps;
    out["customers"] = report.config.customers;
    out["categories"] = report.categories;
    out["seed"] = report.config.seed;
    out["stock_total"] = report.config.stock_total;
    json per_estimator = json::object();
    for (const auto& s : report.estimators) {
        per_estimator[to_string(s.estimator)] = {{"mean_l1", s.mean.l1},
                                                 {"mean_l2", s.mean.l2},
                                                 {"mean_linf", s.mean.linf},
                                                 {"mean_stock_error", s.mean_stock_error}};
    }
    out["estimators"] = per_estimator;
    json wins = json::object();
    for (std::size_t b = 0; b < 2; ++b) {
        const auto& w = report.win_fractions[b];
        wins[to_string(kStockEstimators[b])] = {{"l1", w.l1},
                                                {"l2", w.l2},
                                                {"linf", w.linf},
                                                {"stock_error", report.stock_win_fractions[b]}};
    }
    out["win_fractions"] = wins;
    out["both_bayes_stock_better"] = report.both_bayes_stock_better;
    out["unsampled"] = {{"mean", report.mean_unsampled},
                        {"min", report.min_unsampled},
                        {"max", report.max_unsampled}};
    json plans = json::object();
    plans["true"] = plan_json(report.truth_plan);
    for (std::size_t e = 0; e < 3; ++e) {
        plans[to_string(kStockEstimators[e])] = plan_json(report.example_plans[e]);
    }
    out["stock_plans"] = plans;
    return out;
}

void write_per_rep_csv(std::ostream& out, const SimReport& report) {
    out << "rep,unsampled";
    for (auto e : kStockEstimators) {
        const auto name = to_string(e);
        out << ',' << name << "_l1," << name << "_l2," << name << "_linf," << name << "_stock_error";
    }
    out << '\n';
    for (std::size_t i = 0; i < report.per_rep.size(); ++i) {
        const auto& rec = report.per_rep[i];
        out << i << ',' << rec.unsampled;
        for (std::size_t e = 0; e < 3; ++e) {
            out << ',' << csv_number(rec.distances[e].l1) << ',' << csv_number(rec.distances[e].l2) << ','
                << csv_number(rec.distances[e].linf) << ',' << rec.stock_errors[e];
        }
        out << '\n';
    }
}

void write_stock_csv(std::ostream& out, const CategoryDistribution& dist, const SimReport& report) {
    out << "label,true_p,stock_true,stock_mle,stock_bayes_l2,stock_bayes_l1\n";
    const auto& plans = report.example_plans;
    for (std::size_t j = 0; j < dist.size(); ++j) {
        out << dist[j].label << ',' << csv_number(dist[j].probability) << ',' << report.truth_plan.counts[j]
            << ',' << plans[2].counts[j] << ',' << plans[0].counts[j] << ',' << plans[1].counts[j] << '\n';
    }
}

} // namespace mnrisk
