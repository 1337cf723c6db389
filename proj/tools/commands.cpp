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

#include "commands.hpp"

#include "mnrisk/abs_risk.hpp"
#include "mnrisk/avg_risk.hpp"
#include "mnrisk/core_risk.hpp"
#include "mnrisk/error.hpp"
#include "mnrisk/format.hpp"
#include "mnrisk/mc_simplex.hpp"
#include "mnrisk/prob_vector.hpp"
#include "mnrisk/rng.hpp"
#include "mnrisk/simplex_geometry.hpp"
#include "mnrisk/stock_sim.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <variant>

#ifndef MNRISK_DATA_DIR
#define MNRISK_DATA_DIR "data"
#endif

namespace mnrisk::cli {
namespace {

using Cell = std::variant<std::monostate, double, std::int64_t, std::uint64_t, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computation that failed for one (k, n) cell of a grid.
struct CellError : std::runtime_error {
    CellError(std::size_t k, const std::string& n, const std::string& what)
        : std::runtime_error("k=" + std::to_string(k) + (n.empty() ? "" : " n=" + n) + ": " + what) {}
};

std::string render_csv(const Table& t) {
    std::string s;
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i) s += ',';
        s += t.columns[i];
    }
    s += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) s += ',';
            std::visit(
                [&](const auto& v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, double>) {
                        s += csv_number(v);
                    } else if constexpr (std::is_same_v<T, std::string>) {
                        s += v;
                    } else if constexpr (!std::is_same_v<T, std::monostate>) {
                        s += std::to_string(v);
                    }
                },
                row[i]);
        }
        s += '\n';
    }
    return s;
}

std::string render_json(const Table& t) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        auto obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::visit(
                [&](const auto& v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, std::monostate>) {
                        obj[t.columns[i]] = nullptr;
                    } else {
                        obj[t.columns[i]] = v;
                    }
                },
                row[i]);
        }
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

struct Common {
    std::uint64_t seed = 0;
    std::string out;
    std::string format = "csv";
    unsigned workers = 0;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--seed", c.seed, "random seed (default: MNRISK_SEED or " +
                                          std::to_string(kDefaultSeed) + ")");
    sub->add_option("--out", c.out, "write output to this file instead of stdout");
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--workers", c.workers, "worker threads, 0 for one per core");
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    f << text;
    if (!f) throw std::runtime_error("cannot write " + path);
}

void emit_table(const Table& t, const Common& c, std::ostream& out) {
    emit(c.format == "json" ? render_json(t) : render_csv(t), c.out, out);
}

// Accepts plain integers and scientific shorthand such as 1e7.
std::uint64_t parse_count(const std::string& text, const std::string& flag) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v) || v < 0.0 ||
        v != std::floor(v) || v > 9007199254740992.0) {
        throw UsageError(flag + " expects a non-negative integer count, got '" + text + "'");
    }
    return static_cast<std::uint64_t>(v);
}

SymmetricPrior parse_prior(const std::string& text) {
    try {
        return SymmetricPrior::parse(text);
    } catch (const DomainError& e) {
        throw UsageError(std::string("--prior: ") + e.what());
    }
}

std::vector<NRule> parse_rules(const std::vector<std::string>& texts) {
    std::vector<NRule> rules;
    for (const auto& t : texts) {
        try {
            rules.push_back(NRule::parse(t));
        } catch (const DomainError& e) {
            throw UsageError(std::string("--n: ") + e.what());
        }
    }
    return rules;
}

ProbVector parse_theta(const std::vector<double>& values) {
    try {
        return ProbVector(values);
    } catch (const DomainError& e) {
        throw UsageError(std::string("--theta: ") + e.what());
    }
}

std::uint64_t resolve_cell(std::size_t k, const NRule& rule) {
    try {
        const auto n = rule.resolve(k);
        ModelDims(k, n);
        return n;
    } catch (const DomainError& e) {
        throw CellError(k, rule.label(), e.what());
    }
}

Cell optional_cell(const std::optional<double>& v) {
    if (v) return *v;
    return std::monostate{};
}

// ---- region ---------------------------------------------------------------

struct RegionArgs {
    Common common;
    std::vector<std::size_t> ks;
    std::vector<std::string> n_rules;
    std::string prior = "uniform";
    std::string mc = "1e6";
    std::vector<double> thresholds;
    bool exact = false;
};

std::optional<double> exact_mle_proportion(std::size_t k, double R) {
    if (k > 3) return std::nullopt;
    return 1.0 - region_proportion_exact(RegionSpec(k, R));
}

std::optional<double> bound_mle_proportion(const ModelDims& dims, const SymmetricPrior& prior, double R) {
    if (dims.k() < 3 || R < 0.5 || R >= 1.0) return std::nullopt;
    return mle_region_upper_bound(dims, prior);
}

// Proportion of E_k with |theta|^2 <= R for user-supplied R values.
Table region_by_threshold(const RegionArgs& a, std::uint64_t count) {
    Table t;
    t.columns = {"k", "R", "exact"};
    if (!a.exact) {
        t.columns.insert(t.columns.end(), {"lower_bound", "mc_estimate", "mc_std_error", "mc_samples", "mc_seed"});
    }
    for (const auto k : a.ks) {
        std::vector<std::uint64_t> at_least;
        const auto seed = derive_seed(a.common.seed, k);
        try {
            if (!a.exact && count > 0) {
                at_least = count_squared_norm_at_least(k, a.thresholds, count, seed, a.common.workers);
            }
            for (std::size_t i = 0; i < a.thresholds.size(); ++i) {
                const RegionSpec spec(k, a.thresholds[i]);
                std::vector<Cell> row{std::uint64_t{k}, spec.R};
                if (a.exact) {
                    row.push_back(region_proportion_exact(spec));
                    t.rows.push_back(std::move(row));
                    continue;
                }
                row.push_back(k <= 3 ? Cell(region_proportion_exact(spec)) : Cell());
                row.push_back(k >= 3 && spec.R >= 0.5 && spec.R < 1.0 ? Cell(region_proportion_lower_bound(spec))
                                                                      : Cell());
                if (count > 0) {
                    const auto mc = proportion_estimate(count - at_least[i], count, seed);
                    row.insert(row.end(), {mc.estimate, mc.std_error, mc.samples, mc.seed});
                } else {
                    row.insert(row.end(), 4, Cell());
                }
                t.rows.push_back(std::move(row));
            }
        } catch (const DomainError& e) {
            throw CellError(k, "", e.what());
        }
    }
    return t;
}

Table cmd_region(const RegionArgs& a) {
    const auto count = a.exact ? 0 : parse_count(a.mc, "--mc");
    if (!a.thresholds.empty()) return region_by_threshold(a, count);

    const auto prior = parse_prior(a.prior);
    const auto rules = a.n_rules.empty() ? default_n_grid() : parse_rules(a.n_rules);
    Table t;
    t.columns = {"k",           "n_rule",       "n",          "prior",   "threshold",
                 "exact",       "upper_bound",  "mc_estimate", "mc_std_error", "mc_hits",
                 "mc_samples",  "mc_seed",      "mc_zero_hit_bound"};
    for (const auto k : a.ks) {
        for (const auto& rule : rules) resolve_cell(k, rule);
        std::vector<SweepRow> sweep;
        if (count > 0) {
            try {
                const std::size_t ks[] = {k};
                sweep = proportion_sweep(ks, rules, prior, count, a.common.seed, a.common.workers);
            } catch (const DomainError& e) {
                throw CellError(k, "", e.what());
            }
        }
        for (std::size_t i = 0; i < rules.size(); ++i) {
            const auto n = resolve_cell(k, rules[i]);
            try {
                const ModelDims dims(k, n);
                const double R = dominance_threshold(dims, prior);
                std::vector<Cell> row{std::uint64_t{k}, rules[i].label(),  n, prior.describe(), R,
                                      optional_cell(exact_mle_proportion(k, R)),
                                      optional_cell(bound_mle_proportion(dims, prior, R))};
                if (count > 0) {
                    const auto& mc = sweep[i].mc;
                    row.insert(row.end(), {mc.estimate, mc.std_error, mc.hits, mc.samples, mc.seed,
                                           optional_cell(mc.zero_hit_upper_bound)});
                } else {
                    row.insert(row.end(), 6, Cell());
                }
                t.rows.push_back(std::move(row));
            } catch (const DomainError& e) {
                throw CellError(k, std::to_string(n), e.what());
            }
        }
    }
    return t;
}

// ---- avgrisk --------------------------------------------------------------

struct AvgRiskArgs {
    Common common;
    std::vector<std::size_t> ks{5, 10, 50, 100};
    std::vector<std::string> n_rules{"k", "k2"};
    std::string mc = "500000";
    std::vector<double> cs;
};

Table cmd_avgrisk(const AvgRiskArgs& a) {
    const auto rules = parse_rules(a.n_rules);
    Table t;
    if (!a.cs.empty()) {
        t.columns = {"k", "n", "C", "mle_avg_risk", "bayes_avg_risk", "decrease"};
        for (const auto k : a.ks) {
            for (const auto& rule : rules) {
                const auto n = resolve_cell(k, rule);
                for (const double c : a.cs) {
                    try {
                        const ModelDims dims(k, n);
                        const auto prior = SymmetricPrior::constant(c);
                        t.rows.push_back({std::uint64_t{k}, n, c, mle_avg_risk(dims),
                                          bayes_avg_risk(dims, prior), proportional_decrease(dims, prior)});
                    } catch (const DomainError& e) {
                        throw CellError(k, std::to_string(n), e.what());
                    }
                }
            }
        }
        return t;
    }

    const auto count = parse_count(a.mc, "--mc");
    const auto uniform = SymmetricPrior::uniform();
    const auto inv_k = SymmetricPrior::inverse_k();
    t.columns = {"k",
                 "n",
                 "mle_avg_risk",
                 "uniform_decrease",
                 "uniform_vol_prop",
                 "uniform_vol_prop_std_error",
                 "inv_k_decrease",
                 "inv_k_vol_prop_lower_bound"};
    for (const auto k : a.ks) {
        for (const auto& rule : rules) resolve_cell(k, rule);
        std::vector<SweepRow> sweep;
        if (count > 0) {
            const std::size_t ks[] = {k};
            try {
                sweep = proportion_sweep(ks, rules, uniform, count, a.common.seed, a.common.workers);
            } catch (const DomainError& e) {
                throw CellError(k, "", e.what());
            }
        }
        for (std::size_t i = 0; i < rules.size(); ++i) {
            const auto n = resolve_cell(k, rules[i]);
            try {
                const ModelDims dims(k, n);
                const auto bound = bound_mle_proportion(dims, inv_k, dominance_threshold(dims, inv_k));
                std::vector<Cell> row{std::uint64_t{k}, n, mle_avg_risk(dims), proportional_decrease(dims, uniform)};
                if (count > 0) {
                    row.push_back(1.0 - sweep[i].mc.estimate);
                    row.push_back(sweep[i].mc.std_error);
                } else {
                    row.insert(row.end(), 2, Cell());
                }
                row.push_back(proportional_decrease(dims, inv_k));
                row.push_back(bound ? Cell(1.0 - *bound) : Cell());
                t.rows.push_back(std::move(row));
            } catch (const DomainError& e) {
                throw CellError(k, std::to_string(n), e.what());
            }
        }
    }
    return t;
}

// ---- l1 -------------------------------------------------------------------

struct L1Args {
    Common common;
    std::vector<std::size_t> ks{10};
    std::vector<std::uint64_t> ns;
    std::string samples = "10000";
    std::vector<double> theta;
};

Table cmd_l1(const L1Args& a) {
    const auto ns = a.ns.empty() ? default_l1_n_grid() : a.ns;
    Table t;
    if (!a.theta.empty()) {
        const auto theta = parse_theta(a.theta);
        t.columns = {"k", "n", "mle", "bayes"};
        for (const auto n : ns) {
            try {
                const AbsRiskKernel kernel(theta.size(), n);
                const auto r = kernel.risks(theta.components());
                t.rows.push_back({std::uint64_t{theta.size()}, n, r.mle, r.bayes});
            } catch (const DomainError& e) {
                throw CellError(theta.size(), std::to_string(n), e.what());
            }
        }
        return t;
    }

    const auto samples = parse_count(a.samples, "--samples");
    if (samples == 0) throw UsageError("--samples must be positive");
    t.columns = {"k", "n", "mle", "mle_std_error", "bayes", "bayes_std_error", "theta_samples", "seed"};
    for (const auto k : a.ks) {
        for (const auto n : ns) {
            try {
                const std::size_t ks[] = {k};
                const std::uint64_t cell_n[] = {n};
                const auto rows = avg_l1_table(ks, cell_n, samples, a.common.seed, a.common.workers);
                const auto& r = rows.front();
                t.rows.push_back({std::uint64_t{k}, n, r.mle.mean, r.mle.std_error, r.bayes.mean, r.bayes.std_error,
                                  r.theta_samples, r.seed});
            } catch (const DomainError& e) {
                throw CellError(k, std::to_string(n), e.what());
            }
        }
    }
    return t;
}

// ---- stock ----------------------------------------------------------------

struct StockArgs {
    Common common;
    std::string data = std::string(MNRISK_DATA_DIR) + "/jean_sizes.csv";
    std::uint64_t customers = 100;
    std::uint64_t reps = 1000;
    std::int64_t stock_total = 1000;
    std::string per_rep_csv;
    bool emit_stock = false;
    bool from_truth = false;
    bool zero_floor = false;
};

std::string cmd_stock(const StockArgs& a) {
    auto dist = load_distribution_file(a.data);
    if (a.zero_floor) dist = zero_floor_adjust(dist);

    if (a.from_truth) {
        const auto plan = allocate_stock(dist, dist.probabilities(), a.stock_total);
        Table t;
        t.columns = {"label", "probability", "stockable", "stock_true"};
        for (std::size_t j = 0; j < dist.size(); ++j) {
            t.rows.push_back({dist[j].label, dist[j].probability, std::string(dist[j].stockable ? "true" : "false"),
                              plan.counts[j]});
        }
        return a.common.format == "json" ? render_json(t) : render_csv(t);
    }

    SimConfig config;
    config.customers = a.customers;
    config.reps = a.reps;
    config.stock_total = a.stock_total;
    config.seed = a.common.seed;
    config.workers = a.common.workers;
    config.keep_reps = !a.per_rep_csv.empty();
    const auto report = run_stocking_sim(dist, config);

    if (!a.per_rep_csv.empty()) {
        std::ostringstream s;
        write_per_rep_csv(s, report);
        std::ostringstream sink;
        emit(s.str(), a.per_rep_csv, sink);
    }
    std::ostringstream s;
    if (a.emit_stock) {
        write_stock_csv(s, dist, report);
    } else if (a.common.format == "csv") {
        // Without --format the report is JSON.
        Table t;
        t.columns = {"estimator", "mean_l1", "mean_l2", "mean_linf", "mean_stock_error",
                     "win_l1", "win_l2", "win_linf", "win_stock"};
        for (std::size_t e = 0; e < report.estimators.size(); ++e) {
            const auto& est = report.estimators[e];
            std::vector<Cell> row{to_string(est.estimator), est.mean.l1, est.mean.l2, est.mean.linf,
                                  est.mean_stock_error};
            if (e < 2) {
                const auto& w = report.win_fractions[e];
                row.insert(row.end(), {w.l1, w.l2, w.linf, report.stock_win_fractions[e]});
            } else {
                row.insert(row.end(), 4, Cell());
            }
            t.rows.push_back(std::move(row));
        }
        return render_csv(t);
    } else {
        s << to_json(report).dump(2) << '\n';
    }
    return s.str();
}

// ---- point ----------------------------------------------------------------

struct PointArgs {
    Common common;
    std::vector<double> theta;
    std::uint64_t n = 0;
    std::string prior = "uniform";
};

Table cmd_point(const PointArgs& a) {
    const auto theta = parse_theta(a.theta);
    const auto prior = parse_prior(a.prior);
    Table t;
    t.columns = {"k", "n", "prior", "concentration", "squared_norm", "threshold", "mle_risk", "bayes_risk", "better"};
    try {
        const ModelDims dims(theta.size(), a.n);
        const auto cmp = compare_at(theta, dims, prior);
        t.rows.push_back({std::uint64_t{dims.k()}, dims.n(), prior.describe(), prior.concentration(dims.k(), dims.n()),
                          cmp.squared_norm, cmp.threshold, cmp.mle_risk, cmp.bayes_risk,
                          std::string(cmp.mle_wins ? "mle" : "bayes")});
    } catch (const DomainError& e) {
        throw CellError(theta.size(), std::to_string(a.n), e.what());
    }
    return t;
}

std::optional<std::uint64_t> env_seed(bool& invalid) {
    invalid = false;
    const char* text = std::getenv("MNRISK_SEED");
    if (!text || !*text) return std::nullopt;
    std::uint64_t v = 0;
    const auto end = text + std::char_traits<char>::length(text);
    const auto [ptr, ec] = std::from_chars(text, end, v);
    if (ec != std::errc{} || ptr != end) {
        invalid = true;
        return std::nullopt;
    }
    return v;
}

} // namespace

std::uint64_t default_seed() {
    bool invalid = false;
    return env_seed(invalid).value_or(kDefaultSeed);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    bool bad_env = false;
    const auto seed = env_seed(bad_env).value_or(kDefaultSeed);
    if (bad_env) {
        err << "usage error: MNRISK_SEED must be an unsigned 64-bit integer\n";
        return kUsageError;
    }

    CLI::App app{"Risk comparisons between the MLE and Dirichlet-Bayes estimators of multinomial cell "
                 "probabilities.",
                 "mnrisk"};
    app.require_subcommand(1);

    RegionArgs region;
    region.common.seed = seed;
    auto* rg = app.add_subcommand("region", "MLE-favoring region: exact values, bounds and Monte Carlo estimates");
    add_common(rg, region.common);
    rg->add_option("--k", region.ks, "cell counts")->delimiter(',')->required()->check(CLI::PositiveNumber);
    auto* rg_n = rg->add_option("--n", region.n_rules, "sample-size rules, e.g. 100,2k,k2 (default: k..4k4)")
                     ->delimiter(',');
    auto* rg_prior = rg->add_option("--prior", region.prior, "uniform, inv-k, const:C or scaled-inv-k:C");
    auto* rg_mc = rg->add_option("--mc", region.mc, "Monte Carlo samples per k, 0 to skip");
    auto* rg_R = rg->add_option("--R", region.thresholds, "report vol{|theta|^2 <= R} for these R instead")
                     ->delimiter(',');
    auto* rg_exact = rg->add_flag("--exact", region.exact, "closed-form values only (k = 2, 3)");
    rg_exact->needs(rg_R)->excludes(rg_mc);
    rg_R->excludes(rg_n)->excludes(rg_prior);

    AvgRiskArgs avg;
    avg.common.seed = seed;
    auto* ar = app.add_subcommand("avgrisk", "average risks over the simplex and the proportional decrease");
    add_common(ar, avg.common);
    ar->add_option("--k", avg.ks, "cell counts")->delimiter(',')->check(CLI::PositiveNumber)->capture_default_str();
    ar->add_option("--n", avg.n_rules, "sample-size rules")->delimiter(',')->capture_default_str();
    auto* ar_mc = ar->add_option("--mc", avg.mc, "Monte Carlo samples for the uniform-prior volume proportion");
    ar->add_option("--C", avg.cs, "Dir(C, ..., C) concentrations: print the decrease curve")
        ->delimiter(',')
        ->check(CLI::PositiveNumber)
        ->excludes(ar_mc);

    L1Args l1;
    l1.common.seed = seed;
    auto* l1c = app.add_subcommand("l1", "average L1 risks of the MLE and the posterior median");
    add_common(l1c, l1.common);
    auto* l1_k = l1c->add_option("--k", l1.ks, "cell counts")->delimiter(',')->check(CLI::PositiveNumber);
    l1c->add_option("--n", l1.ns, "sample sizes (default: 20,30,40,50,100,...,1000)")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    auto* l1_samples = l1c->add_option("--samples", l1.samples, "uniform theta draws per k");
    l1c->add_option("--theta", l1.theta, "evaluate the risks at this single point instead")
        ->delimiter(',')
        ->excludes(l1_k)
        ->excludes(l1_samples);

    StockArgs stock;
    stock.common.seed = seed;
    stock.common.format.clear();
    auto* sc = app.add_subcommand("stock", "retail stocking simulation");
    add_common(sc, stock.common);
    sc->add_option("--data", stock.data, "CSV with header label,probability[,stockable]")->capture_default_str();
    auto* sc_n = sc->add_option("--n", stock.customers, "customers per rep")->check(CLI::PositiveNumber)->capture_default_str();
    auto* sc_reps = sc->add_option("--reps", stock.reps, "repetitions")->check(CLI::PositiveNumber)->capture_default_str();
    sc->add_option("--stock-total", stock.stock_total, "items to allocate")->check(CLI::PositiveNumber)->capture_default_str();
    auto* sc_per_rep = sc->add_option("--per-rep-csv", stock.per_rep_csv, "also write per-rep distances here");
    auto* sc_emit = sc->add_flag("--emit-stock", stock.emit_stock, "print rep 0's stock allocations as CSV");
    sc->add_flag("--from-truth", stock.from_truth, "allocate stock from the true probabilities only")
        ->excludes(sc_n)
        ->excludes(sc_reps)
        ->excludes(sc_per_rep)
        ->excludes(sc_emit);
    sc->add_flag("--zero-floor", stock.zero_floor, "raise zero probabilities to half the smallest nonzero one");

    PointArgs point;
    point.common.seed = seed;
    auto* pc = app.add_subcommand("point", "squared-error risks of both estimators at one theta");
    add_common(pc, point.common);
    pc->add_option("--theta", point.theta, "cell probabilities")->delimiter(',')->required();
    pc->add_option("--n", point.n, "sample size")->required()->check(CLI::PositiveNumber);
    pc->add_option("--prior", point.prior, "uniform, inv-k, const:C or scaled-inv-k:C")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kOk;
        }
        err << "usage error: " << e.what() << "\nrun with --help for usage\n";
        return kUsageError;
    }

    try {
        if (rg->parsed()) {
            emit_table(cmd_region(region), region.common, out);
        } else if (ar->parsed()) {
            emit_table(cmd_avgrisk(avg), avg.common, out);
        } else if (l1c->parsed()) {
            emit_table(cmd_l1(l1), l1.common, out);
        } else if (sc->parsed()) {
            emit(cmd_stock(stock), stock.common.out, out);
        } else if (pc->parsed()) {
            emit_table(cmd_point(point), point.common, out);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kComputeError;
    }
    return kOk;
}

} // namespace mnrisk::cli
