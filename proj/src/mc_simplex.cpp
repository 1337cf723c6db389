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

#include "mnrisk/mc_simplex.hpp"

#include "mnrisk/core_risk.hpp"
#include "mnrisk/error.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

namespace mnrisk {

MonteCarloEstimate proportion_estimate(std::uint64_t hits, std::uint64_t samples, std::uint64_t seed) {
    if (samples == 0) throw DomainError("proportion needs at least one sample");
    MonteCarloEstimate out;
    out.samples = samples;
    out.seed = seed;
    out.hits = hits;
    const auto N = static_cast<double>(samples);
    out.estimate = static_cast<double>(hits) / N;
    out.std_error = std::sqrt(out.estimate * (1.0 - out.estimate) / N);
    if (hits == 0) out.zero_hit_upper_bound = 3.0 / N;
    return out;
}

double draw_simplex_point(CounterRng& rng, std::span<double> point) {
    double total = 0.0;
    for (double& x : point) {
        x = rng.exponential();
        total += x;
    }
    const double inv = 1.0 / total;
    double sq = 0.0;
    for (double& x : point) {
        x *= inv;
        sq += x * x;
    }
    return sq;
}

std::vector<ProbVector> sample_uniform_simplex(std::size_t k, std::size_t count, std::uint64_t seed,
                                               unsigned workers) {
    if (k < 2) throw DomainError("simplex sampling needs k >= 2");
    if (count == 0) throw DomainError("sample count must be positive");
    const std::size_t chunks = (count + kSimplexChunk - 1) / kSimplexChunk;
    std::vector<std::vector<ProbVector>> parts(chunks);
    parallel_for_chunks(chunks, workers, [&](std::size_t c) {
        CounterRng rng(seed, c);
        const std::size_t begin = c * kSimplexChunk;
        const std::size_t end = std::min(count, begin + kSimplexChunk);
        auto& part = parts[c];
        part.reserve(end - begin);
        std::vector<double> point(k);
        for (std::size_t i = begin; i < end; ++i) {
            draw_simplex_point(rng, point);
            part.emplace_back(point);
        }
    });
    std::vector<ProbVector> out;
    out.reserve(count);
    for (auto& part : parts) {
        for (auto& p : part) out.push_back(std::move(p));
    }
    return out;
}

std::vector<std::uint64_t> count_squared_norm_at_least(std::size_t k, std::span<const double> thresholds,
                                                       std::uint64_t count, std::uint64_t seed,
                                                       unsigned workers) {
    if (k < 2) throw DomainError("simplex sampling needs k >= 2");
    if (count == 0) throw DomainError("sample count must be positive");
    const std::size_t m = thresholds.size();
    // Sort thresholds once so each point needs a single binary search.
    std::vector<std::size_t> order(m);
    for (std::size_t i = 0; i < m; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return thresholds[a] < thresholds[b]; });
    std::vector<double> sorted(m);
    for (std::size_t i = 0; i < m; ++i) sorted[i] = thresholds[order[i]];

    const std::size_t chunks = (count + kSimplexChunk - 1) / kSimplexChunk;
    // Per chunk: histogram of "number of sorted thresholds <= |theta|^2".
    std::vector<std::uint64_t> hist(chunks * (m + 1), 0);
    parallel_for_chunks(chunks, workers, [&](std::size_t c) {
        CounterRng rng(seed, c);
        std::vector<double> point(k);
        const std::uint64_t begin = c * kSimplexChunk;
        const std::uint64_t end = std::min<std::uint64_t>(count, begin + kSimplexChunk);
        std::uint64_t* h = hist.data() + c * (m + 1);
        for (std::uint64_t i = begin; i < end; ++i) {
            const double sq = draw_simplex_point(rng, point);
            // Thresholds R with mle_wins(sq, R), i.e. R <= sq.
            const auto below = std::upper_bound(sorted.begin(), sorted.end(), sq) - sorted.begin();
            ++h[below];
        }
    });
    std::vector<std::uint64_t> total(m + 1, 0);
    for (std::size_t c = 0; c < chunks; ++c) {
        for (std::size_t j = 0; j <= m; ++j) total[j] += hist[c * (m + 1) + j];
    }
    // A point counted in bucket b satisfies the b smallest thresholds.
    std::vector<std::uint64_t> at_least_sorted(m, 0);
    std::uint64_t running = 0;
    for (std::size_t j = m; j >= 1; --j) {
        running += total[j];
        at_least_sorted[j - 1] = running;
    }
    std::vector<std::uint64_t> out(m);
    for (std::size_t i = 0; i < m; ++i) out[order[i]] = at_least_sorted[i];
    return out;
}

MonteCarloEstimate estimate_mle_better_proportion(const ModelDims& dims, const SymmetricPrior& prior,
                                                  std::uint64_t count, std::uint64_t seed,
                                                  unsigned workers) {
    const double R = dominance_threshold(dims, prior);
    const auto hits = count_squared_norm_at_least(dims.k(), std::span(&R, 1), count, seed, workers);
    return proportion_estimate(hits[0], count, seed);
}

std::uint64_t NRule::resolve(std::size_t k) const {
    std::uint64_t n = multiplier;
    for (unsigned p = 0; p < power; ++p) {
        if (n > std::numeric_limits<std::uint64_t>::max() / k) {
            throw DomainError("sample size rule " + label() + " overflows for k = " + std::to_string(k));
        }
        n *= k;
    }
    if (n == 0) throw DomainError("sample size rule " + label() + " resolves to n = 0");
    return n;
}

std::string NRule::label() const {
    if (power == 0) return std::to_string(multiplier);
    std::string s = multiplier == 1 ? "" : std::to_string(multiplier);
    s += 'k';
    if (power != 1) s += std::to_string(power);
    return s;
}

NRule NRule::parse(std::string_view text) {
    auto fail = [&] {
        throw DomainError("bad sample-size rule '" + std::string(text) +
                          "' (expected e.g. 100, k, 2k, k2, 3k4)");
    };
    auto read_uint = [&](std::string_view part, auto& value) {
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (ec != std::errc{} || ptr != part.data() + part.size()) fail();
    };
    if (text.empty()) fail();
    NRule rule;
    const auto kpos = text.find('k');
    if (kpos == std::string_view::npos) {
        read_uint(text, rule.multiplier);
        rule.power = 0;
        if (rule.multiplier == 0) fail();
        return rule;
    }
    if (kpos > 0) read_uint(text.substr(0, kpos), rule.multiplier);
    if (kpos + 1 < text.size()) read_uint(text.substr(kpos + 1), rule.power);
    if (rule.multiplier == 0 || rule.power == 0) fail();
    return rule;
}

std::vector<NRule> default_n_grid() {
    std::vector<NRule> grid;
    for (unsigned p = 1; p <= 4; ++p) {
        for (std::uint64_t m = 1; m <= 4; ++m) grid.push_back({m, p});
    }
    return grid;
}

std::vector<SweepRow> proportion_sweep(std::span<const std::size_t> ks, std::span<const NRule> rules,
                                       const SymmetricPrior& prior, std::uint64_t count,
                                       std::uint64_t seed, unsigned workers) {
    std::vector<SweepRow> rows;
    for (std::size_t k : ks) {
        std::vector<double> thresholds;
        std::vector<SweepRow> block;
        for (const NRule& rule : rules) {
            const ModelDims dims(k, rule.resolve(k));
            SweepRow row;
            row.k = k;
            row.rule = rule;
            row.n = dims.n();
            row.threshold = dominance_threshold(dims, prior);
            thresholds.push_back(row.threshold);
            block.push_back(row);
        }
        const std::uint64_t k_seed = derive_seed(seed, k);
        const auto hits = count_squared_norm_at_least(k, thresholds, count, k_seed, workers);
        for (std::size_t i = 0; i < block.size(); ++i) {
            block[i].mc = proportion_estimate(hits[i], count, k_seed);
            rows.push_back(block[i]);
        }
    }
    return rows;
}

} // namespace mnrisk
