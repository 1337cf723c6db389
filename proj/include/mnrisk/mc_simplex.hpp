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

#include "mnrisk/parallel.hpp"
#include "mnrisk/prob_vector.hpp"
#include "mnrisk/rng.hpp"

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mnrisk {

/// Samples are generated in fixed-size chunks; chunk c draws from substream
/// (seed, c). Changing this changes every Monte Carlo result.
inline constexpr std::size_t kSimplexChunk = 1u << 14;

struct MonteCarloEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    /// Number of successes, for proportions.
    std::uint64_t hits = 0;
    /// One-sided 95% bound 3 / samples, set only when hits == 0.
    std::optional<double> zero_hit_upper_bound;
};

/// Binomial proportion hits / samples with std error sqrt(p(1-p)/samples).
MonteCarloEstimate proportion_estimate(std::uint64_t hits, std::uint64_t samples, std::uint64_t seed);

/// Fills `point` with a uniform draw from E_k (k = point.size()):
/// normalized i.i.d. unit exponentials, i.e. Dirichlet(1, ..., 1).
/// Returns the squared norm of the point.
double draw_simplex_point(CounterRng& rng, std::span<double> point);

/// `count` i.i.d. uniform points on E_k. Deterministic in (k, count, seed).
std::vector<ProbVector> sample_uniform_simplex(std::size_t k, std::size_t count, std::uint64_t seed,
                                               unsigned workers = 0);

/// For every threshold R, how many of `count` uniform points on E_k satisfy
/// |theta|^2 >= R. One pass over the sample serves all thresholds.
std::vector<std::uint64_t> count_squared_norm_at_least(std::size_t k, std::span<const double> thresholds,
                                                       std::uint64_t count, std::uint64_t seed,
                                                       unsigned workers = 0);

/// Fraction of E_k (uniform measure) where the MLE is at least as good as
/// the posterior mean under `prior`.
MonteCarloEstimate estimate_mle_better_proportion(const ModelDims& dims, const SymmetricPrior& prior,
                                                  std::uint64_t count, std::uint64_t seed,
                                                  unsigned workers = 0);

struct MeanEstimate {
    double mean = 0.0;
    double std_error = 0.0;
};

/// Averages `width` statistics over `count` uniform points on E_k.
/// fn(point, out) writes the statistics of one point into `out`.
template <class Fn>
std::vector<MeanEstimate> simplex_average(std::size_t k, std::size_t width, std::uint64_t count,
                                          std::uint64_t seed, unsigned workers, Fn&& fn) {
    const std::size_t chunks = (count + kSimplexChunk - 1) / kSimplexChunk;
    std::vector<double> sums(chunks * width * 2, 0.0);
    parallel_for_chunks(chunks, workers, [&](std::size_t c) {
        CounterRng rng(seed, c);
        std::vector<double> point(k);
        std::vector<double> values(width);
        const std::uint64_t begin = c * kSimplexChunk;
        const std::uint64_t end = std::min<std::uint64_t>(count, begin + kSimplexChunk);
        double* acc = sums.data() + c * width * 2;
        for (std::uint64_t i = begin; i < end; ++i) {
            draw_simplex_point(rng, point);
            fn(std::span<const double>(point), std::span<double>(values));
            for (std::size_t w = 0; w < width; ++w) {
                acc[2 * w] += values[w];
                acc[2 * w + 1] += values[w] * values[w];
            }
        }
    });
    std::vector<MeanEstimate> out(width);
    const auto N = static_cast<double>(count);
    for (std::size_t w = 0; w < width; ++w) {
        double s = 0.0, ss = 0.0;
        for (std::size_t c = 0; c < chunks; ++c) {
            s += sums[c * width * 2 + 2 * w];
            ss += sums[c * width * 2 + 2 * w + 1];
        }
        const double mean = s / N;
        const double var = count > 1 ? std::max(0.0, (ss - N * mean * mean) / (N - 1.0)) : 0.0;
        out[w] = {mean, std::sqrt(var / N)};
    }
    return out;
}

/// Sample-size rule n = multiplier * k^power; power 0 gives a literal n.
/// Text forms: "100", "k", "2k", "k2" (k^2), "3k4" (3k^4).
struct NRule {
    std::uint64_t multiplier = 1;
    unsigned power = 1;

    std::uint64_t resolve(std::size_t k) const;
    std::string label() const;
    static NRule parse(std::string_view text);

    friend bool operator==(const NRule&, const NRule&) = default;
};

/// n = k, 2k, 3k, 4k, k^2, ..., 4k^4.
std::vector<NRule> default_n_grid();

struct SweepRow {
    std::size_t k = 0;
    NRule rule;
    std::uint64_t n = 0;
    double threshold = 0.0;
    MonteCarloEstimate mc;
};

/// MLE-favoring proportion for every (k, rule) pair. Each k uses one
/// sample of `count` points, drawn with seed derive_seed(seed, k) (reported
/// in the rows), shared across all rules.
std::vector<SweepRow> proportion_sweep(std::span<const std::size_t> ks, std::span<const NRule> rules,
                                       const SymmetricPrior& prior, std::uint64_t count,
                                       std::uint64_t seed, unsigned workers = 0);

} // namespace mnrisk
