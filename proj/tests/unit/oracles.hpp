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

// Brute-force reference computations used to check the closed forms. They
// draw from std::mt19937_64 so they share no code with the library sampler.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

struct Stat {
    double mean = 0.0;
    double std_error = 0.0;
};

class Accumulator {
public:
    void add(double x) {
        ++n_;
        const double d = x - mean_;
        mean_ += d / static_cast<double>(n_);
        m2_ += d * (x - mean_);
    }
    Stat stat() const {
        const double var = n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0;
        return {mean_, std::sqrt(var / static_cast<double>(n_))};
    }

private:
    std::uint64_t n_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

/// Multinomial(n, theta) counts by n categorical draws.
inline void draw_multinomial(std::mt19937_64& gen, const std::vector<double>& theta, std::uint64_t n,
                             std::vector<std::uint64_t>& counts) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    counts.assign(theta.size(), 0);
    for (std::uint64_t i = 0; i < n; ++i) {
        double u = unif(gen);
        std::size_t j = 0;
        while (j + 1 < theta.size() && u >= theta[j]) u -= theta[j++];
        ++counts[j];
    }
}

/// Uniform point on the simplex from sorted uniforms (spacings), a
/// construction independent of the library's exponential method.
inline std::vector<double> spacings_point(std::mt19937_64& gen, std::size_t k) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<double> cuts(k - 1);
    for (auto& c : cuts) c = unif(gen);
    std::sort(cuts.begin(), cuts.end());
    std::vector<double> theta(k);
    double prev = 0.0;
    for (std::size_t j = 0; j + 1 < k; ++j) {
        theta[j] = cuts[j] - prev;
        prev = cuts[j];
    }
    theta[k - 1] = 1.0 - prev;
    return theta;
}

} // namespace oracle
