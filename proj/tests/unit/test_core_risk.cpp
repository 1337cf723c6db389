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
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace mnrisk;

namespace {

std::vector<double> random_theta(std::mt19937_64& gen, std::size_t k) {
    return oracle::spacings_point(gen, k);
}

} // namespace

TEST(MleSquaredRisk, Examples) {
    EXPECT_EQ(mle_squared_risk(ProbVector({1.0, 0.0, 0.0}), 10), 0.0);
    EXPECT_NEAR(mle_squared_risk(ProbVector({0.5, 0.5}), 10), 0.05, 1e-15);
    EXPECT_NEAR(mle_squared_risk(ProbVector({0.5, 0.3, 0.2}), 10), 0.062, 1e-15);
}

TEST(MleSquaredRisk, MatchesMultinomialSimulation) {
    const std::vector<double> theta{0.5, 0.3, 0.2};
    const std::uint64_t n = 10;
    std::mt19937_64 gen(11);
    oracle::Accumulator acc;
    std::vector<std::uint64_t> counts;
    for (int rep = 0; rep < 1000000; ++rep) {
        oracle::draw_multinomial(gen, theta, n, counts);
        double loss = 0.0;
        for (std::size_t j = 0; j < theta.size(); ++j) {
            const double d = static_cast<double>(counts[j]) / n - theta[j];
            loss += d * d;
        }
        acc.add(loss);
    }
    const auto s = acc.stat();
    EXPECT_LE(std::abs(s.mean - 0.062), 3.0 * s.std_error);
}

TEST(BayesSquaredRisk, AtBarycenter) {
    for (std::size_t k : {2u, 5u, 30u}) {
        for (double c : {0.1, 1.0, 4.0}) {
            const std::uint64_t n = 17;
            const double expect = n * (1.0 - 1.0 / k) / std::pow(n + k * c, 2);
            EXPECT_NEAR(bayes_squared_risk(ProbVector::barycenter(k), n, SymmetricPrior::constant(c)), expect,
                        1e-15);
        }
    }
}

TEST(BayesSquaredRisk, AtVertex) {
    const std::size_t k = 6;
    const std::uint64_t n = 9;
    const double c = 0.7;
    const double expect = k * c * c * (k - 1) / std::pow(n + k * c, 2);
    EXPECT_NEAR(bayes_squared_risk(ProbVector::vertex(k, 0), n, SymmetricPrior::constant(c)), expect, 1e-15);
}

TEST(BayesSquaredRisk, VanishingPriorIsMle) {
    const ProbVector theta({0.1, 0.2, 0.3, 0.4});
    EXPECT_NEAR(bayes_squared_risk(theta, 25, SymmetricPrior::constant(1e-8)), mle_squared_risk(theta, 25), 1e-9);
}

TEST(BayesSquaredRisk, AffineInSquaredNorm) {
    const std::size_t k = 4;
    const std::uint64_t n = 12;
    const double c = 1.5;
    const auto prior = SymmetricPrior::constant(c);
    const ProbVector a({0.25, 0.25, 0.25, 0.25});
    const ProbVector b({0.7, 0.1, 0.1, 0.1});
    const double slope = (bayes_squared_risk(b, n, prior) - bayes_squared_risk(a, n, prior)) /
                         (b.squared_norm() - a.squared_norm());
    EXPECT_NEAR(slope, (k * k * c * c - n) / std::pow(n + k * c, 2), 1e-14);
}

TEST(DominanceThreshold, InverseKExample) {
    EXPECT_NEAR(dominance_threshold(ModelDims(5, 10), SymmetricPrior::inverse_k()), 23.0 / 31.0, 1e-15);
}

TEST(DominanceThreshold, HalfAtBoundaryConcentration) {
    for (std::size_t k : {5u, 10u, 40u}) {
        for (std::uint64_t n : {10u, 50u, 1000u}) {
            const double c = 2.0 * n / (static_cast<double>(n) * (k - 2.0) - k);
            EXPECT_NEAR(dominance_threshold(k, n, c), 0.5, 1e-14) << k << "," << n;
        }
    }
}

TEST(DominanceThreshold, VanishingPrior) {
    EXPECT_NEAR(dominance_threshold(10, 100, 1e-8), 1.0, 1e-7);
}

TEST(DominanceThreshold, DecreasingInConcentration) {
    for (std::size_t k : {2u, 3u, 10u, 100u}) {
        for (std::uint64_t n : {1u, 10u, 1000u}) {
            double prev = dominance_threshold(k, n, 1e-3);
            for (double c = 2e-3; c < 20.0; c *= 1.5) {
                const double R = dominance_threshold(k, n, c);
                EXPECT_LT(R, prev) << k << "," << n << "," << c;
                prev = R;
            }
        }
    }
}

TEST(DominanceThreshold, RejectsBadInput) {
    EXPECT_THROW(dominance_threshold(10, 10, 0.0), DomainError);
    EXPECT_THROW(dominance_threshold(1, 10, 1.0), DomainError);
}

TEST(CompareAt, Examples) {
    for (auto prior : {SymmetricPrior::uniform(), SymmetricPrior::inverse_k(), SymmetricPrior::constant(50)}) {
        EXPECT_FALSE(compare_at(ProbVector::barycenter(7), ModelDims(7, 3), prior).mle_wins);
    }
    const auto c = compare_at(ProbVector::vertex(10, 0), ModelDims(10, 20), SymmetricPrior::uniform());
    EXPECT_NEAR(c.threshold, 0.28, 1e-15);
    EXPECT_TRUE(c.mle_wins);
    EXPECT_EQ(c.mle_risk, 0.0);
}

TEST(CompareAt, DimensionMismatch) {
    EXPECT_THROW(compare_at(ProbVector::barycenter(3), ModelDims(4, 10), SymmetricPrior::uniform()),
                 DomainError);
}

TEST(CompareAt, ThreeWayConsistency) {
    std::mt19937_64 gen(3);
    std::uniform_int_distribution<std::size_t> kd(2, 40);
    std::uniform_int_distribution<std::uint64_t> nd(1, 500);
    std::uniform_real_distribution<double> cd(0.01, 5.0);
    for (int i = 0; i < 10000; ++i) {
        const auto k = kd(gen);
        const auto n = nd(gen);
        const auto prior = SymmetricPrior::constant(cd(gen));
        const ProbVector theta(random_theta(gen, k));
        const auto cmp = compare_at(theta, ModelDims(k, n), prior);
        EXPECT_EQ(cmp.mle_wins, cmp.mle_risk <= cmp.bayes_risk);
        EXPECT_EQ(cmp.mle_wins, theta.squared_norm() >= cmp.threshold);
    }
}

TEST(Margins, SignMatchesThreshold) {
    std::mt19937_64 gen(5);
    std::uniform_int_distribution<std::size_t> kd(2, 30);
    std::uniform_int_distribution<std::uint64_t> nd(1, 300);
    std::uniform_real_distribution<double> sd(0.0, 1.0);
    for (int i = 0; i < 5000; ++i) {
        const auto k = kd(gen);
        const ModelDims dims(k, nd(gen));
        const double s = 1.0 / k + (1.0 - 1.0 / k) * sd(gen);
        const double c = 0.05 + 3.0 * sd(gen);
        const double Ru = dominance_threshold(dims, SymmetricPrior::uniform());
        EXPECT_EQ(uniform_prior_margin(s, dims) >= 0.0, s >= Ru);
        EXPECT_NEAR(Ru, (3.0 * dims.n() + k) / (1.0 * dims.n() * k + 2.0 * dims.n() + k), 1e-14);
        const double Rs = dominance_threshold(dims, SymmetricPrior::scaled_inverse_k(c));
        if (std::abs(s - Rs) > 1e-12) EXPECT_EQ(scaled_prior_margin(s, dims, c) >= 0.0, s >= Rs);
        const double Rc = dominance_threshold(dims, SymmetricPrior::constant(c));
        if (std::abs(s - Rc) > 1e-12) EXPECT_EQ(constant_prior_margin(s, dims, c) >= 0.0, s >= Rc);
    }
}

TEST(SquaredRisks, MatchMultinomialSimulationOnSmallInstances) {
    std::mt19937_64 gen(2024);
    std::uniform_int_distribution<std::size_t> kd(2, 6);
    std::uniform_int_distribution<std::uint64_t> nd(1, 20);
    std::uniform_real_distribution<double> cd(0.1, 3.0);
    for (int inst = 0; inst < 5; ++inst) {
        const auto k = kd(gen);
        const auto n = nd(gen);
        const double c = cd(gen);
        const auto theta = random_theta(gen, k);
        oracle::Accumulator mle, bayes;
        std::vector<std::uint64_t> counts;
        for (int rep = 0; rep < 200000; ++rep) {
            oracle::draw_multinomial(gen, theta, n, counts);
            double lm = 0.0, lb = 0.0;
            for (std::size_t j = 0; j < k; ++j) {
                const double dm = static_cast<double>(counts[j]) / n - theta[j];
                const double db = (counts[j] + c) / (n + k * c) - theta[j];
                lm += dm * dm;
                lb += db * db;
            }
            mle.add(lm);
            bayes.add(lb);
        }
        const ProbVector p(theta);
        const auto sm = mle.stat();
        const auto sb = bayes.stat();
        EXPECT_LE(std::abs(sm.mean - mle_squared_risk(p, n)), 3.0 * sm.std_error) << inst;
        EXPECT_LE(std::abs(sb.mean - bayes_squared_risk(p, n, SymmetricPrior::constant(c))), 3.0 * sb.std_error)
            << inst;
    }
}
