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

#include "mnrisk/beta.hpp"
#include "mnrisk/error.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <gtest/gtest.h>

#include <cmath>

using namespace mnrisk;

namespace {

// I_x(a, b) by tanh-sinh quadrature. Substituting u = t^a turns the
// t^(a-1) singularity at 0 into a bounded integrand:
// B(a, b) I_x(a, b) = (1/a) * integral_0^(x^a) (1 - u^(1/a))^(b-1) du.
double quadrature_cdf(double a, double b, double x) {
    boost::math::quadrature::tanh_sinh<double> integrator;
    const double log_norm = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b);
    auto integrand = [&](double u) { return std::exp((b - 1.0) * std::log1p(-std::pow(u, 1.0 / a))); };
    return std::exp(log_norm) / a * integrator.integrate(integrand, 0.0, std::pow(x, a));
}

} // namespace

TEST(BetaParams, Validates) {
    EXPECT_THROW(BetaParams(0.0, 1.0), DomainError);
    EXPECT_THROW(BetaParams(1.0, -1.0), DomainError);
    EXPECT_THROW(BetaParams(std::nan(""), 1.0), DomainError);
}

TEST(BetaCdf, Examples) {
    EXPECT_NEAR(beta_cdf(BetaParams(1, 1), 0.3), 0.3, 1e-15);
    EXPECT_NEAR(beta_cdf(BetaParams(2, 2), 0.5), 0.5, 1e-15);
    EXPECT_EQ(beta_cdf(BetaParams(3, 4), 0.0), 0.0);
    EXPECT_EQ(beta_cdf(BetaParams(3, 4), 1.0), 1.0);
    EXPECT_THROW(beta_cdf(BetaParams(3, 4), 1.5), DomainError);
}

TEST(BetaCdf, FractionalShapesAgainstQuadrature) {
    EXPECT_NEAR(beta_cdf(BetaParams(0.1, 0.9), 0.5), quadrature_cdf(0.1, 0.9, 0.5), 1e-10);
    for (double a : {0.002, 0.1, 0.5, 1.3}) {
        for (double b : {0.3, 0.9, 2.5, 20.0}) {
            for (double x : {0.01, 0.2, 0.5, 0.8}) {
                EXPECT_NEAR(beta_cdf(BetaParams(a, b), x), quadrature_cdf(a, b, x), 1e-10) << a << "," << b << "," << x;
            }
        }
    }
}

TEST(BetaCdf, AgreesWithBoostIncompleteBeta) {
    for (double a : {0.002, 0.05, 1.0, 3.5, 50.0, 999.998}) {
        for (double b : {0.002, 0.7, 2.0, 80.0, 1000.0}) {
            for (double x : {1e-6, 0.001, 0.1, 0.45, 0.9, 0.999}) {
                const double expect = boost::math::ibeta(a, b, x);
                EXPECT_NEAR(beta_cdf(BetaParams(a, b), x), expect, 1e-12 + 1e-10 * expect)
                    << a << "," << b << "," << x;
            }
        }
    }
}

TEST(BetaCdf, ReflectionIdentity) {
    for (double a : {0.01, 0.4, 1.0, 7.0, 300.0}) {
        for (double b : {0.02, 1.5, 30.0}) {
            for (int i = 1; i < 20; ++i) {
                const double x = i / 20.0;
                EXPECT_NEAR(beta_cdf(BetaParams(a, b), x) + beta_cdf(BetaParams(b, a), 1.0 - x), 1.0, 1e-12);
            }
        }
    }
}

TEST(BetaMedian, Examples) {
    EXPECT_DOUBLE_EQ(beta_median(BetaParams(1, 1)), 0.5);
    for (double a : {0.01, 0.5, 3.0, 1000.0}) EXPECT_DOUBLE_EQ(beta_median(BetaParams(a, a)), 0.5);
    EXPECT_NEAR(beta_median(BetaParams(1, 2)), 1.0 - std::sqrt(0.5), 1e-12);
}

TEST(BetaMedian, SolvesCdfEquation) {
    for (double k : {2.0, 10.0, 100.0, 500.0}) {
        for (double r : {0.0, 1.0, 5.0, 50.0}) {
            const double n = 1000.0;
            const BetaParams p(1.0 / k + r, n + 1.0 - r - 1.0 / k);
            EXPECT_NEAR(beta_cdf(p, beta_median(p)), 0.5, 1e-12) << k << "," << r;
        }
    }
}

TEST(BetaMedian, AgreesWithBoostInverse) {
    for (double a : {0.002, 0.3, 2.0, 40.0}) {
        for (double b : {0.5, 9.0, 999.0}) {
            const double expect = boost::math::ibeta_inv(a, b, 0.5);
            EXPECT_NEAR(beta_median(BetaParams(a, b)), expect, 1e-8 * expect) << a << "," << b;
        }
    }
}

TEST(BetaMedian, MonotoneInShapes) {
    for (double b : {0.5, 3.0, 100.0}) {
        double prev = 0.0;
        for (double a = 0.01; a < 200.0; a *= 1.7) {
            const double m = beta_median(BetaParams(a, b));
            EXPECT_GT(m, prev) << a << "," << b;
            prev = m;
        }
    }
    for (double a : {0.5, 3.0, 100.0}) {
        double prev = 1.0;
        for (double b = 0.3; b < 200.0; b *= 1.7) {
            const double m = beta_median(BetaParams(a, b));
            EXPECT_LT(m, prev) << a << "," << b;
            prev = m;
        }
    }
}
