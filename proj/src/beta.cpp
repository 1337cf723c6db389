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
#include "mnrisk/log_gamma.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mnrisk {

namespace {

constexpr double kTiny = 1e-300;
constexpr double kCfEpsilon = 1e-16;
constexpr int kCfMaxIterations = 20000;

// Modified Lentz evaluation of the continued fraction for I_x(a, b); converges
// quickly for x < (a + 1) / (a + b + 2).
double incomplete_beta_fraction(double a, double b, double x) {
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kCfMaxIterations; ++m) {
        const double md = m;
        const double m2 = 2.0 * md;
        double aa = md * (b - md) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + md) * (qab + md) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double step = d * c;
        h *= step;
        if (std::abs(step - 1.0) < kCfEpsilon) return h;
    }
    throw DomainError("incomplete beta continued fraction did not converge");
}

// I_x(a, b) given x and y = 1 - x separately, so that points very close to
// 1 keep their precision.
double regularized_incomplete_beta(double a, double b, double x, double y, double log_beta) {
    if (x <= 0.0) return 0.0;
    if (y <= 0.0) return 1.0;
    const double log_front = a * std::log(x) + b * std::log(y) - log_beta;
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return std::exp(log_front) * incomplete_beta_fraction(a, b, x) / a;
    }
    return 1.0 - std::exp(log_front) * incomplete_beta_fraction(b, a, y) / b;
}

} // namespace

BetaParams::BetaParams(double a_, double b_) : a(a_), b(b_) {
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
        throw DomainError("Beta shape parameters must be positive and finite");
    }
}

double log_beta_function(double a, double b) {
    return log_gamma(a) + log_gamma(b) - log_gamma(a + b);
}

double beta_pdf(const BetaParams& p, double x) {
    if (x < 0.0 || x > 1.0) throw DomainError("Beta density argument outside [0, 1]");
    if (x == 0.0 || x == 1.0) {
        const double shape = x == 0.0 ? p.a : p.b;
        if (shape < 1.0) return std::numeric_limits<double>::infinity();
        if (shape > 1.0) return 0.0;
        return std::exp(-log_beta_function(p.a, p.b));
    }
    return std::exp((p.a - 1.0) * std::log(x) + (p.b - 1.0) * std::log1p(-x) -
                    log_beta_function(p.a, p.b));
}

double beta_cdf(const BetaParams& p, double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError("Beta CDF argument outside [0, 1]");
    return regularized_incomplete_beta(p.a, p.b, x, 1.0 - x, log_beta_function(p.a, p.b));
}

double beta_median(const BetaParams& p) {
    if (p.a == p.b) return 0.5;
    const double log_beta = log_beta_function(p.a, p.b);

    // Root-find on the log-odds scale u = log(x / (1 - x)); medians of
    // shapes like Beta(1/500, 1000) sit near 1e-150.
    auto point = [](double u, double& x, double& y) {
        if (u < 0.0) {
            const double e = std::exp(u);
            x = e / (1.0 + e);
            y = 1.0 / (1.0 + e);
        } else {
            const double e = std::exp(-u);
            x = 1.0 / (1.0 + e);
            y = e / (1.0 + e);
        }
    };

    // Starting guess: the usual approximation for shapes >= 1, otherwise the
    // leading-order tail behaviour I_x ~ x^a / (a B(a, b)).
    double guess;
    if (p.a >= 1.0 && p.b >= 1.0) {
        guess = std::log((p.a - 1.0 / 3.0) / (p.b - 1.0 / 3.0));
    } else if (p.a < p.b) {
        const double log_x = (std::log(0.5 * p.a) + log_beta) / p.a;
        guess = log_x - std::log1p(-std::exp(std::min(log_x, -1e-12)));
    } else {
        const double log_y = (std::log(0.5 * p.b) + log_beta) / p.b;
        guess = std::log1p(-std::exp(std::min(log_y, -1e-12))) - log_y;
    }

    double lo = -745.0;
    double hi = 745.0;
    double u = std::clamp(guess, lo + 1.0, hi - 1.0);
    double best_u = u;
    double best_err = std::numeric_limits<double>::infinity();
    for (int iter = 0; iter < 300; ++iter) {
        double x, y;
        point(u, x, y);
        const double f = regularized_incomplete_beta(p.a, p.b, x, y, log_beta) - 0.5;
        if (std::abs(f) < best_err) {
            best_err = std::abs(f);
            best_u = u;
        }
        if (std::abs(f) <= 1e-15) break;
        (f < 0.0 ? lo : hi) = u;
        if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(u))) break;
        // dI/du = x^a y^b / B(a, b).
        const double slope = std::exp(p.a * std::log(x) + p.b * std::log(y) - log_beta);
        double next = u - f / slope;
        if (!(slope > 0.0) || !std::isfinite(next) || next <= lo || next >= hi) {
            next = 0.5 * (lo + hi);
        }
        u = next;
    }
    double x, y;
    point(best_u, x, y);
    return x;
}

} // namespace mnrisk
