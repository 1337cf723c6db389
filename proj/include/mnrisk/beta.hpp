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

namespace mnrisk {

/// Shape parameters of a Beta distribution; both strictly positive.
struct BetaParams {
    BetaParams(double a, double b);

    double a;
    double b;
};

double log_beta_function(double a, double b);

/// Density of Beta(a, b) at x in (0, 1).
double beta_pdf(const BetaParams& p, double x);

/// Regularized incomplete beta I_x(a, b), the Beta(a, b) CDF.
/// Throws DomainError for x outside [0, 1].
double beta_cdf(const BetaParams& p, double x);

/// Median of Beta(a, b): the m with I_m(a, b) = 1/2.
double beta_median(const BetaParams& p);

} // namespace mnrisk
