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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mnrisk {

/// A point on the probability simplex: k >= 2 non-negative components that
/// sum to one. Inputs whose sum is off by at most kNormalizeTolerance are
/// rescaled; anything further off is rejected.
class ProbVector {
public:
    static constexpr double kNormalizeTolerance = 1e-9;

    explicit ProbVector(std::vector<double> components);

    /// (1/k, ..., 1/k), the simplex point closest to the origin.
    static ProbVector barycenter(std::size_t k);
    /// Unit mass on cell `index`.
    static ProbVector vertex(std::size_t k, std::size_t index);

    std::size_t size() const noexcept { return components_.size(); }
    double operator[](std::size_t i) const { return components_[i]; }
    std::span<const double> components() const noexcept { return components_; }
    /// Sum of squared components.
    double squared_norm() const noexcept { return squared_norm_; }

    auto begin() const noexcept { return components_.begin(); }
    auto end() const noexcept { return components_.end(); }

private:
    std::vector<double> components_;
    double squared_norm_ = 0.0;
};

/// Exchangeable Dirichlet prior Dir(c, ..., c) where the concentration c may
/// depend on the number of cells.
class SymmetricPrior {
public:
    enum class Rule { Constant, InverseK, ScaledInverseK };

    static SymmetricPrior constant(double c);
    static SymmetricPrior uniform() { return constant(1.0); }
    static SymmetricPrior inverse_k();
    static SymmetricPrior scaled_inverse_k(double c);

    /// Accepts "uniform", "inv-k", "const:<C>" and "scaled-inv-k:<C>".
    static SymmetricPrior parse(std::string_view text);

    Rule rule() const noexcept { return rule_; }
    /// C for Constant and ScaledInverseK, 1 for InverseK.
    double scale() const noexcept { return scale_; }

    /// The per-cell concentration for k cells and sample size n.
    double concentration(std::size_t k, std::uint64_t n) const;

    /// Inverse of parse().
    std::string describe() const;

    friend bool operator==(const SymmetricPrior&, const SymmetricPrior&) = default;

private:
    SymmetricPrior(Rule rule, double scale) : rule_(rule), scale_(scale) {}

    Rule rule_;
    double scale_;
};

/// Cell count k >= 2 and sample size n >= 1.
class ModelDims {
public:
    ModelDims(std::size_t k, std::uint64_t n);

    std::size_t k() const noexcept { return k_; }
    std::uint64_t n() const noexcept { return n_; }

private:
    std::size_t k_;
    std::uint64_t n_;
};

} // namespace mnrisk
