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

#include "mnrisk/prob_vector.hpp"

#include "mnrisk/error.hpp"

#include <charconv>
#include <cmath>
#include <numeric>
#include <string>

namespace mnrisk {

ProbVector::ProbVector(std::vector<double> components) : components_(std::move(components)) {
    if (components_.size() < 2) {
        throw DomainError("probability vector needs at least 2 components");
    }
    double sum = 0.0;
    for (double p : components_) {
        if (!std::isfinite(p) || p < 0.0) {
            throw DomainError("probability vector has a negative or non-finite component");
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > kNormalizeTolerance) {
        throw DomainError("probability vector sums to " + std::to_string(sum) + ", not 1");
    }
    if (sum != 1.0) {
        for (double& p : components_) p /= sum;
    }
    squared_norm_ = std::transform_reduce(components_.begin(), components_.end(),
                                          components_.begin(), 0.0);
}

ProbVector ProbVector::barycenter(std::size_t k) {
    if (k < 2) throw DomainError("barycenter needs k >= 2");
    return ProbVector(std::vector<double>(k, 1.0 / static_cast<double>(k)));
}

ProbVector ProbVector::vertex(std::size_t k, std::size_t index) {
    if (k < 2 || index >= k) throw DomainError("vertex index out of range");
    std::vector<double> v(k, 0.0);
    v[index] = 1.0;
    return ProbVector(std::move(v));
}

namespace {

double parse_positive(std::string_view text, std::string_view what) {
    double value = 0.0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || !(value > 0.0) || !std::isfinite(value)) {
        throw DomainError(std::string(what) + " must be a positive number, got '" +
                          std::string(text) + "'");
    }
    return value;
}

std::string shortest(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

} // namespace

SymmetricPrior SymmetricPrior::constant(double c) {
    if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("prior concentration must be positive");
    return {Rule::Constant, c};
}

SymmetricPrior SymmetricPrior::inverse_k() { return {Rule::InverseK, 1.0}; }

SymmetricPrior SymmetricPrior::scaled_inverse_k(double c) {
    if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("prior total mass must be positive");
    return {Rule::ScaledInverseK, c};
}

SymmetricPrior SymmetricPrior::parse(std::string_view text) {
    if (text == "uniform") return uniform();
    if (text == "inv-k") return inverse_k();
    if (text.starts_with("const:")) return constant(parse_positive(text.substr(6), "C"));
    if (text.starts_with("scaled-inv-k:")) {
        return scaled_inverse_k(parse_positive(text.substr(13), "C"));
    }
    throw DomainError("unknown prior '" + std::string(text) +
                      "' (expected uniform, inv-k, const:C or scaled-inv-k:C)");
}

double SymmetricPrior::concentration(std::size_t k, std::uint64_t /*n*/) const {
    const auto kd = static_cast<double>(k);
    switch (rule_) {
    case Rule::Constant: return scale_;
    case Rule::InverseK: return 1.0 / kd;
    case Rule::ScaledInverseK: return scale_ / kd;
    }
    return scale_;
}

std::string SymmetricPrior::describe() const {
    switch (rule_) {
    case Rule::Constant: return scale_ == 1.0 ? "uniform" : "const:" + shortest(scale_);
    case Rule::InverseK: return "inv-k";
    case Rule::ScaledInverseK: return "scaled-inv-k:" + shortest(scale_);
    }
    return {};
}

ModelDims::ModelDims(std::size_t k, std::uint64_t n) : k_(k), n_(n) {
    if (k < 2) throw DomainError("cell count k must be at least 2");
    if (n < 1) throw DomainError("sample size n must be at least 1");
}

} // namespace mnrisk
