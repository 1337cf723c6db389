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

#include "mnrisk/error.hpp"
#include "mnrisk/prob_vector.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

using namespace mnrisk;

TEST(ProbVector, KeepsExactInput) {
    const ProbVector p({0.5, 0.3, 0.2});
    EXPECT_EQ(p.size(), 3u);
    EXPECT_DOUBLE_EQ(p[1], 0.3);
    EXPECT_NEAR(p.squared_norm(), 0.38, 1e-15);
}

TEST(ProbVector, RenormalizesSmallDrift) {
    const ProbVector p({0.5 + 4e-10, 0.5});
    const double sum = std::accumulate(p.begin(), p.end(), 0.0);
    EXPECT_NEAR(sum, 1.0, 1e-12);
}

TEST(ProbVector, RejectsLargeDrift) {
    EXPECT_THROW(ProbVector({0.5, 0.5 + 1e-6}), DomainError);
    EXPECT_THROW(ProbVector({0.6, 0.3}), DomainError);
}

TEST(ProbVector, RejectsBadComponents) {
    EXPECT_THROW(ProbVector({1.0}), DomainError);
    EXPECT_THROW(ProbVector({1.2, -0.2}), DomainError);
    EXPECT_THROW(ProbVector({std::nan(""), 1.0}), DomainError);
}

TEST(ProbVector, BarycenterAndVertex) {
    const auto e0 = ProbVector::barycenter(4);
    EXPECT_DOUBLE_EQ(e0.squared_norm(), 0.25);
    const auto v = ProbVector::vertex(5, 2);
    EXPECT_EQ(v[2], 1.0);
    EXPECT_EQ(v[0], 0.0);
    EXPECT_EQ(v.squared_norm(), 1.0);
    EXPECT_THROW(ProbVector::vertex(3, 3), DomainError);
}

TEST(SymmetricPrior, Resolution) {
    EXPECT_DOUBLE_EQ(SymmetricPrior::inverse_k().concentration(8, 3), 0.125);
    EXPECT_DOUBLE_EQ(SymmetricPrior::scaled_inverse_k(30).concentration(10, 3), 3.0);
    EXPECT_DOUBLE_EQ(SymmetricPrior::constant(2.5).concentration(7, 100), 2.5);
    EXPECT_DOUBLE_EQ(SymmetricPrior::uniform().concentration(7, 100), 1.0);
    EXPECT_THROW(SymmetricPrior::constant(0.0), DomainError);
    EXPECT_THROW(SymmetricPrior::scaled_inverse_k(-1.0), DomainError);
}

TEST(SymmetricPrior, ParseRoundTrip) {
    for (const auto* text : {"uniform", "inv-k", "const:3", "scaled-inv-k:30", "const:0.5"}) {
        const auto p = SymmetricPrior::parse(text);
        EXPECT_EQ(SymmetricPrior::parse(p.describe()), p) << text;
    }
    EXPECT_EQ(SymmetricPrior::parse("const:1"), SymmetricPrior::uniform());
    EXPECT_THROW(SymmetricPrior::parse("dirichlet"), DomainError);
    EXPECT_THROW(SymmetricPrior::parse("const:"), DomainError);
    EXPECT_THROW(SymmetricPrior::parse("const:-2"), DomainError);
}

TEST(ModelDims, Validates) {
    EXPECT_NO_THROW(ModelDims(2, 1));
    EXPECT_THROW(ModelDims(1, 10), DomainError);
    EXPECT_THROW(ModelDims(3, 0), DomainError);
}
