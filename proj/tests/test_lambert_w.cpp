// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The irswpcn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <limits>
#include <numbers>

#include <gtest/gtest.h>

#include "irswpcn/lambert_w.hpp"

namespace {

using irswpcn::lambert_w0;
constexpr double kE = std::numbers::e;

// |w e^w - x| relative to max(1, |x|), evaluated in log form for huge x.
double round_trip_residual(double x, double w) {
    if (x > 1e300) return std::abs(std::expm1(w + std::log(w) - std::log(x)));
    return std::abs(w * std::exp(w) - x) / std::max(1.0, std::abs(x));
}

TEST(LambertW, ExactPoints) {
    EXPECT_EQ(lambert_w0(0.0), 0.0);
    EXPECT_NEAR(lambert_w0(kE), 1.0, 1e-12);
    EXPECT_NEAR(lambert_w0(-1.0 / kE), -1.0, 1e-12);
    EXPECT_NEAR(lambert_w0(2.0 * std::exp(2.0)), 2.0, 1e-12);
    EXPECT_NEAR(lambert_w0(-std::exp(-0.5) / 2.0), -0.5, 1e-12);
}

TEST(LambertW, RoundTripLogSpaced) {
    for (int i = 0; i <= 6000; ++i) {
        const double x = std::pow(10.0, -300.0 + 0.1 * i);
        const double w = lambert_w0(x);
        // Relative round trip on the tiny end too.
        const double rel = x > 1e300 ? round_trip_residual(x, w) : std::abs(w * std::exp(w) - x) / x;
        ASSERT_LE(rel, 1e-12) << "x = " << x;
    }
}

TEST(LambertW, RoundTripLinearNearBranch) {
    for (int i = 0; i <= 20000; ++i) {
        const double x = -1.0 / kE + i * (1.0 + 1.0 / kE) / 20000.0;
        const double w = lambert_w0(x);
        ASSERT_GE(w, -1.0);
        ASSERT_LE(round_trip_residual(x, w), 1e-12) << "x = " << x;
    }
}

TEST(LambertW, Monotone) {
    double prev = lambert_w0(-1.0 / kE);
    for (int i = 1; i <= 5000; ++i) {
        const double x = -1.0 / kE + std::pow(10.0, -12.0 + 0.005 * i);
        const double w = lambert_w0(x);
        ASSERT_LE(prev, w) << "x = " << x;
        prev = w;
    }
}

TEST(LambertW, AsymptoteForLargeArguments) {
    for (double x = 1e10; x < 1e300; x *= 1e10) {
        const double w = lambert_w0(x);
        const double approx = std::log(x) - std::log(std::log(x));
        EXPECT_LE(std::abs(w - approx) / w, 0.1) << "x = " << x;
    }
}

TEST(LambertW, BranchClampAndDomain) {
    EXPECT_EQ(lambert_w0(-1.0 / kE - 5e-13), -1.0);
    EXPECT_THROW(lambert_w0(-1.0 / kE - 1e-9), irswpcn::DomainError);
    EXPECT_THROW(lambert_w0(-1.0), irswpcn::DomainError);
    EXPECT_TRUE(std::isnan(lambert_w0(std::numeric_limits<double>::quiet_NaN())));
    EXPECT_EQ(lambert_w0(std::numeric_limits<double>::infinity()), std::numeric_limits<double>::infinity());
}

TEST(LambertW, FromLogMatchesDirect) {
    for (double lx : {-5.0, 0.0, 1.0, 2.0, 10.0, 100.0, 600.0}) {
        const double direct = lambert_w0(std::exp(lx));
        EXPECT_NEAR(irswpcn::lambert_w0_from_log(lx), direct, 1e-13 * std::max(1.0, direct));
    }
    // e^2000 overflows; check w + ln w = L instead.
    const double w = irswpcn::lambert_w0_from_log(2000.0);
    EXPECT_NEAR(w + std::log(w), 2000.0, 1e-12 * 2000.0);
}

// The shifted form must agree with W((c-1)/e) where the latter is accurate,
// and satisfy (y - 1) e^y = c - 1 where it is not.
TEST(LambertW, ShiftedAgreesWithDirect) {
    for (double c : {0.3, 0.5, 0.9, 1.0, 1.5, 1.0 + kE * kE, 100.0, 1e6, 1e14}) {
        const auto s = irswpcn::lambert_w0_shifted(c);
        EXPECT_NEAR(s.w, lambert_w0((c - 1.0) / kE), 1e-14 * std::max(1.0, std::abs(s.w))) << c;
        EXPECT_DOUBLE_EQ(s.one_plus_w, 1.0 + s.w);
    }
}

TEST(LambertW, ShiftedSmallCoefficientsKeepRelativePrecision) {
    for (double c : {1e-30, 1e-20, 1e-12, 1e-6, 1e-3, 0.1, 0.2499}) {
        const auto s = irswpcn::lambert_w0_shifted(c);
        const double y = s.one_plus_w;
        // (y - 1) e^y + 1 = sum_{n>=2} (n-1) y^n / n!, summed independently.
        long double term = y;
        long double sum = 0.0L;
        for (int n = 2; n < 60; ++n) {
            term *= static_cast<long double>(y) / n;
            sum += (n - 1) * term;
        }
        EXPECT_LE(std::abs(static_cast<double>(sum) - c) / c, 1e-13) << "c = " << c;
    }
}

TEST(LambertW, ShiftedHugeCoefficients) {
    for (double c : {2e15, 1e20, 1e100, 1e300}) {
        const auto s = irswpcn::lambert_w0_shifted(c);
        // w + ln w = ln((c - 1)/e)
        const double target = std::log(c) - 1.0;
        EXPECT_NEAR(s.w + std::log(s.w), target, 1e-13 * target) << "c = " << c;
    }
    EXPECT_EQ(irswpcn::lambert_w0_shifted(0.0).w, -1.0);
    EXPECT_THROW(irswpcn::lambert_w0_shifted(-1.0), irswpcn::DomainError);
}

}  // namespace
