// Copyright 2026 The lambda-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "lambda_forge/field.h"

using namespace lambda_forge;

TEST(Field, RationalCanonicalForm) {
    EXPECT_EQ(FieldElem::frac(2, 2), FieldElem(1));
    EXPECT_EQ(FieldElem::frac(-3, 6), FieldElem::frac(1, -2));
    EXPECT_EQ(FieldElem::frac(4, 6).to_string(), "2/3");
}

TEST(Field, ParseRational) {
    EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
    EXPECT_EQ(parse_rational("-2/4"), Rational(-1, 2));
    EXPECT_EQ(parse_rational("7"), Rational(7));
    EXPECT_THROW(parse_rational("1.5"), std::invalid_argument);
    EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Field, SqrtTwoSquares) {
    FieldElem r = FieldElem::sqrt2();
    EXPECT_EQ(r * r, FieldElem(2));
    EXPECT_FALSE(r.is_rational());
    EXPECT_EQ((r * r).is_rational(), true);
    EXPECT_EQ(r.inverse(), r * FieldElem::frac(1, 2));
}

TEST(Field, SignMatchesDouble) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> d(-20, 20);
    for (int it = 0; it < 2000; it++) {
        FieldElem x(Rational(d(rng), 7), Rational(d(rng), 5));
        double v = x.to_double();
        int expect = v > 0 ? 1 : (v < 0 ? -1 : 0);
        if (std::fabs(v) > 1e-12) EXPECT_EQ(x.sign(), expect) << x.to_string();
    }
    EXPECT_EQ(FieldElem(Rational(3), Rational(-2)).sign(), 1);   // 3 - 2 sqrt2 > 0
    EXPECT_EQ(FieldElem(Rational(-3), Rational(2)).sign(), -1);
    EXPECT_EQ(FieldElem(Rational(1), Rational(-1)).sign(), -1);  // 1 - sqrt2 < 0
}

TEST(Field, FieldAxioms) {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<long> d(-9, 9);
    auto rnd = [&]() { return FieldElem(Rational(d(rng), 1 + (rng() % 4)), Rational(d(rng), 1 + (rng() % 4))); };
    for (int it = 0; it < 300; it++) {
        FieldElem a = rnd(), b = rnd(), c = rnd();
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a * b) * c, a * (b * c));
        if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), FieldElem(1));
        EXPECT_EQ(a - a, FieldElem(0));
        EXPECT_EQ(a.scaled_pow2(3), a * FieldElem(8));
        EXPECT_EQ(a.scaled_pow2(-2), a / FieldElem(4));
    }
}

TEST(Field, StringRendering) {
    EXPECT_EQ(FieldElem(Rational(1, 2), Rational(-1, 4)).to_string(), "1/2-1/4*sqrt2");
    EXPECT_EQ(FieldElem(0).to_string(), "0");
}
