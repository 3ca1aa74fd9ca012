// Copyright 2026 The lambda-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <set>

#include "dense_oracle.h"
#include "lambda_forge/polytope.h"
#include "lambda_forge/stabilizer.h"

using namespace lambda_forge;

namespace {

// 2^n prod_{k=1}^{n} (2^k + 1).
size_t stabilizer_count(int n) {
    size_t c = size_t(1) << n;
    for (int k = 1; k <= n; k++) c *= (size_t(1) << k) + 1;
    return c;
}

}  // namespace

TEST(Stabilizer, CountsMatchFormula) {
    EXPECT_EQ(stabilizer_states(1).size(), 6u);
    EXPECT_EQ(stabilizer_states(2).size(), 60u);
    EXPECT_EQ(stabilizer_states(3).size(), 1080u);
    for (int n = 1; n <= 3; n++) EXPECT_EQ(stabilizer_states(n).size(), stabilizer_count(n));
}

TEST(Stabilizer, ProjectorsArePureAndDistinct) {
    for (int n = 1; n <= 2; n++) {
        std::set<QOperator> seen;
        for (const auto &st : stabilizer_states(n)) {
            QOperator p = stabilizer_projector(st);
            EXPECT_EQ(p.trace(), FieldElem(1));
            EXPECT_EQ(op_product(p, p), p);
            dense::Mat m = dense_matrix(p);
            EXPECT_TRUE(dense::close(m * m, m));
            seen.insert(p);
        }
        EXPECT_EQ(seen.size(), stabilizer_states(n).size());
    }
}

TEST(Stabilizer, ProjectorStabilizedByGenerators) {
    for (const auto &st : stabilizer_states(2)) {
        dense::Mat p = dense_matrix(stabilizer_projector(st));
        for (const auto &v : st.space.elements()) {
            double sign = st.values.at(v) ? -1.0 : 1.0;
            EXPECT_TRUE(dense::close(sign * pauli_matrix(v) * p, p)) << st.label() << " " << v.label();
        }
    }
}

TEST(Stabilizer, ConsistencyRejectsBadSigns) {
    Subspace j = Subspace::span(2, {PauliPoint::from_label("XX"), PauliPoint::from_label("ZZ")});
    auto all = enumerate_consistent_assignments(j);
    EXPECT_EQ(all.size(), 4u);
    ValueAssignment bad = all[0];
    bad[PauliPoint::from_label("YY")] ^= 1;
    EXPECT_FALSE(is_consistent(bad));
    // XX * ZZ = -YY, so +XX, +ZZ forces YY to carry value 1.
    ValueAssignment g = assignment_from_generators(j, {0, 0});
    EXPECT_EQ(g.at(PauliPoint::from_label("YY")), 1);
}

TEST(Stabilizer, GeneratorsRoundTrip) {
    for (const auto &st : stabilizer_states(2)) {
        EXPECT_EQ(StabilizerState::from_generators(st.generator_labels()), st);
    }
    StabilizerState bell = StabilizerState::from_generators({"-ZZ", "-XX"});
    EXPECT_EQ(bell.values.at(PauliPoint::from_label("YY")), 1);
    EXPECT_THROW(StabilizerState::from_generators({"XI", "ZI"}), std::invalid_argument);
}

TEST(Stabilizer, ConvolutionOnDisjointSupports) {
    Subspace j = Subspace::span(2, {PauliPoint::from_label("IX")});
    ValueAssignment r = assignment_from_generators(j, {1});
    Subspace ip = Subspace::span(2, {PauliPoint::from_label("ZI")});
    ValueAssignment sp = assignment_from_generators(ip, {0});
    ValueAssignment c = convolve_assignment(j, r, ip, sp);
    EXPECT_EQ(c.at(PauliPoint::from_label("ZX")), 1);
    EXPECT_TRUE(is_consistent(c));
}
