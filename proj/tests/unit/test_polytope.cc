// Copyright 2026 The lambda-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "dense_oracle.h"
#include "lambda_forge/orbit2.h"
#include "lambda_forge/polytope.h"

using namespace lambda_forge;

namespace {

QOperator a0() { return single_qubit_vertex(0, 0, 0); }

QOperator t_state() {
    FieldElem h = FieldElem::sqrt2() * FieldElem::frac(1, 2);
    return QOperator::from_labels({{"I", FieldElem(1)}, {"X", h}, {"Y", h}});
}

}  // namespace

TEST(Polytope, SingleQubitVerticesAreTheEightCorners) {
    auto verts = enumerate_vertices_n1();
    std::set<QOperator> got(verts.begin(), verts.end()), expect;
    for (int b = 0; b < 8; b++) expect.insert(single_qubit_vertex(b & 1, (b >> 1) & 1, (b >> 2) & 1));
    EXPECT_EQ(verts.size(), 8u);
    EXPECT_EQ(got, expect);
}

TEST(Polytope, CornerIsDenseOneHalfPlusPaulis) {
    dense::Mat expect = (dense::Mat::Identity(2, 2) + pauli_matrix(PauliPoint::from_label("X")) +
                         pauli_matrix(PauliPoint::from_label("Y")) + pauli_matrix(PauliPoint::from_label("Z"))) /
                        2.0;
    EXPECT_TRUE(dense::close(dense_matrix(a0()), expect));
}

TEST(Polytope, TensorOfCornersLeavesPolytope) {
    QOperator aa = op_tensor(a0(), a0());
    StabilizerState bell = StabilizerState::from_generators({"-ZZ", "-XX"});
    FieldElem v = trace_inner(aa, stabilizer_projector(bell));
    EXPECT_EQ(v, FieldElem::frac(-1, 2));
    dense::Mat p = dense_matrix(stabilizer_projector(bell));
    EXPECT_NEAR((dense_matrix(aa) * p).trace().real(), -0.5, 1e-12);
    auto cert = membership(aa);
    ASSERT_FALSE(cert.member());
    EXPECT_EQ(cert.min_value(), FieldElem::frac(-1, 2));
    // The minimum is attained by several facets; the reported one must attain it.
    EXPECT_EQ(trace_inner(aa, stabilizer_projector(cert.state(*cert.violation))), FieldElem::frac(-1, 2));
    bool named = false;
    for (size_t i : cert.minimizers()) {
        EXPECT_EQ(cert.facet_values[i], FieldElem::frac(-1, 2));
        named = named || cert.state(i) == bell;
    }
    EXPECT_TRUE(named);
}

TEST(Polytope, StabilizerStatesAndMixturesAreMembers) {
    for (const auto &st : stabilizer_states(2)) EXPECT_TRUE(membership(stabilizer_projector(st)).member());
    EXPECT_TRUE(membership(QOperator::maximally_mixed(2)).member());
    EXPECT_TRUE(membership(t_state()).member());
}

TEST(Polytope, VertexCertification) {
    for (const auto &v : enumerate_vertices_n1()) {
        auto rep = is_vertex(v);
        EXPECT_TRUE(rep.vertex);
        EXPECT_EQ(rep.needed, 3);
    }
    auto mm = is_vertex(QOperator::maximally_mixed(1));
    EXPECT_FALSE(mm.vertex);
    EXPECT_EQ(mm.active, 0u);
    // A pure stabilizer state lies on 15 facets whose traceless parts span only 9 dimensions.
    for (size_t i : {0u, 7u, 59u}) {
        auto rep = is_vertex(stabilizer_projector(stabilizer_states(2)[i]));
        EXPECT_FALSE(rep.vertex);
        EXPECT_EQ(rep.active, 15u);
        EXPECT_EQ(rep.rank, 9);
    }
}

TEST(Polytope, FacetValuesMatchDense) {
    std::mt19937_64 rng(41);
    for (int it = 0; it < 10; it++) {
        QOperator a(2);
        a.set(PauliPoint::zero(2), FieldElem(1));
        for (const auto &v : nonzero_points(2)) a.set(v, FieldElem::frac(long(rng() % 7) - 3, 4));
        auto cert = membership(a);
        const auto &states = stabilizer_states(2);
        for (size_t i = 0; i < states.size(); i++) {
            double d = (dense_matrix(a) * dense_matrix(stabilizer_projector(states[i]))).trace().real();
            EXPECT_NEAR(cert.facet_values[i].to_double(), d, 1e-12);
        }
    }
}

TEST(Polytope, DecomposeTStateNeedsIrrationalWeights) {
    QOperator t = t_state();
    auto pool = enumerate_vertices_n1();
    Decomposition dec = decompose(t, pool);
    ASSERT_TRUE(dec.feasible);
    QOperator sum(1);
    FieldElem total(0);
    bool irrational = false;
    for (size_t i = 0; i < pool.size(); i++) {
        EXPECT_GE(dec.weights[i], FieldElem(0));
        sum = sum + pool[i].scaled(dec.weights[i]);
        total += dec.weights[i];
        irrational = irrational || !dec.weights[i].is_rational();
    }
    EXPECT_EQ(sum, t);
    EXPECT_EQ(total, FieldElem(1));
    EXPECT_TRUE(irrational);
}

TEST(Polytope, DecomposeOutsideHullInfeasible) {
    QOperator far = QOperator::from_labels({{"I", FieldElem(1)}, {"X", FieldElem(2)}});
    EXPECT_FALSE(decompose(far, enumerate_vertices_n1()).feasible);
}

TEST(Polytope, RationalRank) {
    EXPECT_EQ(rational_rank({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}), 1);
    EXPECT_EQ(rational_rank({{Rational(1), Rational(0)}, {Rational(1, 3), Rational(1)}}), 2);
}
