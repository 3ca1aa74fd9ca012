// Copyright 2026 The lambda-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "lambda_forge/cnc.h"
#include "lambda_forge/orbit2.h"
#include "lambda_forge/phi_map.h"
#include "lambda_forge/polytope.h"

using namespace lambda_forge;

namespace {

Subspace tail_j(const char *label) { return Subspace::span(2, {PauliPoint::from_label(label)}); }

std::vector<PhiParams> all_params_12() {
    std::vector<PhiParams> out;
    for (const auto &p : nonzero_points(2)) {
        Subspace j = Subspace::span(2, {p});
        for (const auto &r : enumerate_consistent_assignments(j)) out.push_back(PhiParams::make(1, j, r));
    }
    return out;
}

}  // namespace

TEST(PhiMap, SpecialLiftOfCornerExpandsTensorProduct) {
    QOperator a0 = single_qubit_vertex(0, 0, 0);
    Subspace j = tail_j("IX");
    QOperator y = phi_special(a0, j, assignment_from_generators(j, {0}));
    QOperator expect = QOperator::from_labels({{"II", FieldElem(1)}, {"XI", FieldElem(1)}, {"YI", FieldElem(1)},
                                               {"ZI", FieldElem(1)}, {"IX", FieldElem(1)}, {"XX", FieldElem(1)},
                                               {"YX", FieldElem(1)}, {"ZX", FieldElem(1)}});
    EXPECT_EQ(y, expect);
}

TEST(PhiMap, MaximallyMixedLiftIsTensorWithProjector) {
    Subspace j = tail_j("IZ");
    auto r = assignment_from_generators(j, {1});
    QOperator y = phi_special(QOperator::maximally_mixed(1), j, r);
    EXPECT_EQ(y, op_tensor(QOperator::maximally_mixed(1),
                           stabilizer_projector(Subspace::span(1, {PauliPoint::from_label("Z")}),
                                                assignment_from_generators(Subspace::span(1, {PauliPoint::from_label("Z")}), {1}))));
}

TEST(PhiMap, SupportInsideHeadPlusJ) {
    std::mt19937_64 rng(43);
    Subspace j = tail_j("IY");
    auto r = assignment_from_generators(j, {1});
    for (int it = 0; it < 20; it++) {
        QOperator x = random_rational_operator(1, rng, false);
        QOperator y = phi_special(x, j, r);
        for (const auto &[w, c] : y.coeffs()) EXPECT_TRUE(j.contains(PauliPoint::zero(1).concat(w.tail(1))));
        for (const auto &v : all_points(1)) {
            EXPECT_EQ(y.coeff(v.concat(PauliPoint::from_label("Y"))), -x.coeff(v));
        }
    }
}

TEST(PhiMap, IdentityTableauReducesToSpecialForm) {
    Subspace j0 = tail_x_subspace(2, 1);
    auto r0 = assignment_from_generators(j0, {0});
    PhiParams p = PhiParams::make(1, j0, r0);
    EXPECT_EQ(p.tableau, CliffordTableau::identity(2));
    for (const auto &x : enumerate_vertices_n1()) EXPECT_EQ(phi_general(x, p), phi_special(x, j0, r0));
}

TEST(PhiMap, PreimageRoundTrip) {
    auto verts = enumerate_vertices_n1();
    for (const auto &p : all_params_12()) {
        for (const auto &x : verts) EXPECT_EQ(phi_preimage(phi_general(x, p), p), x);
        QOperator mm = QOperator::maximally_mixed(1);
        EXPECT_EQ(phi_preimage(phi_general(mm, p), p), mm);
    }
}

TEST(PhiMap, PreimageRejectsOperatorsOutsideImage) {
    PhiParams p = all_params_12()[0];
    EXPECT_THROW(phi_preimage(QOperator::maximally_mixed(2), p), std::invalid_argument);
}

TEST(PhiMap, CncLiftIsCncOnSumSet) {
    Subspace j = tail_j("IZ");
    auto r = assignment_from_generators(j, {1});
    for (const auto &c : enumerate_cnc_vertices(1)) {
        auto lifted = as_cnc(phi_special(build_cnc_operator(c), j, r));
        ASSERT_TRUE(lifted.has_value());
        PointSet expect;
        for (const auto &w : c.omega) {
            for (const auto &u : j.elements()) expect.insert(w.concat(PauliPoint::zero(1)) + u);
        }
        EXPECT_EQ(lifted->omega, expect);
    }
}

TEST(PhiMap, NonCncLiftStaysNonCncAndExtreme) {
    QOperator a = alpha0_table();
    Subspace j = Subspace::span(3, {PauliPoint::from_label("IIX")});
    auto r = assignment_from_generators(j, {0});
    QOperator y = phi_special(a, j, r);
    EXPECT_FALSE(as_cnc(a).has_value());
    EXPECT_FALSE(as_cnc(y).has_value());
    EXPECT_TRUE(membership(y).member());
    EXPECT_TRUE(is_vertex(y).vertex);
}

TEST(PhiMap, ClosedTraceFormulaCounterexample) {
    QOperator a0 = single_qubit_vertex(0, 0, 0);
    Subspace j = tail_j("IX");
    auto r = assignment_from_generators(j, {0});
    Subspace i = Subspace::span(2, {PauliPoint::from_label("XX"), PauliPoint::from_label("ZZ")});
    ValueAssignment s = StabilizerState::from_generators({"-XX", "+ZZ"}).values;
    FieldElem direct = trace_inner(phi_special(a0, j, r), stabilizer_projector(i, s));
    EXPECT_EQ(direct, FieldElem(0));
    EXPECT_EQ(lemma1_trace(a0, j, r, i, s), direct);
    EXPECT_EQ(lemma1_trace_literal(a0, j, r, i, s), FieldElem::frac(1, 2));
}

TEST(PhiMap, ClosedTraceMismatchedSignsVanish) {
    Subspace j = tail_j("IZ");
    auto r = assignment_from_generators(j, {0});
    StabilizerState st = StabilizerState::from_generators({"+XI", "-IZ"});
    EXPECT_EQ(lemma1_trace(single_qubit_vertex(0, 0, 0), j, r, st.space, st.values), FieldElem(0));
}

TEST(PhiMap, ClosedTraceSumInstance) {
    // I = J + I' with s = r * s' gives Tr(X Pi_{I', s'}).
    Subspace j = tail_j("IZ");
    auto r = assignment_from_generators(j, {1});
    Subspace ip = Subspace::span(1, {PauliPoint::from_label("Y")});
    auto sp = assignment_from_generators(ip, {0});
    Subspace ipn = Subspace::span(2, {PauliPoint::from_label("YI")});
    auto spn = assignment_from_generators(ipn, {0});
    Subspace i = j.sum(ipn);
    auto s = convolve_assignment(j, r, ipn, spn);
    for (const auto &x : enumerate_vertices_n1()) {
        EXPECT_EQ(lemma1_trace(x, j, r, i, s), trace_inner(x, stabilizer_projector(ip, sp)));
    }
}

TEST(PhiMap, TraceIdentitiesRandomSweeps) {
    auto l1 = lemma1_sweep(10, 5);
    EXPECT_TRUE(l1.ok()) << l1.failures.front();
    EXPECT_EQ(l1.checked, 10L * 6 * 60);
    auto l2 = lemma2_sweep(10, 6);
    EXPECT_TRUE(l2.ok());
    EXPECT_EQ(l2.checked, 10L * 6 * 7);
}

TEST(PhiMap, ReducedTracelessIdentity) {
    Subspace j = tail_j("IX");
    auto r = assignment_from_generators(j, {1});
    Subspace ip = Subspace::span(1, {PauliPoint::from_label("Z")});
    auto sp = assignment_from_generators(ip, {1});
    EXPECT_TRUE(lemma2_check(QOperator(2), 1, j, r, ip, sp));
    for (const auto &w : nonzero_points(2)) {
        QOperator y(2);
        y.set(w, FieldElem(1));
        EXPECT_TRUE(lemma2_check(y, 1, j, r, ip, sp)) << w.label();
    }
    EXPECT_THROW(lemma2_check(QOperator::maximally_mixed(2), 1, j, r, ip, sp), std::invalid_argument);
}

TEST(PhiMap, ParamsValidation) {
    Subspace j = tail_j("XX");
    auto r = assignment_from_generators(j, {0});
    PhiParams p = PhiParams::make(1, j, r);
    p.validate();
    p.tableau = CliffordTableau::identity(2);
    EXPECT_THROW(p.validate(), std::invalid_argument);
}
