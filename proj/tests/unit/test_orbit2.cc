// Copyright 2026 The lambda-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <set>

#include "lambda_forge/clifford.h"
#include "lambda_forge/cnc.h"
#include "lambda_forge/orbit2.h"
#include "lambda_forge/polytope.h"

using namespace lambda_forge;

namespace {

QOperator pieces_sum(const std::vector<WeightedCnc> &pieces) {
    QOperator out(2);
    for (const auto &p : pieces) out = out + build_cnc_operator(p.set).scaled(p.weight);
    return out;
}

}  // namespace

TEST(Orbit2, CollectionsPerIsotropic) {
    for (const auto &i : enumerate_maximal_isotropics(2)) {
        auto all = enumerate_collections(i);
        EXPECT_EQ(all.size(), 16u);
        for (const auto &c : all) EXPECT_TRUE(satisfies_collection_rules(i, c));
        auto orb = orbit_collections(i);
        EXPECT_EQ(orb.size(), 4u);
        for (const auto &c : orb) EXPECT_EQ(omega_of_collection(c).size(), 7u);
    }
}

TEST(Orbit2, ReferenceCollectionSatisfiesRules) {
    Subspace i = alpha0_params().I;
    EXPECT_TRUE(satisfies_collection_rules(i, alpha0_collection()));
    EXPECT_EQ(omega_of_collection(alpha0_collection()), omega_of_alpha0());
}

TEST(Orbit2, ReferenceVertexReproducesTable) {
    QOperator a = build_orbit_vertex(alpha0_params());
    EXPECT_EQ(a, alpha0_table());
    EXPECT_EQ(a.coeffs().size(), 10u);  // six table entries are zero
    EXPECT_TRUE(membership(a).member());
    auto rep = is_vertex(a);
    EXPECT_TRUE(rep.vertex);
    EXPECT_EQ(rep.rank, 15);
    EXPECT_FALSE(as_cnc(a).has_value());
}

TEST(Orbit2, GammaPrimeSolutionSpace) {
    auto p = alpha0_params();
    auto sols = derive_assignments(p.I, p.gamma, p.omega);
    EXPECT_EQ(sols.size(), 8u);
    bool found = false;
    for (const auto &[gp, gpp] : sols) found = found || gp == p.gamma_p;
    EXPECT_TRUE(found);
}

TEST(Orbit2, FamilySizeAndRecognition) {
    const auto &params = enumerate_family_params();
    EXPECT_EQ(params.size(), 1920u);
    auto fam = enumerate_family();
    EXPECT_EQ(fam.size(), 1920u);
    for (size_t k = 0; k < params.size(); k += 97) {
        QOperator a = build_orbit_vertex(params[k]);
        auto back = find_orbit_params(a);
        ASSERT_TRUE(back.has_value());
        EXPECT_EQ(build_orbit_vertex(*back), a);
    }
    EXPECT_FALSE(find_orbit_params(QOperator::maximally_mixed(2)).has_value());
}

TEST(Orbit2, FamilyEqualsCliffordOrbit) {
    auto fam = enumerate_family();
    auto orbit = clifford_orbit(alpha0_table(), CliffordTableau::generators(2));
    std::set<QOperator> a(fam.begin(), fam.end()), b(orbit.begin(), orbit.end());
    EXPECT_EQ(a, b);
}

TEST(Orbit2, UpdateMatchesProjectionOnSample) {
    const auto &params = enumerate_family_params();
    for (size_t k = 0; k < params.size(); k += 37) {
        QOperator a = build_orbit_vertex(params[k]);
        for (const auto &pt : nonzero_points(2)) {
            for (int s = 0; s < 2; s++) EXPECT_EQ(pieces_sum(orbit_update(params[k], pt, s)), project(a, pt, s));
        }
    }
}

TEST(Orbit2, UpdateCasesCoverAllPoints) {
    auto p = alpha0_params();
    int counts[4] = {0, 0, 0, 0};
    for (const auto &pt : nonzero_points(2)) counts[orbit_update_case(p, pt)]++;
    EXPECT_EQ(counts[1], 3);  // a in I
    EXPECT_EQ(counts[2], 6);  // a in Omega outside I
    EXPECT_EQ(counts[3], 6);  // a outside Omega
}

TEST(Orbit2, DecompositionIdentitiesSingleQubit) {
    Lemma3Report rep = lemma3_identities();
    EXPECT_TRUE(rep.ok()) << (rep.failures.empty() ? "" : rep.failures.front());
    for (int k = 0; k < 5; k++) EXPECT_GT(rep.checked[k], 0) << "identity " << k + 1;
}

TEST(Orbit2, IsotropicPoset) {
    IsoPoset p = export_isotropic_poset();
    EXPECT_EQ(p.lines.size(), 15u);
    EXPECT_EQ(p.planes.size(), 15u);
    EXPECT_EQ(p.edges.size(), 45u);
    for (const auto &[l, q] : p.edges) EXPECT_TRUE(p.lines[l].is_subspace_of(p.planes[q]));
    size_t hl = 0;
    for (bool h : p.highlighted) hl += h;
    EXPECT_EQ(hl, alpha0_collection().size());
}

TEST(Orbit2, ParamsValidation) {
    auto p = alpha0_params();
    p.validate();
    auto bad = p;
    bad.C.pop_back();
    EXPECT_THROW(bad.validate(), std::invalid_argument);
}
