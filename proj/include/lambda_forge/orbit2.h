// Copyright 2026 The lambda-forge Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LAMBDA_FORGE_ORBIT2_H
#define LAMBDA_FORGE_ORBIT2_H

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lambda_forge/cnc.h"
#include "lambda_forge/qoperator.h"
#include "lambda_forge/stabilizer.h"

namespace lambda_forge {

using Collection = std::vector<Subspace>;

/// Parameters (I, gamma, C, gamma') of a two-qubit vertex A_I^gamma + (A_Omega^gamma' - A_Omega^gamma'')/4.
struct OrbitVertexParams {
    Subspace I;
    ValueAssignment gamma;
    Collection C;
    PointSet omega;
    ValueAssignment gamma_p;
    ValueAssignment gamma_pp;

    void validate() const;
    bool operator==(const OrbitVertexParams &o) const {
        return I == o.I && gamma == o.gamma && C == o.C && gamma_p == o.gamma_p;
    }
};

/// Every collection containing I in which each nonzero point of a member lies in exactly one other member.
std::vector<Collection> enumerate_collections(const Subspace &i);
bool satisfies_collection_rules(const Subspace &i, const Collection &c);
/// Omega = E_2 minus the nonzero points covered by the collection.
PointSet omega_of_collection(const Collection &c);
/// The collections whose Omega has six nonzero points (the ones that produce vertices).
std::vector<Collection> orbit_collections(const Subspace &i);

/// All (gamma', gamma'') on omega with gamma'' = 1 + gamma' off 0 and the rule
/// gamma'(v) + gamma'(w) + beta(v,w) = gamma(v+w) for commuting v, w in omega with v + w in I.
std::vector<std::pair<ValueAssignment, ValueAssignment>> derive_assignments(const Subspace &i,
                                                                            const ValueAssignment &gamma,
                                                                            const PointSet &omega);

OrbitVertexParams make_orbit_params(const Subspace &i, const ValueAssignment &gamma, const Collection &c,
                                    const ValueAssignment &gamma_p);
QOperator build_orbit_vertex(const OrbitVertexParams &p);

/// All 15 x 4 x 4 x 8 parameter choices, in a fixed order.
const std::vector<OrbitVertexParams> &enumerate_family_params();
/// The distinct operators built from enumerate_family_params(), sorted.
std::vector<QOperator> enumerate_family();
/// Parameters of an operator of the family, if it is one.
std::optional<OrbitVertexParams> find_orbit_params(const QOperator &a);

/// The reference vertex with its printed coefficients, and its printed parameters.
QOperator alpha0_table();
Collection alpha0_collection();
OrbitVertexParams alpha0_params();
PointSet omega_of_alpha0();

/// Pi_{a,s} A Pi_{a,s} for a family vertex, as weighted cnc operators on <a>-perp (weights sum to the probability).
std::vector<WeightedCnc> orbit_update(const OrbitVertexParams &p, const PauliPoint &a, int s);

/// Which of the three update cases applies.
int orbit_update_case(const OrbitVertexParams &p, const PauliPoint &a);

struct Lemma3Report {
    int checked[5] = {0, 0, 0, 0, 0};
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
    int total() const { return checked[0] + checked[1] + checked[2] + checked[3] + checked[4]; }
};
/// Exhaustive check of the five single-qubit decompositions used by the update rules.
Lemma3Report lemma3_identities();
/// A_E^alpha on one qubit with alpha given on (X, Y, Z).
QOperator single_qubit_vertex(int ax, int ay, int az);

struct IsoPoset {
    std::vector<Subspace> lines;   // 1-dim isotropics
    std::vector<Subspace> planes;  // 2-dim (maximal) isotropics
    std::vector<std::pair<size_t, size_t>> edges;  // (line index, plane index) containment
    std::vector<bool> highlighted;                 // plane in the reference collection
};
IsoPoset export_isotropic_poset();

}  // namespace lambda_forge

#endif
