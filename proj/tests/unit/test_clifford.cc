// Copyright 2026 The lambda-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "dense_oracle.h"
#include "lambda_forge/clifford.h"
#include "lambda_forge/polytope.h"

using namespace lambda_forge;

namespace {

struct DenseGate {
    CliffordTableau tab;
    dense::Mat mat;
};

std::vector<DenseGate> gate_set(int n) {
    std::vector<DenseGate> g;
    for (int k = 0; k < n; k++) {
        g.push_back({CliffordTableau::hadamard(n, k), dense::hadamard(n, k)});
        g.push_back({CliffordTableau::phase(n, k), dense::phase(n, k)});
        for (int t = 0; t < n; t++) {
            if (t != k) g.push_back({CliffordTableau::cnot(n, k, t), dense::cnot(n, k, t)});
        }
    }
    return g;
}

dense::Mat signed_matrix(const PhasedPauli &p) {
    static const std::complex<double> v[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return v[p.phase & 3] * pauli_matrix(p.point);
}

}  // namespace

TEST(Clifford, GatesMatchDenseConjugation) {
    for (int n = 1; n <= 3; n++) {
        for (const auto &g : gate_set(n)) {
            g.tab.validate();
            for (const auto &v : nonzero_points(n)) {
                dense::Mat lhs = g.mat * pauli_matrix(v) * g.mat.adjoint();
                EXPECT_TRUE(dense::close(lhs, signed_matrix(g.tab.apply_point(v)))) << v.label();
            }
        }
    }
}

TEST(Clifford, RandomCircuitTableauMatchesDense) {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 30; it++) {
        int n = 1 + int(rng() % 3);
        auto gates = gate_set(n);
        CliffordTableau t = CliffordTableau::identity(n);
        dense::Mat u = dense::Mat::Identity(1 << n, 1 << n);
        for (int k = 0; k < 12; k++) {
            const auto &g = gates[rng() % gates.size()];
            t = compose(g.tab, t);
            u = g.mat * u;
        }
        for (const auto &v : nonzero_points(n)) {
            EXPECT_TRUE(dense::close(u * pauli_matrix(v) * u.adjoint(), signed_matrix(t.apply_point(v))));
        }
        QOperator a(n);
        for (const auto &v : all_points(n)) a.set(v, FieldElem(long(rng() % 5) - 2));
        EXPECT_TRUE(dense::close(dense_matrix(conjugate(t, a)), u * dense_matrix(a) * u.adjoint()));
    }
}

TEST(Clifford, InverseAndCompose) {
    std::mt19937_64 rng(37);
    for (int it = 0; it < 50; it++) {
        int n = 1 + int(rng() % 3);
        CliffordTableau c = CliffordTableau::random(n, rng);
        c.validate();
        EXPECT_EQ(compose(c, invert(c)), CliffordTableau::identity(n));
        EXPECT_EQ(compose(invert(c), c), CliffordTableau::identity(n));
    }
}

TEST(Clifford, GroupSizesModuloPhases) {
    // |Sp(2n, 2)| * 4^n: 24 for one qubit, 11520 for two.
    EXPECT_EQ(enumerate_action(1).size(), 24u);
    EXPECT_EQ(enumerate_action(2).size(), 11520u);
}

TEST(Clifford, ValidateRejectsNonSymplectic) {
    CliffordTableau bad({PhasedPauli(PauliPoint::from_label("X"))}, {PhasedPauli(PauliPoint::from_label("X"))});
    EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(Clifford, IsotropicPairWitness) {
    Subspace j0 = Subspace::span(2, {PauliPoint::from_label("IX")});
    ValueAssignment r0 = assignment_from_generators(j0, {0});
    for (const auto &p : nonzero_points(2)) {
        Subspace j = Subspace::span(2, {p});
        for (const auto &r : enumerate_consistent_assignments(j)) {
            CliffordTableau c = clifford_for_isotropic_pair(j0, r0, j, r);
            EXPECT_EQ(conjugate(c, stabilizer_projector(j0, r0)), stabilizer_projector(j, r));
        }
    }
}

TEST(Clifford, OrbitOfStabilizerStateIsAllStates) {
    auto orbit = clifford_orbit(stabilizer_projector(stabilizer_states(2)[0]), CliffordTableau::generators(2));
    EXPECT_EQ(orbit.size(), 60u);
}
