// Copyright 2026 The lambda-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "dense_oracle.h"
#include "lambda_forge/circuit.h"
#include "lambda_forge/polytope.h"

using namespace lambda_forge;

namespace {

MeasStep meas(const char *label, std::optional<Condition> c = std::nullopt) {
    return MeasStep{PhasedPauli::from_string(label), c};
}

// Dense Born rule: probability of an outcome string for unconditioned measurements.
double dense_probability(const QOperator &rho, const MeasSequence &seq, const std::vector<int> &o) {
    dense::Mat m = dense_matrix(rho);
    for (size_t k = 0; k < seq.steps.size(); k++) {
        static const std::complex<double> ph[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        dense::Mat p = ph[seq.steps[k].observable.phase] * pauli_matrix(seq.steps[k].observable.point);
        dense::Mat proj = dense::projector(p, o[k]);
        m = proj * m * proj;
    }
    return m.trace().real();
}

}  // namespace

TEST(Circuit, ParseGates) {
    EXPECT_EQ(parse_gate(2, "H 1"), CliffordTableau::hadamard(2, 1));
    EXPECT_EQ(parse_gate(2, "cx 0 1"), CliffordTableau::cnot(2, 0, 1));
    EXPECT_EQ(parse_gate(1, "S 0"), CliffordTableau::phase(1, 0));
    EXPECT_THROW(parse_gate(2, "H 2"), std::invalid_argument);
    EXPECT_THROW(parse_gate(2, "CNOT 0 0"), std::invalid_argument);
    EXPECT_THROW(parse_gate(2, "FOO 0"), std::invalid_argument);
    EXPECT_THROW(parse_gate(2, "H"), std::invalid_argument);
}

TEST(Circuit, GatesPullMeasurementsBack) {
    Circuit c;
    c.n = 1;
    CircuitStep g;
    g.is_gate = true;
    g.gate = CliffordTableau::hadamard(1, 0);
    c.steps.push_back(g);
    CircuitStep m;
    m.measure = meas("Z");
    c.steps.push_back(m);
    MeasSequence seq = compile_circuit(c);
    ASSERT_EQ(seq.steps.size(), 1u);
    EXPECT_EQ(seq.steps[0].observable.to_string(), "+X");
}

TEST(Circuit, BellStabilizersAreDeterministic) {
    QOperator rho = stabilizer_projector(StabilizerState::from_generators({"-ZZ", "-XX"}));
    MeasSequence seq{2, {meas("ZZ"), meas("XX")}};
    Distribution d = born_oracle(rho, seq);
    ASSERT_EQ(d.size(), 1u);
    EXPECT_EQ(d.begin()->first, (std::vector<int>{1, 1}));
    EXPECT_EQ(d.begin()->second, FieldElem(1));
}

TEST(Circuit, NegatedObservableFlipsOutcome) {
    QOperator rho = stabilizer_projector(StabilizerState::from_generators({"+Z"}));
    Distribution d = born_oracle(rho, MeasSequence{1, {meas("-Z")}});
    ASSERT_EQ(d.size(), 1u);
    EXPECT_EQ(d.begin()->first, std::vector<int>{1});
}

TEST(Circuit, ConditionsSkipSteps) {
    QOperator rho = stabilizer_projector(StabilizerState::from_generators({"+Z"}));
    MeasSequence seq{1, {meas("X"), meas("Z", Condition{0, 1})}};
    Distribution d = born_oracle(rho, seq);
    EXPECT_EQ(d.size(), 3u);
    EXPECT_EQ(d.at({0, -1}), FieldElem::frac(1, 2));
    EXPECT_EQ(d.at({1, 0}), FieldElem::frac(1, 4));
    EXPECT_EQ(d.at({1, 1}), FieldElem::frac(1, 4));
    EXPECT_EQ(total_probability(d), FieldElem(1));
}

TEST(Circuit, OracleMatchesDenseBornRule) {
    std::mt19937_64 rng(47);
    auto pts = nonzero_points(2);
    for (int it = 0; it < 20; it++) {
        const auto &sts = stabilizer_states(2);
        QOperator rho = stabilizer_projector(sts[rng() % sts.size()]).scaled(FieldElem::frac(1, 2)) +
                        stabilizer_projector(sts[rng() % sts.size()]).scaled(FieldElem::frac(1, 2));
        MeasSequence seq{2, {}};
        for (int k = 0; k < 3; k++) seq.steps.push_back(MeasStep{PhasedPauli(pts[rng() % pts.size()]), {}});
        Distribution d = born_oracle(rho, seq);
        EXPECT_EQ(total_probability(d), FieldElem(1));
        for (const auto &[o, p] : d) EXPECT_NEAR(p.to_double(), dense_probability(rho, seq, o), 1e-12);
    }
}

TEST(Circuit, SequenceValidation) {
    MeasSequence bad{1, {meas("Z", Condition{0, 0})}};
    EXPECT_THROW(bad.validate(), std::invalid_argument);
    MeasSequence wrong{2, {meas("Z")}};
    EXPECT_THROW(wrong.validate(), std::invalid_argument);
}
