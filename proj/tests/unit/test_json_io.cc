// Copyright 2026 The lambda-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "lambda_forge/json_io.h"

using namespace lambda_forge;

TEST(JsonIo, FieldForms) {
    EXPECT_EQ(field_to_json(FieldElem::frac(-3, 4)), json("-3/4"));
    FieldElem x(Rational(1, 2), Rational(-1, 4));
    json j = field_to_json(x);
    EXPECT_EQ(j["a"], "1/2");
    EXPECT_EQ(j["b"], "-1/4");
    EXPECT_EQ(field_from_json(j), x);
    EXPECT_EQ(field_from_json(json("5")), FieldElem(5));
    EXPECT_EQ(field_from_json(json(2)), FieldElem(2));
    EXPECT_THROW(field_from_json(json("0.5")), std::invalid_argument);
}

TEST(JsonIo, OperatorRoundTrip) {
    std::mt19937_64 rng(73);
    for (int it = 0; it < 20; it++) {
        QOperator a = random_rational_operator(2, rng, false);
        a.add_to(PauliPoint::from_label("XY"), FieldElem::sqrt2());
        json j = operator_to_json(a);
        EXPECT_EQ(j["schema"], kSchemaVersion);
        EXPECT_EQ(operator_from_json(parse_json_text(j.dump())), a);
    }
    EXPECT_THROW(operator_from_json(json{{"n", 2}, {"coeffs", {{"X", "1"}}}}), std::invalid_argument);
}

TEST(JsonIo, StructuredRoundTrips) {
    for (const auto &st : stabilizer_states(2)) EXPECT_EQ(stabilizer_from_json(stabilizer_to_json(st)), st);
    std::mt19937_64 rng(79);
    CliffordTableau c = CliffordTableau::random(3, rng);
    EXPECT_EQ(tableau_from_json(tableau_to_json(c)), c);
    for (const auto &cnc : enumerate_cnc_vertices(2)) EXPECT_EQ(cnc_from_json(cnc_to_json(cnc)), cnc);
    const auto &fam = enumerate_family_params();
    for (size_t k = 0; k < fam.size(); k += 191) EXPECT_EQ(orbit_params_from_json(orbit_params_to_json(fam[k])), fam[k]);
    Subspace j = Subspace::span(2, {PauliPoint::from_label("ZZ")});
    PhiParams p = PhiParams::make(1, j, assignment_from_generators(j, {1}));
    PhiParams q = phi_params_from_json(phi_params_to_json(p));
    EXPECT_EQ(q.j, p.j);
    EXPECT_EQ(q.r, p.r);
    EXPECT_EQ(q.tableau, p.tableau);
    LiftedInstance inst{1, stabilizer_states(1)[3], CliffordTableau::random(2, rng)};
    LiftedInstance back = lifted_from_json(lifted_to_json(inst));
    EXPECT_EQ(back.sigma, inst.sigma);
    EXPECT_EQ(back.u, inst.u);
}

TEST(JsonIo, DescriptorRoundTrip) {
    std::mt19937_64 rng(83);
    LiftedInstance inst{1, stabilizer_states(1)[0], CliffordTableau::random(2, rng)};
    Descriptor phi = Descriptor::from_phi(inst, Descriptor::from_cnc(enumerate_cnc_vertices(1)[2]));
    auto next = update_descriptor(phi, PhasedPauli::from_string("XZ"), 0);
    for (const auto &w : next) {
        json j = descriptor_to_json(w.desc);
        Descriptor d = descriptor_from_json(parse_json_text(j.dump()));
        EXPECT_EQ(d.to_operator(), w.desc.to_operator());
        EXPECT_EQ(descriptor_to_json(d), j);
    }
    Descriptor orb = Descriptor::from_orbit(alpha0_params());
    EXPECT_EQ(descriptor_from_json(descriptor_to_json(orb)).to_operator(), alpha0_table());
    json op = operator_to_json(alpha0_table());
    op["type"] = "operator";
    EXPECT_EQ(descriptor_from_json(op).class_name(), "orbit");
}

TEST(JsonIo, SequenceAndDistributionRoundTrip) {
    MeasSequence seq{2, {MeasStep{PhasedPauli::from_string("-XZ"), {}},
                         MeasStep{PhasedPauli::from_string("YY"), Condition{0, 1}}}};
    EXPECT_EQ(sequence_from_json(sequence_to_json(seq)), seq);
    Distribution d{{{0, -1}, FieldElem::frac(1, 3)}, {{1, 1}, FieldElem(Rational(1, 3), Rational(1, 6))}};
    EXPECT_EQ(distribution_from_json(distribution_to_json(d)), d);
}

TEST(JsonIo, CircuitParsing) {
    json j = parse_json_text(R"({"n": 2, "initial": {"type": "stabilizer", "generators": ["ZI", "IZ"]},
        "steps": [{"gate": "H 0"}, {"measure": "ZI"}, {"measure": "IZ", "if": {"step": 0, "outcome": 1}}]})");
    Circuit c = circuit_from_json(j);
    EXPECT_EQ(c.steps.size(), 3u);
    MeasSequence seq = compile_circuit(c);
    EXPECT_EQ(seq.steps[0].observable.to_string(), "+XI");
    EXPECT_EQ(seq.steps[1].cond, (Condition{0, 1}));
    json bad = j;
    bad["steps"][0]["if"] = {{"step", 0}, {"outcome", 0}};
    EXPECT_THROW(circuit_from_json(bad), std::invalid_argument);
}

TEST(JsonIo, MalformedTextReportsPosition) {
    try {
        parse_json_text("{\"n\": 2,, }");
        FAIL() << "expected a parse error";
    } catch (const std::invalid_argument &e) {
        EXPECT_NE(std::string(e.what()).find("byte 9"), std::string::npos) << e.what();
    }
}

TEST(JsonIo, InfeasibleDecomposition) {
    json j{{"type", "decomposition"},
           {"state", operator_to_json(QOperator::from_labels({{"I", FieldElem(1)}, {"X", FieldElem(3)}}))}};
    EXPECT_THROW(mixture_from_json(j), InfeasibleError);
}

TEST(JsonIo, CertificateNamesViolation) {
    QOperator a0 = single_qubit_vertex(0, 0, 0);
    json c = certificate_to_json(membership(op_tensor(a0, a0)));
    EXPECT_FALSE(c["member"].get<bool>());
    EXPECT_EQ(c["violation"]["value"], "-1/2");
    EXPECT_EQ(c["facets"].size(), 60u);
}

TEST(JsonIo, PosetExport) {
    json p = poset_to_json(export_isotropic_poset());
    EXPECT_EQ(p["nodes"].size(), 30u);
    EXPECT_EQ(p["edges"].size(), 45u);
    std::string dot = poset_to_dot(export_isotropic_poset());
    EXPECT_NE(dot.find("graph isotropic_poset"), std::string::npos);
}
