// Copyright 2026 The lambda-forge Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LAMBDA_FORGE_JSON_IO_H
#define LAMBDA_FORGE_JSON_IO_H

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "lambda_forge/circuit.h"
#include "lambda_forge/cnc.h"
#include "lambda_forge/orbit2.h"
#include "lambda_forge/phi_map.h"
#include "lambda_forge/polytope.h"
#include "lambda_forge/reduction.h"
#include "lambda_forge/simulator.h"

namespace lambda_forge {

using json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

/// A well-formed request with no solution (e.g. a state outside the decomposition pool's hull).
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Rational values as "p/q"; values with a sqrt 2 part as {"a": "p/q", "b": "p/q"}.
json field_to_json(const FieldElem &x);
FieldElem field_from_json(const json &j);
/// Always the {"a", "b"} pair form.
json field_pair_to_json(const FieldElem &x);
/// Decimal rendering for humans.
json field_to_float_json(const FieldElem &x);

json operator_to_json(const QOperator &a);
QOperator operator_from_json(const json &j);

json assignment_to_json(const ValueAssignment &g);
ValueAssignment assignment_from_json(const json &j, int n);

json stabilizer_to_json(const StabilizerState &s);
StabilizerState stabilizer_from_json(const json &j);

json tableau_to_json(const CliffordTableau &c);
CliffordTableau tableau_from_json(const json &j);

json cnc_to_json(const CncSet &c);
CncSet cnc_from_json(const json &j);

json subspace_to_json(const Subspace &s);
Subspace subspace_from_json(const json &j, int n);

json orbit_params_to_json(const OrbitVertexParams &p);
OrbitVertexParams orbit_params_from_json(const json &j);

json phi_params_to_json(const PhiParams &p);
PhiParams phi_params_from_json(const json &j);

json lifted_to_json(const LiftedInstance &inst);
LiftedInstance lifted_from_json(const json &j);

/// Descriptor objects: {"type": "cnc" | "orbit" | "phi" | "operator" | "stabilizer", ...}.
json descriptor_to_json(const Descriptor &d);
Descriptor descriptor_from_json(const json &j, const SimOptions &opt = {});
/// Descriptor, {"type": "mixture", "components": [{"weight", "descriptor"}]} or
/// {"type": "decomposition", "state": operator, "pool": "cnc" | "cnc+orbit"}.
Mixture mixture_from_json(const json &j, const SimOptions &opt = {});
json mixture_to_json(const Mixture &m);
/// Initial descriptor for an operator: cnc or orbit vertex if recognised, else the dense fallback.
Descriptor descriptor_for_operator(const QOperator &a, const SimOptions &opt);

json condition_to_json(const Condition &c);
json sequence_to_json(const MeasSequence &s);
MeasSequence sequence_from_json(const json &j);
/// {"n", "initial", "steps": [{"measure": label, "if": {"step", "outcome"}} | {"gate": "H 0"}]}.
Circuit circuit_from_json(const json &j);

json distribution_to_json(const Distribution &d, bool as_float = false);
Distribution distribution_from_json(const json &j);
json transcript_to_json(const Transcript &t, bool as_float = false);
json reduced_to_json(const ReducedSequence &r);

json certificate_to_json(const FacetCertificate &c);
json vertex_report_to_json(const VertexReport &r);

json poset_to_json(const IsoPoset &p);
std::string poset_to_dot(const IsoPoset &p);

/// Parse text, reporting the byte position on failure (std::invalid_argument).
json parse_json_text(const std::string &text);
json read_json_file(const std::string &path);

}  // namespace lambda_forge

#endif
