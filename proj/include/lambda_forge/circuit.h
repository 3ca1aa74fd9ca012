// Copyright 2026 The lambda-forge Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LAMBDA_FORGE_CIRCUIT_H
#define LAMBDA_FORGE_CIRCUIT_H

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lambda_forge/clifford.h"
#include "lambda_forge/pauli.h"
#include "lambda_forge/qoperator.h"

namespace lambda_forge {

/// Run a step only if measurement `step` (0-based, counting measurements only) gave `outcome`.
struct Condition {
    int step = 0;
    int outcome = 0;
    bool operator==(const Condition &) const = default;
};

/// Measurement of a signed Hermitian Pauli; outcome s means eigenvalue (-1)^s.
struct MeasStep {
    PhasedPauli observable;
    std::optional<Condition> cond;
    bool operator==(const MeasStep &) const = default;
};

struct MeasSequence {
    int n = 0;
    std::vector<MeasStep> steps;
    void validate() const;
    bool operator==(const MeasSequence &) const = default;
};

struct CircuitStep {
    bool is_gate = false;
    MeasStep measure;
    std::string gate_text;  // e.g. "H 0", "CNOT 0 1"
    CliffordTableau gate;
};

struct Circuit {
    int n = 0;
    std::vector<CircuitStep> steps;
};

/// Parses "H k", "S k", "X k", "Y k", "Z k", "CNOT c t" / "CX c t", "CZ c t" (0-based qubits).
CliffordTableau parse_gate(int n, const std::string &text);
/// Pulls every gate past the later measurements, leaving a measurement-only sequence.
MeasSequence compile_circuit(const Circuit &c);

/// Outcome strings (one entry per measurement, -1 for skipped) with their probabilities.
using Distribution = std::map<std::vector<int>, FieldElem>;

bool condition_holds(const std::optional<Condition> &cond, const std::vector<int> &outcomes);

/// Exact iterated projection tree on the operator itself (n <= 4); zero-probability leaves are omitted.
Distribution born_oracle(const QOperator &rho, const MeasSequence &seq);
/// Unnormalized post-measurement operator for a signed observable.
QOperator born_step(const QOperator &unnormalized, const PhasedPauli &observable, int s);

FieldElem total_probability(const Distribution &d);

}  // namespace lambda_forge

#endif
