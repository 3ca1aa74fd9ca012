// Copyright 2026 The lambda-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include "lambda_forge/circuit.h"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace lambda_forge {

void MeasSequence::validate() const {
    if (n <= 0 || n > kMaxQubits) throw std::invalid_argument("sequence: bad qubit count");
    for (size_t k = 0; k < steps.size(); k++) {
        const auto &st = steps[k];
        if (st.observable.point.n != n) throw std::invalid_argument("sequence: step " + std::to_string(k) + " has wrong size");
        if (st.observable.point.is_zero()) throw std::invalid_argument("sequence: step " + std::to_string(k) + " measures the identity");
        if (!st.observable.is_hermitian()) throw std::invalid_argument("sequence: step " + std::to_string(k) + " is not Hermitian");
        if (st.cond && (st.cond->step < 0 || size_t(st.cond->step) >= k || (st.cond->outcome & ~1))) {
            throw std::invalid_argument("sequence: step " + std::to_string(k) + " has a condition on a later step");
        }
    }
}

CliffordTableau parse_gate(int n, const std::string &text) {
    std::istringstream in(text);
    std::string name;
    in >> name;
    std::vector<int> q;
    int k;
    while (in >> k) q.push_back(k);
    if (!in.eof()) throw std::invalid_argument("gate \"" + text + "\": malformed qubit list");
    for (int x : q) {
        if (x < 0 || x >= n) throw std::invalid_argument("gate \"" + text + "\": qubit out of range");
    }
    for (auto &c : name) c = char(std::toupper(static_cast<unsigned char>(c)));
    auto need = [&](size_t count) {
        if (q.size() != count) throw std::invalid_argument("gate \"" + text + "\": wrong number of qubits");
    };
    if (name == "H") {
        need(1);
        return CliffordTableau::hadamard(n, q[0]);
    }
    if (name == "S") {
        need(1);
        return CliffordTableau::phase(n, q[0]);
    }
    if (name == "X" || name == "Y" || name == "Z") {
        need(1);
        PauliPoint p = name == "X" ? PauliPoint::X(n, q[0]) : name == "Y" ? PauliPoint::Y(n, q[0]) : PauliPoint::Z(n, q[0]);
        return CliffordTableau::pauli(p);
    }
    if (name == "CNOT" || name == "CX") {
        need(2);
        if (q[0] == q[1]) throw std::invalid_argument("gate \"" + text + "\": control equals target");
        return CliffordTableau::cnot(n, q[0], q[1]);
    }
    if (name == "CZ") {
        need(2);
        if (q[0] == q[1]) throw std::invalid_argument("gate \"" + text + "\": control equals target");
        auto h = CliffordTableau::hadamard(n, q[1]);
        return compose(h, compose(CliffordTableau::cnot(n, q[0], q[1]), h));
    }
    throw std::invalid_argument("unknown gate \"" + name + "\"");
}

MeasSequence compile_circuit(const Circuit &c) {
    MeasSequence seq;
    seq.n = c.n;
    CliffordTableau w = CliffordTableau::identity(c.n);
    CliffordTableau w_inv = w;
    for (const auto &st : c.steps) {
        if (st.is_gate) {
            if (st.gate.n() != c.n) throw std::invalid_argument("circuit: gate of wrong size");
            w = compose(st.gate, w);
            w_inv = invert(w);
            continue;
        }
        // Measuring T after W is measuring W^dagger T W before it.
        PhasedPauli pulled = w_inv.apply(st.measure.observable);
        seq.steps.push_back(MeasStep{pulled, st.measure.cond});
    }
    seq.validate();
    return seq;
}

bool condition_holds(const std::optional<Condition> &cond, const std::vector<int> &outcomes) {
    if (!cond) return true;
    return outcomes.at(size_t(cond->step)) == cond->outcome;
}

QOperator born_step(const QOperator &unnormalized, const PhasedPauli &observable, int s) {
    return project(unnormalized, observable.point, (s + observable.sign_bit()) & 1);
}

namespace {

void born_dfs(const QOperator &rho, const MeasSequence &seq, std::vector<int> &outcomes, Distribution &out) {
    size_t k = outcomes.size();
    if (k == seq.steps.size()) {
        FieldElem p = rho.trace();
        if (!p.is_zero()) out[outcomes] += p;
        return;
    }
    const auto &st = seq.steps[k];
    if (!condition_holds(st.cond, outcomes)) {
        outcomes.push_back(-1);
        born_dfs(rho, seq, outcomes, out);
        outcomes.pop_back();
        return;
    }
    for (int s = 0; s < 2; s++) {
        QOperator next = born_step(rho, st.observable, s);
        if (next.is_zero()) continue;
        outcomes.push_back(s);
        born_dfs(next, seq, outcomes, out);
        outcomes.pop_back();
    }
}

}  // namespace

Distribution born_oracle(const QOperator &rho, const MeasSequence &seq) {
    if (rho.n() > 4) throw std::invalid_argument("born_oracle: n above bound 4");
    if (rho.n() != seq.n) throw std::invalid_argument("born_oracle: dimension mismatch");
    seq.validate();
    Distribution out;
    std::vector<int> outcomes;
    born_dfs(rho, seq, outcomes, out);
    return out;
}

FieldElem total_probability(const Distribution &d) {
    FieldElem t;
    for (const auto &[k, p] : d) t += p;
    return t;
}

}  // namespace lambda_forge
