// Copyright 2026 The lambda-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include "lambda_forge/pauli.h"

#include <bit>
#include <stdexcept>

namespace lambda_forge {

int PhasedPauli::sign_bit() const {
    if (!is_hermitian()) {
        throw std::domain_error("sign_bit of a non-Hermitian Pauli " + to_string());
    }
    return phase / 2;
}

std::string PhasedPauli::to_string() const {
    static const char *prefix[4] = {"+", "+i", "-", "-i"};
    return prefix[phase] + point.label();
}

PhasedPauli PhasedPauli::from_string(std::string_view text) {
    int phase = 0;
    std::string_view t = text;
    if (t.substr(0, 3) == "\xE2\x88\x92") {
        phase = 2;
        t.remove_prefix(3);
    } else if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
        if (t[0] == '-') phase = 2;
        t.remove_prefix(1);
    }
    if (!t.empty() && t[0] == 'i') {
        phase += 1;
        t.remove_prefix(1);
    }
    if (t.empty()) throw std::invalid_argument("empty Pauli string \"" + std::string(text) + "\"");
    return PhasedPauli(PauliPoint::from_label(t), phase);
}

int product_phase(const PauliPoint &v, const PauliPoint &w) {
    if (v.n != w.n) throw std::invalid_argument("product_phase: dimension mismatch");
    uint32_t uz = v.z ^ w.z, ux = v.x ^ w.x;
    int f = -std::popcount(v.z & v.x) - std::popcount(w.z & w.x) + 2 * std::popcount(v.x & w.z) +
            std::popcount(uz & ux);
    return ((f % 4) + 4) % 4;
}

PhasedPauli pauli_mul(const PhasedPauli &p, const PhasedPauli &q) {
    return PhasedPauli(p.point + q.point, p.phase + q.phase + product_phase(p.point, q.point));
}

int beta(const PauliPoint &v, const PauliPoint &w) {
    if (symplectic_form(v, w)) {
        throw std::domain_error("beta undefined for anticommuting " + v.label() + ", " + w.label());
    }
    return product_phase(v, w) / 2;
}

}  // namespace lambda_forge
