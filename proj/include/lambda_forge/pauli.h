// Copyright 2026 The lambda-forge Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LAMBDA_FORGE_PAULI_H
#define LAMBDA_FORGE_PAULI_H

#include <string>
#include <string_view>

#include "lambda_forge/gf2.h"

namespace lambda_forge {

// T_v is the tensor product of the Hermitian single-qubit Paulis selected by (z_k, x_k):
// (0,0)=I, (0,1)=X, (1,0)=Z, (1,1)=Y; equivalently T_v = (-i)^{|v_Z & v_X|} Z(v_Z) X(v_X).

/// i^phase * T_point.
struct PhasedPauli {
    PauliPoint point;
    int phase = 0;

    PhasedPauli() = default;
    PhasedPauli(PauliPoint p, int ph = 0) : point(p), phase(((ph % 4) + 4) % 4) {}

    bool is_hermitian() const { return phase % 2 == 0; }
    /// Sign bit of a Hermitian value (phase 0 -> 0, phase 2 -> 1).
    int sign_bit() const;
    /// "+XZ" / "-XZ" / "+iXZ" / "-iXZ".
    std::string to_string() const;
    /// Parses "+XZ", "-XZ", "XZ", "iXZ", "-iXZ" (a leading U+2212 minus is accepted too).
    static PhasedPauli from_string(std::string_view text);

    bool operator==(const PhasedPauli &) const = default;
};

/// f with T_v T_w = i^f T_{v+w}.
int product_phase(const PauliPoint &v, const PauliPoint &w);
PhasedPauli pauli_mul(const PhasedPauli &p, const PhasedPauli &q);
/// T_{v+w} = (-1)^beta T_v T_w for commuting v, w.
int beta(const PauliPoint &v, const PauliPoint &w);

}  // namespace lambda_forge

#endif
