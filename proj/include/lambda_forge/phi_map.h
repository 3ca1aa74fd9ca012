// Copyright 2026 The lambda-forge Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LAMBDA_FORGE_PHI_MAP_H
#define LAMBDA_FORGE_PHI_MAP_H

#include <random>
#include <string>
#include <vector>

#include "lambda_forge/clifford.h"
#include "lambda_forge/qoperator.h"
#include "lambda_forge/stabilizer.h"

namespace lambda_forge {

/// J0 = <x_{m+1}, ..., x_n>: X on every tail qubit.
Subspace tail_x_subspace(int n, int m);

struct PhiParams {
    int n = 0;
    int m = 0;
    Subspace j;            // dim n - m
    ValueAssignment r;     // consistent on j
    CliffordTableau tableau;  // sends Pi_{J0,0} to Pi_{J,r}

    /// Builds the witness tableau with clifford_for_isotropic_pair.
    static PhiParams make(int m, const Subspace &j, const ValueAssignment &r);
    void validate() const;
};

/// X (m qubits) tensor Pi_{J,r}, where J lives on the tail qubits m..n-1 of E_n.
QOperator phi_special(const QOperator &x, const Subspace &j, const ValueAssignment &r);
QOperator phi_general(const QOperator &x, const PhiParams &params);
/// Inverse of phi_general on its image; throws std::invalid_argument outside the image.
QOperator phi_preimage(const QOperator &lifted, const PhiParams &params);

/// Closed form of Tr(phi_special(X, J, r) Pi_{I,s}) for J in special position.
FieldElem lemma1_trace(const QOperator &x, const Subspace &j, const ValueAssignment &r, const Subspace &i,
                       const ValueAssignment &s);
/// The literal formula delta * |I cap J-perp| / 2^n * Tr(X Pi_{I cap E_m, s|}); only valid when
/// I cap J-perp splits as (I cap E_m) + (I cap J).
FieldElem lemma1_trace_literal(const QOperator &x, const Subspace &j, const ValueAssignment &r, const Subspace &i,
                               const ValueAssignment &s);

/// Y-tilde on m qubits: beta~_v = |J|^{-1} sum_{u in J} beta_{u+v} (-1)^{r(u)}.
QOperator lemma2_reduce(const QOperator &y, int m, const Subspace &j, const ValueAssignment &r);
/// Checks Tr(Y Pi_{J+I', r*s'}) == Tr(Y~ Pi_{I',s'}); I' is an isotropic subspace of E_m.
bool lemma2_check(const QOperator &y, int m, const Subspace &j, const ValueAssignment &r, const Subspace &ip,
                  const ValueAssignment &sp);

struct IdentitySweep {
    long checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// Random operator on n qubits with small rational coefficients; trace 1, or 0 when traceless.
QOperator random_rational_operator(int n, std::mt19937_64 &rng, bool traceless);
/// m = 1, n = 2: `samples` random trace-one X against every tail (J, r) and all 60 stabilizer states,
/// comparing lemma1_trace with trace_inner(phi_special(X, J, r), Pi_{I,s}).
IdentitySweep lemma1_sweep(int samples, uint64_t seed);
/// m = 1, n = 2: `samples` random traceless Y against every tail (J, r) and every (I', s') on E_1.
IdentitySweep lemma2_sweep(int samples, uint64_t seed);

}  // namespace lambda_forge

#endif
