// Copyright 2026 The lambda-forge Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LAMBDA_FORGE_POLYTOPE_H
#define LAMBDA_FORGE_POLYTOPE_H

#include <optional>
#include <vector>

#include "lambda_forge/qoperator.h"
#include "lambda_forge/stabilizer.h"

namespace lambda_forge {

/// Cached result of enumerate_stabilizer_states (n <= 4).
const std::vector<StabilizerState> &stabilizer_states(int n);

/// Tr(X Pi_sigma) for every pure stabilizer state sigma.
struct FacetCertificate {
    QOperator op;
    std::vector<FieldElem> facet_values;  // indexed like stabilizer_states(n)
    std::vector<size_t> active_set;       // indices with value 0
    std::optional<size_t> violation;      // index of the most negative value, if any

    bool member() const { return !violation.has_value(); }
    const StabilizerState &state(size_t i) const { return stabilizer_states(op.n())[i]; }
    FieldElem min_value() const;
    /// Every facet attaining the minimum value, in stabilizer_states order.
    std::vector<size_t> minimizers() const;
};

FacetCertificate membership(const QOperator &x);

struct VertexReport {
    bool vertex = false;
    int rank = 0;      // rank of the active constraints' linear parts
    int needed = 0;    // 4^n - 1
    size_t active = 0;
};

/// Active-constraint rank test; throws std::domain_error for non-members.
VertexReport is_vertex(const QOperator &x);
/// Basis of traceless directions d with every active facet constant along d (empty iff vertex).
std::vector<QOperator> active_nullspace(const FacetCertificate &cert);

/// Vertices of Lambda_1 by exhaustive basis enumeration over the six facets.
std::vector<QOperator> enumerate_vertices_n1();

struct Decomposition {
    bool feasible = false;
    std::vector<FieldElem> weights;  // aligned with the pool
};

/// Exact LP feasibility over Q(sqrt2): nonnegative weights p with sum_j p_j pool_j = rho.
Decomposition decompose(const QOperator &rho, const std::vector<QOperator> &pool);

/// Rank over Q of an integer-valued matrix given as rows.
int rational_rank(std::vector<std::vector<Rational>> rows);

}  // namespace lambda_forge

#endif
