// Copyright 2026 The lambda-forge Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LAMBDA_FORGE_STABILIZER_H
#define LAMBDA_FORGE_STABILIZER_H

#include <map>
#include <string>
#include <vector>

#include "lambda_forge/gf2.h"
#include "lambda_forge/qoperator.h"

namespace lambda_forge {

/// A Z_2-valued function on an explicit point set; 0 always maps to 0.
using ValueAssignment = std::map<PauliPoint, int>;

/// Does s satisfy s(v+w) = s(v) + s(w) + beta(v,w) for every commuting pair of its domain with v+w in the domain?
bool is_consistent(const ValueAssignment &s);
/// Extend generator values to the whole subspace by beta-consistency.
ValueAssignment assignment_from_generators(const Subspace &j, const std::vector<int> &generator_values);
/// Restrict an assignment to the points of `points` that it defines.
ValueAssignment restrict_assignment(const ValueAssignment &s, const PointSet &points);
/// All consistent assignments on an isotropic subspace (2^dim of them).
std::vector<ValueAssignment> enumerate_consistent_assignments(const Subspace &j);

struct StabilizerState {
    Subspace space;
    ValueAssignment values;

    /// Sign-prefixed generator labels, e.g. {"-XX", "-ZZ"}.
    std::vector<std::string> generator_labels() const;
    std::string label() const;
    static StabilizerState from_generators(const std::vector<std::string> &signed_labels);
    bool operator==(const StabilizerState &o) const { return space == o.space && values == o.values; }
};

QOperator stabilizer_projector(const Subspace &j, const ValueAssignment &s);
inline QOperator stabilizer_projector(const StabilizerState &st) { return stabilizer_projector(st.space, st.values); }

/// Every pair (maximal isotropic I, consistent s on I), ordered by I then by generator values.
std::vector<StabilizerState> enumerate_stabilizer_states(int n, int bound = 4);

/// r*s'(u + v) = r(u) + s'(v) on J + I' (requires J cap I' = {0}).
ValueAssignment convolve_assignment(const Subspace &j, const ValueAssignment &r, const Subspace &ip,
                                    const ValueAssignment &sp);

}  // namespace lambda_forge

#endif
