// Copyright 2026 The lambda-forge Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LAMBDA_FORGE_CNC_H
#define LAMBDA_FORGE_CNC_H

#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "lambda_forge/qoperator.h"
#include "lambda_forge/stabilizer.h"

namespace lambda_forge {

struct CncSet {
    int n = 0;
    PointSet omega;
    ValueAssignment gamma;

    /// Throws std::invalid_argument naming the broken invariant.
    void validate() const;
    bool operator==(const CncSet &o) const { return n == o.n && omega == o.omega && gamma == o.gamma; }
    bool operator<(const CncSet &o) const {
        return std::tie(n, omega, gamma) < std::tie(o.n, o.omega, o.gamma);
    }
};

struct WeightedCnc {
    FieldElem weight;
    CncSet set;
};

bool is_closed(const PointSet &omega);
/// All assignments gamma on omega satisfying the commuting-pair rule (empty when contextual).
std::vector<ValueAssignment> consistent_assignments_on(const PointSet &omega, size_t limit = SIZE_MAX);
bool is_noncontextual(const PointSet &omega);
bool is_cnc(const PointSet &omega);

QOperator build_cnc_operator(const CncSet &c);
/// Recognise an operator of the form A_Omega^gamma.
std::optional<CncSet> as_cnc(const QOperator &a);

/// Maximality by search over one-point extensions (n <= 2).
bool is_maximal_cnc(const PointSet &omega, int n);
/// Every closed noncontextual set of E_n (n <= 2), including non-maximal ones.
std::vector<PointSet> enumerate_cnc_sets(int n);
std::vector<PointSet> enumerate_maximal_cnc_sets(int n);
/// Every maximal cnc set with every consistent assignment (n <= 2).
std::vector<CncSet> enumerate_cnc_vertices(int n);

/// Pi_{a,s} A_Omega^gamma Pi_{a,s} as weighted cnc operators (weights sum to the outcome probability).
std::vector<WeightedCnc> cnc_update(const CncSet &c, const PauliPoint &a, int s);

}  // namespace lambda_forge

#endif
