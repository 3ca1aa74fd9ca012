// Copyright 2026 The lambda-forge Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LAMBDA_FORGE_QOPERATOR_H
#define LAMBDA_FORGE_QOPERATOR_H

#include <Eigen/Dense>
#include <map>
#include <string>

#include "lambda_forge/field.h"
#include "lambda_forge/gf2.h"
#include "lambda_forge/pauli.h"

namespace lambda_forge {

/// Hermitian operator A = 2^{-n} sum_v alpha_v T_v with exact alpha_v; zero entries are never stored.
class QOperator {
   public:
    using Map = std::map<PauliPoint, FieldElem>;

    QOperator() = default;
    explicit QOperator(int n) : n_(n) {}
    QOperator(int n, const Map &coeffs);

    /// The maximally mixed state 2^{-n} I (alpha_0 = 1).
    static QOperator maximally_mixed(int n);
    /// The identity operator (alpha_0 = 2^n).
    static QOperator identity(int n);
    /// Build from {label: value}; all labels must have the same length.
    static QOperator from_labels(const std::map<std::string, FieldElem> &coeffs);

    int n() const { return n_; }
    const Map &coeffs() const { return coeffs_; }
    FieldElem coeff(const PauliPoint &v) const;
    void set(const PauliPoint &v, const FieldElem &value);
    void add_to(const PauliPoint &v, const FieldElem &value);
    FieldElem trace() const { return coeff(PauliPoint::zero(n_)); }
    bool is_zero() const { return coeffs_.empty(); }
    PointSet support() const;

    QOperator scaled(const FieldElem &c) const;
    QOperator operator+(const QOperator &o) const;
    QOperator operator-(const QOperator &o) const;
    bool operator==(const QOperator &o) const { return n_ == o.n_ && coeffs_ == o.coeffs_; }
    bool operator!=(const QOperator &o) const { return !(*this == o); }
    /// Total order for canonical deduplication.
    bool operator<(const QOperator &o) const;

    std::string to_string() const;

   private:
    int n_ = 0;
    Map coeffs_;
};

QOperator op_product(const QOperator &a, const QOperator &b);
QOperator op_tensor(const QOperator &a, const QOperator &b);
FieldElem trace_inner(const QOperator &a, const QOperator &b);
/// Pi_{a,s} A Pi_{a,s} with Pi_{a,s} = (1 + (-1)^s T_a)/2.
QOperator project(const QOperator &a_op, const PauliPoint &a, int s);
/// Same value computed with two generic products; kept as a cross-check.
QOperator project_via_product(const QOperator &a_op, const PauliPoint &a, int s);
/// The projector (1 + (-1)^s T_a)/2 as an operator.
QOperator pauli_projector(const PauliPoint &a, int s);

/// Dense 2^n x 2^n matrix of a Pauli; qubit 0 is the most significant tensor factor.
Eigen::MatrixXcd pauli_matrix(const PauliPoint &v);
/// Dense matrix of an operator (n <= 5); sqrt2 parts are rounded to double.
Eigen::MatrixXcd dense_matrix(const QOperator &a);

}  // namespace lambda_forge

#endif
