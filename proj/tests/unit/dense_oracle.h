// Copyright 2026 The lambda-forge Authors
// SPDX-License-Identifier: Apache-2.0
//
// Dense-matrix reference implementations used as independent oracles in the unit tests.
// Qubit 0 is the leftmost (most significant) tensor factor, matching pauli_matrix.

#ifndef LAMBDA_FORGE_TESTS_DENSE_ORACLE_H
#define LAMBDA_FORGE_TESTS_DENSE_ORACLE_H

#include <Eigen/Dense>
#include <complex>

#include "lambda_forge/qoperator.h"

namespace dense {

using C = std::complex<double>;
using Mat = Eigen::MatrixXcd;

inline Mat kron(const Mat &a, const Mat &b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); i++) {
        for (int j = 0; j < a.cols(); j++) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
    return out;
}

inline Mat single(int n, int k, const Mat &g) {
    Mat m = Mat::Identity(1, 1);
    for (int q = 0; q < n; q++) m = kron(m, q == k ? g : Mat(Mat::Identity(2, 2)));
    return m;
}

inline Mat hadamard(int n, int k) {
    Mat h(2, 2);
    h << 1, 1, 1, -1;
    return single(n, k, h / std::sqrt(2.0));
}

inline Mat phase(int n, int k) {
    Mat s(2, 2);
    s << 1, 0, 0, C(0, 1);
    return single(n, k, s);
}

inline Mat cnot(int n, int control, int target) {
    int d = 1 << n;
    Mat m = Mat::Zero(d, d);
    for (int i = 0; i < d; i++) {
        int cbit = (i >> (n - 1 - control)) & 1;
        int j = cbit ? i ^ (1 << (n - 1 - target)) : i;
        m(j, i) = 1;
    }
    return m;
}

inline bool close(const Mat &a, const Mat &b, double tol = 1e-9) {
    return a.rows() == b.rows() && a.cols() == b.cols() && (a - b).norm() < tol;
}

/// Projector (1 + (-1)^s P) / 2 for a Hermitian Pauli matrix P.
inline Mat projector(const Mat &p, int s) {
    Mat id = Mat::Identity(p.rows(), p.cols());
    return (id + (s ? -1.0 : 1.0) * p) / 2.0;
}

}  // namespace dense

#endif
