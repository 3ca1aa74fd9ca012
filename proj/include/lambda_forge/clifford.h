// Copyright 2026 The lambda-forge Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LAMBDA_FORGE_CLIFFORD_H
#define LAMBDA_FORGE_CLIFFORD_H

#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "lambda_forge/pauli.h"
#include "lambda_forge/qoperator.h"
#include "lambda_forge/stabilizer.h"

namespace lambda_forge {

/// Clifford action U T U^dagger on Paulis, stored as the images of X_k and Z_k.
class CliffordTableau {
   public:
    CliffordTableau() = default;
    CliffordTableau(std::vector<PhasedPauli> x_images, std::vector<PhasedPauli> z_images);

    static CliffordTableau identity(int n);
    static CliffordTableau hadamard(int n, int k);
    /// Phase gate S: X -> Y, Z -> Z.
    static CliffordTableau phase(int n, int k);
    static CliffordTableau cnot(int n, int control, int target);
    /// Conjugation by the Pauli T_p.
    static CliffordTableau pauli(const PauliPoint &p);
    /// H, S on every qubit and CNOT on every ordered pair.
    static std::vector<CliffordTableau> generators(int n);
    static CliffordTableau random(int n, std::mt19937_64 &rng, int depth = 0);

    int n() const { return int(x_.size()); }
    const std::vector<PhasedPauli> &x_images() const { return x_; }
    const std::vector<PhasedPauli> &z_images() const { return z_; }

    /// U T_v U^dagger as a signed Pauli.
    PhasedPauli apply_point(const PauliPoint &v) const;
    PhasedPauli apply(const PhasedPauli &p) const;
    /// Throws unless images are Hermitian and the induced map is symplectic.
    void validate() const;

    /// Key used for hashing/dedup: image points and signs.
    std::vector<uint64_t> key() const;
    bool operator==(const CliffordTableau &o) const { return x_ == o.x_ && z_ == o.z_; }
    bool operator<(const CliffordTableau &o) const { return key() < o.key(); }

   private:
    std::vector<PhasedPauli> x_, z_;
};

/// (c o d)(T) = c(d(T)): apply d first.
CliffordTableau compose(const CliffordTableau &c, const CliffordTableau &d);
CliffordTableau invert(const CliffordTableau &c);
QOperator conjugate(const CliffordTableau &c, const QOperator &a);

/// All tableaux for n <= 2 (|Sp_2n(Z_2)| * 4^n of them).
std::vector<CliffordTableau> enumerate_action(int n);

/// A tableau C with S(J0) = J and C Pi_{J0,r0} C^dagger = Pi_{J,r}.
CliffordTableau clifford_for_isotropic_pair(const Subspace &j0, const ValueAssignment &r0, const Subspace &j,
                                            const ValueAssignment &r);

/// Symplectic basis (p_k, q_k) with [p_i, q_j] = delta_ij whose first dim(J) p-vectors span J.
void adapted_symplectic_basis(const Subspace &j, std::vector<PauliPoint> &p, std::vector<PauliPoint> &q);

/// Breadth-first orbit of `start` under conjugation by `gens`, deduplicated exactly.
std::vector<QOperator> clifford_orbit(const QOperator &start, const std::vector<CliffordTableau> &gens);

}  // namespace lambda_forge

#endif
