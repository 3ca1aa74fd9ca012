// Copyright 2026 The lambda-forge Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LAMBDA_FORGE_REDUCTION_H
#define LAMBDA_FORGE_REDUCTION_H

#include <vector>

#include "lambda_forge/circuit.h"
#include "lambda_forge/clifford.h"
#include "lambda_forge/stabilizer.h"

namespace lambda_forge {

/// The initial state U (X tensor Pi_sigma) U^dagger with X on the first m qubits (register A)
/// and the stabilizer state sigma on the remaining ones (register B).
struct LiftedInstance {
    int m = 0;
    StabilizerState sigma;
    CliffordTableau u;

    int n() const { return u.n(); }
    void validate() const;
};

QOperator lifted_state(const QOperator &x, const LiftedInstance &inst);

/// Conjugation by (G + O) / sqrt 2 for anticommuting signed Paulis G, O (self-inverse, sends G to O).
struct FrameRotation {
    PhasedPauli g;
    PhasedPauli o;
    PhasedPauli apply(const PhasedPauli &q) const;
    bool operator==(const FrameRotation &) const = default;
};
QOperator apply_rotation(const FrameRotation &r, const QOperator &a);

enum class ReducedKind { kMeasure, kFixed, kCoin };

struct ReducedStep {
    ReducedKind kind = ReducedKind::kMeasure;
    PhasedPauli pulled;    // observable pulled back to the X tensor Pi_sigma frame (n qubits)
    PhasedPauli reduced;   // kMeasure: signed Pauli on register A
    int fixed_outcome = 0; // kFixed
    PhasedPauli g;         // kCoin: stabilizer element of sigma anticommuting with `pulled`
    std::optional<Condition> cond;
};

/// Incremental rewriting of measurements on the lifted state into measurements on X alone.
class SequenceReducer {
   public:
    SequenceReducer() = default;
    explicit SequenceReducer(LiftedInstance inst);

    /// Classify the next measurement without changing the frame.
    ReducedStep classify(const PhasedPauli &observable) const;
    /// Record the coin outcome of a kCoin step and fold the corrective rotation into the frame.
    void apply_coin(const ReducedStep &step, int s);
    /// Re-install a previously recorded frame (used when reading serialized descriptors).
    void restore_frame(const std::vector<FrameRotation> &frame);

    const LiftedInstance &instance() const { return inst_; }
    const std::vector<FrameRotation> &frame() const { return frame_; }
    /// The full n-qubit operator currently represented, given the register-A operator.
    QOperator represented(const QOperator &x) const;

   private:
    LiftedInstance inst_;
    CliffordTableau u_inv_;
    std::vector<FrameRotation> frame_;
};

struct ReducedSequence {
    int m = 0;
    std::vector<ReducedStep> steps;
    std::vector<int> coins;  // coin outcomes consumed, in order
};

/// Reduce a whole sequence given the outcomes of its coin steps.  Conditions are carried over;
/// a conditioned coin step whose condition depends on a register-A outcome cannot be reduced
/// statically and is rejected (simulate handles it branch by branch).
ReducedSequence reduce_sequence(const LiftedInstance &inst, const MeasSequence &seq, const std::vector<int> &coins);

/// Outcome distribution of the reduced run: register-A measurements on X, fair coins for the
/// random steps, fixed values for the deterministic ones.
Distribution reduced_run_distribution(const QOperator &x, const LiftedInstance &inst, const MeasSequence &seq);

}  // namespace lambda_forge

#endif
