// Copyright 2026 The lambda-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include "lambda_forge/reduction.h"

#include <stdexcept>

namespace lambda_forge {

void LiftedInstance::validate() const {
    int nb = sigma.space.n();
    if (m <= 0) throw std::invalid_argument("lifted instance: register A must be nonempty");
    if (nb <= 0) throw std::invalid_argument("lifted instance: register B must be nonempty");
    if (u.n() != m + nb) throw std::invalid_argument("lifted instance: tableau size must be m + |B|");
    if (!sigma.space.is_maximal_isotropic()) throw std::invalid_argument("lifted instance: sigma must be a pure stabilizer state");
    for (const auto &v : sigma.space.elements()) {
        if (!sigma.values.count(v)) throw std::invalid_argument("lifted instance: sigma misses a value at " + v.label());
    }
    if (!is_consistent(sigma.values)) throw std::invalid_argument("lifted instance: sigma values inconsistent");
    u.validate();
}

QOperator lifted_state(const QOperator &x, const LiftedInstance &inst) {
    if (x.n() != inst.m) throw std::invalid_argument("lifted_state: X has wrong size");
    return conjugate(inst.u, op_tensor(x, stabilizer_projector(inst.sigma)));
}

PhasedPauli FrameRotation::apply(const PhasedPauli &q) const {
    bool cg = commute(q.point, g.point), co = commute(q.point, o.point);
    if (cg && co) return q;
    if (!cg && !co) return PhasedPauli(q.point, q.phase + 2);
    PhasedPauli r = cg ? pauli_mul(pauli_mul(q, g), o) : pauli_mul(pauli_mul(q, o), g);
    if (!r.is_hermitian()) throw std::logic_error("frame rotation produced a non-Hermitian image");
    return r;
}

QOperator apply_rotation(const FrameRotation &r, const QOperator &a) {
    QOperator out(a.n());
    for (const auto &[v, c] : a.coeffs()) {
        PhasedPauli img = r.apply(PhasedPauli(v));
        out.add_to(img.point, img.sign_bit() ? -c : c);
    }
    return out;
}

SequenceReducer::SequenceReducer(LiftedInstance inst) : inst_(std::move(inst)) {
    inst_.validate();
    u_inv_ = invert(inst_.u);
}

ReducedStep SequenceReducer::classify(const PhasedPauli &observable) const {
    int n = inst_.n(), m = inst_.m;
    if (observable.point.n != n) throw std::invalid_argument("reducer: observable has wrong size");
    if (observable.point.is_zero() || !observable.is_hermitian()) {
        throw std::invalid_argument("reducer: observable must be a nonidentity Hermitian Pauli");
    }
    PhasedPauli p = u_inv_.apply(observable);
    for (const auto &r : frame_) p = r.apply(p);
    ReducedStep st;
    st.pulled = p;
    PauliPoint pa = p.point.head(m), pb = p.point.tail(m);
    const Subspace &jb = inst_.sigma.space;
    bool in_stabilizer = true;
    for (const auto &b : jb.basis()) {
        if (!commute(b, pb)) {
            in_stabilizer = false;
            break;
        }
    }
    if (in_stabilizer) {
        // pb lies in the maximal isotropic J_B, so T_pb acts on Pi_sigma as (-1)^{s(pb)}.
        int sign = (p.sign_bit() + inst_.sigma.values.at(pb)) & 1;
        if (pa.is_zero()) {
            st.kind = ReducedKind::kFixed;
            st.fixed_outcome = sign;
        } else {
            st.kind = ReducedKind::kMeasure;
            st.reduced = PhasedPauli(pa, 2 * sign);
        }
        return st;
    }
    st.kind = ReducedKind::kCoin;
    for (const auto &g : jb.element_set()) {
        if (!commute(g, pb)) {
            st.g = PhasedPauli(PauliPoint::zero(m).concat(g), 2 * inst_.sigma.values.at(g));
            return st;
        }
    }
    throw std::logic_error("reducer: no anticommuting stabilizer element");
}

void SequenceReducer::apply_coin(const ReducedStep &step, int s) {
    if (step.kind != ReducedKind::kCoin) throw std::invalid_argument("reducer: apply_coin on a non-random step");
    frame_.push_back(FrameRotation{step.g, PhasedPauli(step.pulled.point, step.pulled.phase + 2 * (s & 1))});
}

void SequenceReducer::restore_frame(const std::vector<FrameRotation> &frame) {
    for (const auto &r : frame) {
        if (r.g.point.n != inst_.n() || r.o.point.n != inst_.n()) throw std::invalid_argument("frame rotation has wrong size");
        if (!r.g.is_hermitian() || !r.o.is_hermitian() || commute(r.g.point, r.o.point)) {
            throw std::invalid_argument("frame rotation needs anticommuting Hermitian Paulis");
        }
    }
    frame_ = frame;
}

QOperator SequenceReducer::represented(const QOperator &x) const {
    QOperator a = op_tensor(x, stabilizer_projector(inst_.sigma));
    for (auto it = frame_.rbegin(); it != frame_.rend(); ++it) a = apply_rotation(*it, a);
    return conjugate(inst_.u, a);
}

ReducedSequence reduce_sequence(const LiftedInstance &inst, const MeasSequence &seq, const std::vector<int> &coins) {
    seq.validate();
    if (seq.n != inst.n()) throw std::invalid_argument("reduce_sequence: sequence and instance sizes differ");
    SequenceReducer red(inst);
    ReducedSequence out;
    out.m = inst.m;
    // Outcomes known statically: coins and fixed values; -2 marks a register-A outcome.
    std::vector<int> known;
    size_t next_coin = 0;
    for (const auto &ms : seq.steps) {
        ReducedStep st = red.classify(ms.observable);
        st.cond = ms.cond;
        bool runs = true;
        if (ms.cond) {
            int ref = known.at(size_t(ms.cond->step));
            if (ref == -2) {
                if (st.kind == ReducedKind::kCoin) {
                    throw std::invalid_argument("reduce_sequence: random step conditioned on a register-A outcome");
                }
            } else {
                runs = ref == ms.cond->outcome;
            }
        }
        if (!runs) {
            known.push_back(-1);
        } else if (st.kind == ReducedKind::kCoin) {
            if (next_coin >= coins.size()) throw std::invalid_argument("reduce_sequence: coin schedule too short");
            int c = coins[next_coin++] & 1;
            red.apply_coin(st, c);
            out.coins.push_back(c);
            known.push_back(c);
        } else if (st.kind == ReducedKind::kFixed) {
            known.push_back(st.fixed_outcome);
        } else {
            known.push_back(-2);
        }
        out.steps.push_back(std::move(st));
    }
    return out;
}

namespace {

void reduced_dfs(const QOperator &x, const SequenceReducer &red, const MeasSequence &seq, std::vector<int> &outcomes,
                 const FieldElem &weight, Distribution &out) {
    size_t k = outcomes.size();
    if (k == seq.steps.size()) {
        FieldElem p = weight * x.trace();
        if (!p.is_zero()) out[outcomes] += p;
        return;
    }
    const auto &ms = seq.steps[k];
    if (!condition_holds(ms.cond, outcomes)) {
        outcomes.push_back(-1);
        reduced_dfs(x, red, seq, outcomes, weight, out);
        outcomes.pop_back();
        return;
    }
    ReducedStep st = red.classify(ms.observable);
    switch (st.kind) {
        case ReducedKind::kFixed:
            outcomes.push_back(st.fixed_outcome);
            reduced_dfs(x, red, seq, outcomes, weight, out);
            outcomes.pop_back();
            break;
        case ReducedKind::kCoin: {
            FieldElem half = weight * FieldElem::frac(1, 2);
            for (int s = 0; s < 2; s++) {
                SequenceReducer next = red;
                next.apply_coin(st, s);
                outcomes.push_back(s);
                reduced_dfs(x, next, seq, outcomes, half, out);
                outcomes.pop_back();
            }
            break;
        }
        case ReducedKind::kMeasure:
            for (int s = 0; s < 2; s++) {
                QOperator nx = born_step(x, st.reduced, s);
                if (nx.is_zero()) continue;
                outcomes.push_back(s);
                reduced_dfs(nx, red, seq, outcomes, weight, out);
                outcomes.pop_back();
            }
            break;
    }
}

}  // namespace

Distribution reduced_run_distribution(const QOperator &x, const LiftedInstance &inst, const MeasSequence &seq) {
    seq.validate();
    if (x.n() != inst.m || seq.n != inst.n()) throw std::invalid_argument("reduced_run_distribution: size mismatch");
    SequenceReducer red(inst);
    Distribution out;
    std::vector<int> outcomes;
    reduced_dfs(x, red, seq, outcomes, FieldElem(1), out);
    return out;
}

}  // namespace lambda_forge
