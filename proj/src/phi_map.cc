// Copyright 2026 The lambda-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include "lambda_forge/phi_map.h"

#include <stdexcept>

#include "lambda_forge/polytope.h"

namespace lambda_forge {

Subspace tail_x_subspace(int n, int m) {
    std::vector<PauliPoint> gens;
    for (int k = m; k < n; k++) gens.push_back(PauliPoint::X(n, k));
    return Subspace::span(n, gens);
}

PhiParams PhiParams::make(int m, const Subspace &j, const ValueAssignment &r) {
    PhiParams p;
    p.n = j.n();
    p.m = m;
    p.j = j;
    p.r = r;
    Subspace j0 = tail_x_subspace(p.n, m);
    p.tableau = clifford_for_isotropic_pair(j0, assignment_from_generators(j0, std::vector<int>(j0.dim(), 0)), j, r);
    return p;
}

void PhiParams::validate() const {
    if (m <= 0 || m >= n) throw std::invalid_argument("phi params: need 0 < m < n");
    if (j.n() != n || j.dim() != n - m || !j.is_isotropic()) {
        throw std::invalid_argument("phi params: J must be isotropic of dimension n - m");
    }
    if (tableau.n() != n) throw std::invalid_argument("phi params: tableau has wrong size");
    tableau.validate();
    Subspace j0 = tail_x_subspace(n, m);
    auto r0 = assignment_from_generators(j0, std::vector<int>(j0.dim(), 0));
    if (conjugate(tableau, stabilizer_projector(j0, r0)) != stabilizer_projector(j, r)) {
        throw std::invalid_argument("phi params: tableau does not send Pi_{J0,0} to Pi_{J,r}");
    }
}

namespace {

void require_tail(const Subspace &j, int m) {
    for (const auto &b : j.basis()) {
        if (!b.head(m).is_zero()) throw std::invalid_argument("J must be supported on the tail qubits");
    }
}

}  // namespace

QOperator phi_special(const QOperator &x, const Subspace &j, const ValueAssignment &r) {
    int n = j.n(), m = x.n();
    if (m >= n) throw std::invalid_argument("phi_special: m must be less than n");
    require_tail(j, m);
    if (!j.is_isotropic()) throw std::invalid_argument("phi_special: J not isotropic");
    // X tensor Pi_{J,r}: coefficient at v + u is 2^{n-m} |J|^{-1} (-1)^{r(u)} alpha_v.
    int shift = (n - m) - j.dim();
    QOperator out(n);
    auto ju = j.elements();
    for (const auto &[v, a] : x.coeffs()) {
        FieldElem base = a.scaled_pow2(shift);
        for (const auto &u : ju) {
            int ru = r.at(u);
            out.set(v.embed(n, 0) + u, ru ? -base : base);
        }
    }
    return out;
}

QOperator phi_general(const QOperator &x, const PhiParams &params) {
    if (x.n() != params.m) throw std::invalid_argument("phi_general: operator has wrong size");
    Subspace j0 = tail_x_subspace(params.n, params.m);
    auto r0 = assignment_from_generators(j0, std::vector<int>(j0.dim(), 0));
    return conjugate(params.tableau, phi_special(x, j0, r0));
}

QOperator phi_preimage(const QOperator &lifted, const PhiParams &params) {
    if (lifted.n() != params.n) throw std::invalid_argument("phi_preimage: operator has wrong size");
    QOperator b = conjugate(invert(params.tableau), lifted);
    int n = params.n, m = params.m;
    Subspace j0 = tail_x_subspace(n, m);
    QOperator x(m);
    for (const auto &[w, c] : b.coeffs()) {
        PauliPoint u = w.tail(m);
        if (!j0.contains(PauliPoint::zero(m).concat(u))) {
            throw std::invalid_argument("phi_preimage: support leaves E_m + J at " + w.label());
        }
        if (u.is_zero()) x.set(w.head(m), c);
    }
    for (const auto &[w, c] : b.coeffs()) {
        if (b.coeff(w.head(m).concat(PauliPoint::zero(n - m))) != c) {
            throw std::invalid_argument("phi_preimage: coefficients do not follow the stabilizer-tail pattern");
        }
    }
    for (const auto &[v, c] : x.coeffs()) {
        for (const auto &u : j0.elements()) {
            if (b.coeff(v.embed(n, 0) + u) != c) {
                throw std::invalid_argument("phi_preimage: coefficients do not follow the stabilizer-tail pattern");
            }
        }
    }
    return x;
}

namespace {

FieldElem trace_with_projector(const QOperator &x, const Subspace &ip, const ValueAssignment &sigma) {
    FieldElem sum;
    for (const auto &v : ip.elements()) {
        FieldElem c = x.coeff(v);
        if (sigma.at(v)) {
            sum -= c;
        } else {
            sum += c;
        }
    }
    return sum.scaled_pow2(-ip.dim());
}

}  // namespace

FieldElem lemma1_trace(const QOperator &x, const Subspace &j, const ValueAssignment &r, const Subspace &i,
                       const ValueAssignment &s) {
    int n = j.n(), m = x.n();
    require_tail(j, m);
    if (j.dim() != n - m) throw std::invalid_argument("lemma1_trace: J must have dimension n - m");
    if (!i.is_maximal_isotropic()) throw std::invalid_argument("lemma1_trace: I must be maximal isotropic");
    Subspace ij = i.intersect(j);
    for (const auto &w : ij.elements()) {
        if (r.at(w) != s.at(w)) return FieldElem();
    }
    Subspace k = i.intersect(perp(j));
    // Project K onto E_m; each fibre is a coset of I cap J and carries the induced value r(u) + s(w).
    std::vector<PauliPoint> heads;
    ValueAssignment sigma;
    for (const auto &w : k.elements()) {
        PauliPoint v = w.head(m);
        PauliPoint u = PauliPoint::zero(m).concat(w.tail(m));
        int val = (r.at(u) + s.at(w)) & 1;
        auto [it, inserted] = sigma.emplace(v, val);
        if (!inserted && it->second != val) throw std::logic_error("lemma1_trace: induced assignment ill-defined");
        heads.push_back(v);
    }
    Subspace ip = Subspace::span(m, heads);
    FieldElem tr = trace_with_projector(x, ip, sigma);
    return tr.scaled_pow2(k.dim() - n);
}

FieldElem lemma1_trace_literal(const QOperator &x, const Subspace &j, const ValueAssignment &r, const Subspace &i,
                               const ValueAssignment &s) {
    int n = j.n(), m = x.n();
    require_tail(j, m);
    Subspace ij = i.intersect(j);
    for (const auto &w : ij.elements()) {
        if (r.at(w) != s.at(w)) return FieldElem();
    }
    Subspace k = i.intersect(perp(j));
    std::vector<PauliPoint> heads;
    ValueAssignment sigma;
    for (const auto &w : i.elements()) {
        if (!w.tail(m).is_zero()) continue;
        heads.push_back(w.head(m));
        sigma[w.head(m)] = s.at(w);
    }
    Subspace im = Subspace::span(m, heads);
    return trace_with_projector(x, im, sigma).scaled_pow2(k.dim() - n);
}

QOperator lemma2_reduce(const QOperator &y, int m, const Subspace &j, const ValueAssignment &r) {
    int n = y.n();
    require_tail(j, m);
    QOperator out(m);
    auto ju = j.elements();
    for (const auto &v : all_points(m)) {
        FieldElem acc;
        for (const auto &u : ju) {
            FieldElem c = y.coeff(v.embed(n, 0) + u);
            if (r.at(u)) {
                acc -= c;
            } else {
                acc += c;
            }
        }
        out.set(v, acc.scaled_pow2(-j.dim()));
    }
    return out;
}

bool lemma2_check(const QOperator &y, int m, const Subspace &j, const ValueAssignment &r, const Subspace &ip,
                  const ValueAssignment &sp) {
    if (!y.trace().is_zero()) throw std::invalid_argument("lemma2_check: Y must be traceless");
    int n = y.n();
    std::vector<PauliPoint> lifted;
    for (const auto &b : ip.basis()) lifted.push_back(b.embed(n, 0));
    Subspace ip_n = Subspace::span(n, lifted);
    ValueAssignment sp_n;
    for (const auto &[v, b] : sp) sp_n[v.embed(n, 0)] = b;
    Subspace total = j.sum(ip_n);
    ValueAssignment conv = convolve_assignment(j, r, ip_n, sp_n);
    FieldElem lhs = trace_inner(y, stabilizer_projector(total, conv));
    QOperator yt = lemma2_reduce(y, m, j, r);
    FieldElem rhs = trace_inner(yt, stabilizer_projector(ip, sp));
    return lhs == rhs;
}

namespace {

std::vector<std::pair<Subspace, ValueAssignment>> tail_pairs(int n, int m) {
    std::vector<std::pair<Subspace, ValueAssignment>> out;
    for (const auto &t : enumerate_isotropics(n - m)) {
        if (t.dim() != n - m) continue;
        std::vector<PauliPoint> lifted;
        for (const auto &b : t.basis()) lifted.push_back(PauliPoint::zero(m).concat(b));
        Subspace j = Subspace::span(n, lifted);
        for (auto &r : enumerate_consistent_assignments(j)) out.emplace_back(j, std::move(r));
    }
    return out;
}

}  // namespace

QOperator random_rational_operator(int n, std::mt19937_64 &rng, bool traceless) {
    std::uniform_int_distribution<long> num(-6, 6), den(1, 6);
    QOperator x(n);
    x.set(PauliPoint::zero(n), FieldElem(traceless ? 0 : 1));
    for (const auto &v : nonzero_points(n)) x.set(v, FieldElem::frac(num(rng), den(rng)));
    return x;
}

IdentitySweep lemma1_sweep(int samples, uint64_t seed) {
    const int m = 1, n = 2;
    std::mt19937_64 rng(seed);
    auto pairs = tail_pairs(n, m);
    IdentitySweep rep;
    for (int k = 0; k < samples; k++) {
        QOperator x = random_rational_operator(m, rng, false);
        for (const auto &[j, r] : pairs) {
            QOperator lifted = phi_special(x, j, r);
            for (const auto &st : stabilizer_states(n)) {
                rep.checked++;
                FieldElem closed = lemma1_trace(x, j, r, st.space, st.values);
                FieldElem direct = trace_inner(lifted, stabilizer_projector(st));
                if (closed != direct) {
                    rep.failures.push_back("X=" + x.to_string() + " J=" + j.basis()[0].label() + " state=" + st.label());
                }
            }
        }
    }
    return rep;
}

IdentitySweep lemma2_sweep(int samples, uint64_t seed) {
    const int m = 1, n = 2;
    std::mt19937_64 rng(seed);
    auto pairs = tail_pairs(n, m);
    IdentitySweep rep;
    for (int k = 0; k < samples; k++) {
        QOperator y = random_rational_operator(n, rng, true);
        for (const auto &[j, r] : pairs) {
            for (const auto &ip : enumerate_isotropics(m)) {
                for (const auto &sp : enumerate_consistent_assignments(ip)) {
                    rep.checked++;
                    if (!lemma2_check(y, m, j, r, ip, sp)) {
                        rep.failures.push_back("Y=" + y.to_string() + " J=" + j.basis()[0].label());
                    }
                }
            }
        }
    }
    return rep;
}

}  // namespace lambda_forge
