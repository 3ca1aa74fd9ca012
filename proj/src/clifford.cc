// Copyright 2026 The lambda-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include "lambda_forge/clifford.h"

#include <deque>
#include <set>
#include <stdexcept>

namespace lambda_forge {

CliffordTableau::CliffordTableau(std::vector<PhasedPauli> x_images, std::vector<PhasedPauli> z_images)
    : x_(std::move(x_images)), z_(std::move(z_images)) {
    if (x_.size() != z_.size()) throw std::invalid_argument("tableau: image counts differ");
}

CliffordTableau CliffordTableau::identity(int n) {
    std::vector<PhasedPauli> xs, zs;
    for (int k = 0; k < n; k++) {
        xs.emplace_back(PauliPoint::X(n, k));
        zs.emplace_back(PauliPoint::Z(n, k));
    }
    return CliffordTableau(xs, zs);
}

CliffordTableau CliffordTableau::hadamard(int n, int k) {
    CliffordTableau t = identity(n);
    t.x_[k] = PhasedPauli(PauliPoint::Z(n, k));
    t.z_[k] = PhasedPauli(PauliPoint::X(n, k));
    return t;
}

CliffordTableau CliffordTableau::phase(int n, int k) {
    CliffordTableau t = identity(n);
    t.x_[k] = PhasedPauli(PauliPoint::Y(n, k));
    return t;
}

CliffordTableau CliffordTableau::cnot(int n, int control, int target) {
    if (control == target) throw std::invalid_argument("cnot: control equals target");
    CliffordTableau t = identity(n);
    t.x_[control] = PhasedPauli(PauliPoint::X(n, control) + PauliPoint::X(n, target));
    t.z_[target] = PhasedPauli(PauliPoint::Z(n, control) + PauliPoint::Z(n, target));
    return t;
}

CliffordTableau CliffordTableau::pauli(const PauliPoint &p) {
    int n = p.n;
    CliffordTableau t = identity(n);
    for (int k = 0; k < n; k++) {
        if (symplectic_form(p, PauliPoint::X(n, k))) t.x_[k].phase = 2;
        if (symplectic_form(p, PauliPoint::Z(n, k))) t.z_[k].phase = 2;
    }
    return t;
}

std::vector<CliffordTableau> CliffordTableau::generators(int n) {
    std::vector<CliffordTableau> g;
    for (int k = 0; k < n; k++) {
        g.push_back(hadamard(n, k));
        g.push_back(phase(n, k));
    }
    for (int c = 0; c < n; c++) {
        for (int t = 0; t < n; t++) {
            if (c != t) g.push_back(cnot(n, c, t));
        }
    }
    return g;
}

CliffordTableau CliffordTableau::random(int n, std::mt19937_64 &rng, int depth) {
    if (depth <= 0) depth = 8 * n * n + 8;
    auto gens = generators(n);
    std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
    CliffordTableau t = identity(n);
    for (int i = 0; i < depth; i++) t = compose(gens[pick(rng)], t);
    std::uniform_int_distribution<uint32_t> bits(0, (1u << n) - 1);
    return compose(pauli(PauliPoint(n, bits(rng), bits(rng))), t);
}

PhasedPauli CliffordTableau::apply_point(const PauliPoint &v) const {
    if (v.n != n()) throw std::invalid_argument("apply_point: dimension mismatch");
    PhasedPauli acc(PauliPoint::zero(v.n), 0);
    for (int k = 0; k < v.n; k++) {
        if ((v.z >> k) & 1) acc = pauli_mul(acc, z_[k]);
    }
    for (int k = 0; k < v.n; k++) {
        if ((v.x >> k) & 1) acc = pauli_mul(acc, x_[k]);
    }
    acc.phase = ((acc.phase - v.y_weight()) % 4 + 4) % 4;
    if (!acc.is_hermitian()) throw std::logic_error("apply_point produced a non-Hermitian image; invalid tableau");
    return acc;
}

PhasedPauli CliffordTableau::apply(const PhasedPauli &p) const {
    PhasedPauli r = apply_point(p.point);
    r.phase = (r.phase + p.phase) % 4;
    return r;
}

void CliffordTableau::validate() const {
    int m = n();
    for (int i = 0; i < m; i++) {
        if (!x_[i].is_hermitian() || !z_[i].is_hermitian()) throw std::invalid_argument("tableau image not Hermitian");
        if (x_[i].point.n != m || z_[i].point.n != m) throw std::invalid_argument("tableau image has wrong size");
    }
    for (int i = 0; i < m; i++) {
        for (int j = 0; j < m; j++) {
            int want = i == j ? 1 : 0;
            if (symplectic_form(x_[i].point, z_[j].point) != want) throw std::invalid_argument("tableau not symplectic");
            if (i < j && symplectic_form(x_[i].point, x_[j].point)) throw std::invalid_argument("tableau not symplectic");
            if (i < j && symplectic_form(z_[i].point, z_[j].point)) throw std::invalid_argument("tableau not symplectic");
        }
    }
}

std::vector<uint64_t> CliffordTableau::key() const {
    std::vector<uint64_t> k;
    for (size_t i = 0; i < x_.size(); i++) {
        k.push_back((x_[i].point.word() << 2) | uint64_t(x_[i].phase));
        k.push_back((z_[i].point.word() << 2) | uint64_t(z_[i].phase));
    }
    return k;
}

CliffordTableau compose(const CliffordTableau &c, const CliffordTableau &d) {
    if (c.n() != d.n()) throw std::invalid_argument("compose: dimension mismatch");
    std::vector<PhasedPauli> xs, zs;
    for (int k = 0; k < d.n(); k++) {
        xs.push_back(c.apply(d.x_images()[k]));
        zs.push_back(c.apply(d.z_images()[k]));
    }
    return CliffordTableau(xs, zs);
}

CliffordTableau invert(const CliffordTableau &c) {
    int n = c.n();
    // For symplectic S, the preimage w of v has w_z[k] = [v, S x_k] and w_x[k] = [v, S z_k].
    auto preimage = [&](const PauliPoint &v) {
        uint32_t wz = 0, wx = 0;
        for (int k = 0; k < n; k++) {
            if (symplectic_form(v, c.x_images()[k].point)) wz |= 1u << k;
            if (symplectic_form(v, c.z_images()[k].point)) wx |= 1u << k;
        }
        return PauliPoint(n, wz, wx);
    };
    std::vector<PhasedPauli> xs, zs;
    for (int k = 0; k < n; k++) {
        for (int pass = 0; pass < 2; pass++) {
            PauliPoint v = pass == 0 ? PauliPoint::X(n, k) : PauliPoint::Z(n, k);
            PauliPoint w = preimage(v);
            PhasedPauli img = c.apply_point(w);
            if (img.point != v) throw std::logic_error("invert: tableau is not symplectic");
            (pass == 0 ? xs : zs).emplace_back(w, img.phase);
        }
    }
    return CliffordTableau(xs, zs);
}

QOperator conjugate(const CliffordTableau &c, const QOperator &a) {
    if (c.n() != a.n()) throw std::invalid_argument("conjugate: dimension mismatch");
    QOperator r(a.n());
    for (const auto &[v, x] : a.coeffs()) {
        PhasedPauli img = c.apply_point(v);
        r.set(img.point, img.phase ? -x : x);
    }
    return r;
}

std::vector<CliffordTableau> enumerate_action(int n) {
    if (n > 2) throw std::invalid_argument("enumerate_action: n above bound 2");
    auto gens = CliffordTableau::generators(n);
    std::set<std::vector<uint64_t>> seen;
    std::vector<CliffordTableau> out;
    std::deque<CliffordTableau> queue;
    auto id = CliffordTableau::identity(n);
    seen.insert(id.key());
    queue.push_back(id);
    while (!queue.empty()) {
        CliffordTableau t = queue.front();
        queue.pop_front();
        out.push_back(t);
        for (const auto &g : gens) {
            CliffordTableau u = compose(g, t);
            if (seen.insert(u.key()).second) queue.push_back(u);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

void adapted_symplectic_basis(const Subspace &j, std::vector<PauliPoint> &p, std::vector<PauliPoint> &q) {
    if (!j.is_isotropic()) throw std::invalid_argument("adapted_symplectic_basis: subspace not isotropic");
    int n = j.n();
    std::vector<PauliPoint> pool = j.basis();
    size_t in_j = pool.size();
    Subspace cur = j;
    for (int k = 0; k < n; k++) {
        for (const auto &e : {PauliPoint::X(n, k), PauliPoint::Z(n, k)}) {
            if (!cur.contains(e)) {
                cur = cur.with(e);
                pool.push_back(e);
            }
        }
    }
    p.clear();
    q.clear();
    while (!pool.empty()) {
        // Vectors of J stay at the front of the pool, so they are consumed first as p-vectors.
        PauliPoint a = pool.front();
        size_t qi = 0;
        for (size_t i = 1; i < pool.size(); i++) {
            if (symplectic_form(a, pool[i])) {
                qi = i;
                break;
            }
        }
        if (qi == 0) throw std::logic_error("adapted_symplectic_basis: no symplectic partner");
        PauliPoint b = pool[qi];
        if (qi < in_j) throw std::logic_error("adapted_symplectic_basis: J is not isotropic");
        pool.erase(pool.begin() + qi);
        pool.erase(pool.begin());
        if (in_j > 0) in_j--;
        for (auto &x : pool) {
            PauliPoint y = x;
            if (symplectic_form(x, b)) y += a;
            if (symplectic_form(x, a)) y += b;
            x = y;
        }
        p.push_back(a);
        q.push_back(b);
    }
}

namespace {

// Tableau sending X_k to (-1)^{r(p_k)} T_{p_k} for the first dim J slots and Z_k to T_{q_k}.
CliffordTableau tableau_for(const Subspace &j, const ValueAssignment &r) {
    std::vector<PauliPoint> p, q;
    adapted_symplectic_basis(j, p, q);
    int n = j.n();
    std::vector<PhasedPauli> xs, zs;
    for (int k = 0; k < n; k++) {
        int sign = 0;
        if (k < j.dim()) {
            auto it = r.find(p[k]);
            if (it == r.end()) throw std::invalid_argument("assignment does not cover the subspace");
            sign = it->second;
        }
        xs.emplace_back(p[k], 2 * sign);
        zs.emplace_back(q[k], 0);
    }
    return CliffordTableau(xs, zs);
}

}  // namespace

CliffordTableau clifford_for_isotropic_pair(const Subspace &j0, const ValueAssignment &r0, const Subspace &j,
                                            const ValueAssignment &r) {
    if (j0.n() != j.n() || j0.dim() != j.dim()) {
        throw std::invalid_argument("clifford_for_isotropic_pair: dimension mismatch");
    }
    CliffordTableau b = tableau_for(j, r);
    CliffordTableau b0 = tableau_for(j0, r0);
    CliffordTableau c = compose(b, invert(b0));
    if (conjugate(c, stabilizer_projector(j0, r0)) != stabilizer_projector(j, r)) {
        throw std::logic_error("clifford_for_isotropic_pair: postcondition failed");
    }
    return c;
}

std::vector<QOperator> clifford_orbit(const QOperator &start, const std::vector<CliffordTableau> &gens) {
    std::set<QOperator> seen{start};
    std::deque<QOperator> queue{start};
    while (!queue.empty()) {
        QOperator a = queue.front();
        queue.pop_front();
        for (const auto &g : gens) {
            QOperator b = conjugate(g, a);
            if (seen.insert(b).second) queue.push_back(b);
        }
    }
    return std::vector<QOperator>(seen.begin(), seen.end());
}

}  // namespace lambda_forge
