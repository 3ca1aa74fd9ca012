// Copyright 2026 The lambda-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include "lambda_forge/stabilizer.h"

#include <stdexcept>

#include "lambda_forge/pauli.h"

namespace lambda_forge {

bool is_consistent(const ValueAssignment &s) {
    for (const auto &[v, sv] : s) {
        if (v.is_zero() && sv != 0) return false;
        for (const auto &[w, sw] : s) {
            if (!(v < w) || !commute(v, w)) continue;
            auto it = s.find(v + w);
            if (it == s.end()) continue;
            if (it->second != ((sv + sw + beta(v, w)) & 1)) return false;
        }
    }
    return true;
}

ValueAssignment assignment_from_generators(const Subspace &j, const std::vector<int> &generator_values) {
    if (int(generator_values.size()) != j.dim()) {
        throw std::invalid_argument("assignment_from_generators: wrong number of generator values");
    }
    if (!j.is_isotropic()) throw std::invalid_argument("assignment_from_generators: subspace not isotropic");
    ValueAssignment s;
    const auto &b = j.basis();
    for (uint64_t c = 0; c < j.size(); c++) {
        PauliPoint v = PauliPoint::zero(j.n());
        int val = 0;
        for (size_t i = 0; i < b.size(); i++) {
            if ((c >> i) & 1) {
                val += generator_values[i] + beta(v, b[i]);
                v += b[i];
            }
        }
        s[v] = val & 1;
    }
    return s;
}

ValueAssignment restrict_assignment(const ValueAssignment &s, const PointSet &points) {
    ValueAssignment r;
    for (const auto &p : points) {
        auto it = s.find(p);
        if (it != s.end()) r[p] = it->second;
    }
    return r;
}

std::vector<ValueAssignment> enumerate_consistent_assignments(const Subspace &j) {
    std::vector<ValueAssignment> out;
    int d = j.dim();
    for (uint32_t bits = 0; bits < (1u << d); bits++) {
        std::vector<int> g(d);
        for (int i = 0; i < d; i++) g[i] = (bits >> i) & 1;
        out.push_back(assignment_from_generators(j, g));
    }
    return out;
}

std::vector<std::string> StabilizerState::generator_labels() const {
    std::vector<std::string> out;
    for (const auto &b : space.basis()) {
        out.push_back((values.at(b) ? "-" : "+") + b.label());
    }
    return out;
}

std::string StabilizerState::label() const {
    std::string out;
    for (const auto &g : generator_labels()) {
        if (!out.empty()) out += ",";
        out += g;
    }
    return "{" + out + "}";
}

StabilizerState StabilizerState::from_generators(const std::vector<std::string> &signed_labels) {
    if (signed_labels.empty()) throw std::invalid_argument("stabilizer state needs at least one generator");
    std::vector<PhasedPauli> gens;
    for (const auto &l : signed_labels) {
        PhasedPauli p = PhasedPauli::from_string(l);
        if (!p.is_hermitian()) throw std::invalid_argument("stabilizer generator must be Hermitian: " + l);
        gens.push_back(p);
    }
    int n = gens[0].point.n;
    std::vector<PauliPoint> pts;
    for (const auto &g : gens) {
        if (g.point.n != n) throw std::invalid_argument("stabilizer generators of different lengths");
        pts.push_back(g.point);
    }
    Subspace j = Subspace::span(n, pts);
    if (!j.is_isotropic()) throw std::invalid_argument("stabilizer generators do not commute");
    // Close the signed group generated by the inputs and read off values on the echelon basis.
    ValueAssignment s{{PauliPoint::zero(n), 0}};
    std::vector<std::pair<PauliPoint, int>> todo;
    for (const auto &g : gens) todo.emplace_back(g.point, g.sign_bit());
    for (const auto &[p, b] : todo) {
        if (p.is_zero()) {
            if (b) throw std::invalid_argument("stabilizer generators contain -I");
            continue;
        }
        ValueAssignment next = s;
        for (const auto &[v, sv] : s) {
            PauliPoint u = v + p;
            int val = (sv + b + beta(v, p)) & 1;
            auto it = next.find(u);
            if (it != next.end() && it->second != val) {
                throw std::invalid_argument("stabilizer generators are inconsistent (group contains -I)");
            }
            next[u] = val;
        }
        s = std::move(next);
    }
    return StabilizerState{j, s};
}

QOperator stabilizer_projector(const Subspace &j, const ValueAssignment &s) {
    if (!j.is_isotropic()) throw std::invalid_argument("stabilizer_projector: subspace not isotropic");
    int n = j.n();
    QOperator p(n);
    ValueAssignment dom;
    for (const auto &v : j.elements()) {
        auto it = s.find(v);
        if (it == s.end()) throw std::invalid_argument("stabilizer_projector: assignment misses " + v.label());
        dom[v] = it->second;
    }
    if (!is_consistent(dom)) throw std::invalid_argument("stabilizer_projector: inconsistent assignment");
    // alpha_v = (2^n / |J|) (-1)^{s(v)}.
    FieldElem mag = FieldElem(1).scaled_pow2(n - j.dim());
    for (const auto &[v, sv] : dom) p.set(v, sv ? -mag : mag);
    return p;
}

std::vector<StabilizerState> enumerate_stabilizer_states(int n, int bound) {
    if (n > bound) throw std::invalid_argument("enumerate_stabilizer_states: n above bound");
    std::vector<StabilizerState> out;
    for (const auto &i : enumerate_maximal_isotropics(n, bound)) {
        for (auto &s : enumerate_consistent_assignments(i)) out.push_back(StabilizerState{i, std::move(s)});
    }
    return out;
}

ValueAssignment convolve_assignment(const Subspace &j, const ValueAssignment &r, const Subspace &ip,
                                    const ValueAssignment &sp) {
    if (j.intersect(ip).dim() != 0) {
        throw std::invalid_argument("convolve_assignment: subspaces intersect nontrivially");
    }
    ValueAssignment out;
    for (const auto &u : j.elements()) {
        for (const auto &v : ip.elements()) out[u + v] = (r.at(u) + sp.at(v)) & 1;
    }
    return out;
}

}  // namespace lambda_forge
