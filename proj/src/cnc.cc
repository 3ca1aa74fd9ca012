// Copyright 2026 The lambda-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include "lambda_forge/cnc.h"

#include <map>
#include <set>
#include <stdexcept>

namespace lambda_forge {

bool is_closed(const PointSet &omega) {
    for (auto i = omega.begin(); i != omega.end(); ++i) {
        for (auto j = std::next(i); j != omega.end(); ++j) {
            if (commute(*i, *j) && !omega.count(*i + *j)) return false;
        }
    }
    return true;
}

std::vector<ValueAssignment> consistent_assignments_on(const PointSet &omega, size_t limit) {
    if (omega.empty()) return {};
    int n = omega.begin()->n;
    std::vector<PauliPoint> pts;
    std::map<PauliPoint, int> index;
    for (const auto &p : omega) {
        if (p.is_zero()) continue;
        index[p] = int(pts.size());
        pts.push_back(p);
    }
    Gf2System sys(int(pts.size()));
    for (size_t i = 0; i < pts.size(); i++) {
        for (size_t j = i + 1; j < pts.size(); j++) {
            if (!commute(pts[i], pts[j])) continue;
            auto it = index.find(pts[i] + pts[j]);
            if (it == index.end()) continue;
            sys.add_equation({int(i), int(j), it->second}, beta(pts[i], pts[j]));
        }
    }
    std::vector<uint8_t> part;
    std::vector<std::vector<uint8_t>> ns;
    if (!sys.solve(part, ns)) return {};
    std::vector<ValueAssignment> out;
    if (ns.size() >= 63) throw std::length_error("consistent_assignments_on: solution space too large");
    uint64_t total = uint64_t(1) << ns.size();
    for (uint64_t c = 0; c < total && out.size() < limit; c++) {
        std::vector<uint8_t> sol = part;
        for (size_t k = 0; k < ns.size(); k++) {
            if ((c >> k) & 1) {
                for (size_t i = 0; i < sol.size(); i++) sol[i] ^= ns[k][i];
            }
        }
        ValueAssignment g{{PauliPoint::zero(n), 0}};
        for (size_t i = 0; i < pts.size(); i++) g[pts[i]] = sol[i];
        out.push_back(std::move(g));
    }
    return out;
}

bool is_noncontextual(const PointSet &omega) { return !consistent_assignments_on(omega, 1).empty(); }

bool is_cnc(const PointSet &omega) {
    if (omega.empty() || !omega.begin()->is_zero()) return false;
    return is_closed(omega) && is_noncontextual(omega);
}

void CncSet::validate() const {
    if (!omega.count(PauliPoint::zero(n))) throw std::invalid_argument("cnc set must contain 0");
    for (const auto &p : omega) {
        if (p.n != n) throw std::invalid_argument("cnc set point of wrong size");
        if (!gamma.count(p)) throw std::invalid_argument("cnc assignment misses " + p.label());
    }
    if (gamma.size() != omega.size()) throw std::invalid_argument("cnc assignment defined outside omega");
    if (gamma.at(PauliPoint::zero(n)) != 0) throw std::invalid_argument("cnc assignment must vanish at 0");
    if (!is_closed(omega)) throw std::invalid_argument("cnc set is not closed");
    if (!is_consistent(gamma)) throw std::invalid_argument("cnc assignment is inconsistent");
}

QOperator build_cnc_operator(const CncSet &c) {
    c.validate();
    QOperator a(c.n);
    for (const auto &[v, g] : c.gamma) a.set(v, FieldElem(g ? -1 : 1));
    return a;
}

std::optional<CncSet> as_cnc(const QOperator &a) {
    CncSet c;
    c.n = a.n();
    for (const auto &[v, x] : a.coeffs()) {
        if (x == FieldElem(1)) {
            c.gamma[v] = 0;
        } else if (x == FieldElem(-1)) {
            c.gamma[v] = 1;
        } else {
            return std::nullopt;
        }
        c.omega.insert(v);
    }
    if (!c.omega.count(PauliPoint::zero(c.n)) || c.gamma[PauliPoint::zero(c.n)] != 0) return std::nullopt;
    if (!is_closed(c.omega) || !is_consistent(c.gamma)) return std::nullopt;
    return c;
}

bool is_maximal_cnc(const PointSet &omega, int n) {
    if (n > 2) throw std::invalid_argument("is_maximal_cnc: n above bound 2");
    if (!is_cnc(omega)) return false;
    // A strict cnc superset exists iff some one-point-extended closure is still noncontextual.
    for (const auto &p : all_points(n)) {
        if (omega.count(p)) continue;
        PointSet ext = omega;
        ext.insert(p);
        if (is_noncontextual(closure_under_inference(ext, n))) return false;
    }
    return true;
}

std::vector<PointSet> enumerate_cnc_sets(int n) {
    if (n > 2) throw std::invalid_argument("enumerate_cnc_sets: n above bound 2");
    std::set<PointSet> seen;
    std::vector<PointSet> frontier{PointSet{PauliPoint::zero(n)}};
    seen.insert(frontier[0]);
    auto pts = nonzero_points(n);
    // Every cnc set is reached from {0} by one-point extensions followed by closure, since each
    // intermediate closure stays inside the target set.
    while (!frontier.empty()) {
        std::vector<PointSet> next;
        for (const auto &s : frontier) {
            for (const auto &p : pts) {
                if (s.count(p)) continue;
                PointSet ext = s;
                ext.insert(p);
                ext = closure_under_inference(ext, n);
                if (seen.count(ext) || !is_noncontextual(ext)) continue;
                seen.insert(ext);
                next.push_back(ext);
            }
        }
        frontier = std::move(next);
    }
    return std::vector<PointSet>(seen.begin(), seen.end());
}

std::vector<PointSet> enumerate_maximal_cnc_sets(int n) {
    std::vector<PointSet> out;
    for (const auto &s : enumerate_cnc_sets(n)) {
        if (is_maximal_cnc(s, n)) out.push_back(s);
    }
    return out;
}

std::vector<CncSet> enumerate_cnc_vertices(int n) {
    std::vector<CncSet> out;
    for (const auto &omega : enumerate_maximal_cnc_sets(n)) {
        for (auto &g : consistent_assignments_on(omega)) out.push_back(CncSet{n, omega, std::move(g)});
    }
    return out;
}

std::vector<WeightedCnc> cnc_update(const CncSet &c, const PauliPoint &a, int s) {
    if (a.is_zero()) throw std::invalid_argument("cnc_update: measured point must be nonzero");
    if (a.n != c.n) throw std::invalid_argument("cnc_update: dimension mismatch");
    s &= 1;
    CncSet out;
    out.n = c.n;
    if (c.omega.count(a)) {
        // Deterministic outcome gamma(a); the surviving part is A restricted to Omega cap a-perp.
        if (c.gamma.at(a) != s) return {};
        for (const auto &v : c.omega) {
            if (commute(v, a)) {
                out.omega.insert(v);
                out.gamma[v] = c.gamma.at(v);
            }
        }
        out.validate();
        return {WeightedCnc{FieldElem(1), out}};
    }
    // a outside Omega: Omega x a = (Omega cap a-perp) u ((Omega cap a-perp) + a).
    for (const auto &v : c.omega) {
        if (!commute(v, a)) continue;
        out.omega.insert(v);
        out.gamma[v] = c.gamma.at(v);
        PauliPoint u = v + a;
        out.omega.insert(u);
        out.gamma[u] = (c.gamma.at(v) + s + beta(v, a)) & 1;
    }
    out.validate();
    return {WeightedCnc{FieldElem::frac(1, 2), out}};
}

}  // namespace lambda_forge
