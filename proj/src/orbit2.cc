// Copyright 2026 The lambda-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include "lambda_forge/orbit2.h"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace lambda_forge {

namespace {

constexpr int kN = 2;

const std::vector<Subspace> &max_isotropics2() {
    static const std::vector<Subspace> mi = enumerate_maximal_isotropics(kN);
    return mi;
}

bool omega_rule_holds(const Subspace &i, const ValueAssignment &gamma, const PointSet &omega,
                      const ValueAssignment &gp) {
    for (const auto &v : omega) {
        for (const auto &w : omega) {
            if (!commute(v, w)) continue;
            PauliPoint u = v + w;
            if (!i.contains(u)) continue;
            if (((gp.at(v) + gp.at(w) + beta(v, w)) & 1) != gamma.at(u)) return false;
        }
    }
    return true;
}

// Closure of P with values propagated by beta-consistency; throws on a conflict.
ValueAssignment extend_assignment(const PointSet &p, const ValueAssignment &g) {
    ValueAssignment out;
    out[PauliPoint::zero(kN)] = 0;
    for (const auto &v : p) out[v] = g.at(v);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::pair<PauliPoint, int>> cur(out.begin(), out.end());
        for (const auto &[v, gv] : cur) {
            for (const auto &[w, gw] : cur) {
                if (!commute(v, w)) continue;
                PauliPoint u = v + w;
                int val = (gv + gw + beta(v, w)) & 1;
                auto [it, inserted] = out.emplace(u, val);
                if (inserted) {
                    changed = true;
                } else if (it->second != val) {
                    throw std::logic_error("orbit_update: closure assignment conflict at " + u.label());
                }
            }
        }
    }
    return out;
}

// Cnc operator on <a>-perp with value s at a and the given values on three points b (plus b + a).
CncSet lift(const PauliPoint &a, int sa, const std::vector<std::pair<PauliPoint, int>> &vals) {
    CncSet c;
    c.n = kN;
    c.gamma[PauliPoint::zero(kN)] = 0;
    c.gamma[a] = sa;
    for (const auto &[b, x] : vals) {
        c.gamma[b] = x & 1;
        c.gamma[b + a] = (x + sa + beta(b, a)) & 1;
    }
    if (c.gamma.size() != 8) throw std::logic_error("orbit_update: lifted assignment does not cover <a>-perp");
    for (const auto &[v, g] : c.gamma) c.omega.insert(v);
    c.validate();
    return c;
}

PauliPoint first_excluding(const PointSet &s, const std::vector<PauliPoint> &excluded) {
    for (const auto &p : s) {
        if (std::find(excluded.begin(), excluded.end(), p) == excluded.end()) return p;
    }
    throw std::logic_error("orbit_update: no admissible point");
}

}  // namespace

bool satisfies_collection_rules(const Subspace &i, const Collection &c) {
    if (std::find(c.begin(), c.end(), i) == c.end()) return false;
    for (const auto &j : c) {
        if (!j.is_maximal_isotropic() || j.n() != kN) return false;
        for (const auto &v : j.elements()) {
            if (v.is_zero()) continue;
            int others = 0;
            for (const auto &k : c) {
                if (!(k == j) && k.contains(v)) others++;
            }
            if (others != 1) return false;
        }
    }
    return true;
}

std::vector<Collection> enumerate_collections(const Subspace &i) {
    const auto &mi = max_isotropics2();
    std::vector<Subspace> rest;
    for (const auto &j : mi) {
        if (!(j == i)) rest.push_back(j);
    }
    std::vector<Collection> out;
    for (uint32_t mask = 0; mask < (1u << rest.size()); mask++) {
        Collection c{i};
        for (size_t k = 0; k < rest.size(); k++) {
            if ((mask >> k) & 1) c.push_back(rest[k]);
        }
        std::sort(c.begin(), c.end());
        if (satisfies_collection_rules(i, c)) out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

PointSet omega_of_collection(const Collection &c) {
    PointSet covered;
    for (const auto &j : c) {
        for (const auto &v : j.elements()) covered.insert(v);
    }
    PointSet omega;
    for (const auto &p : all_points(kN)) {
        if (p.is_zero() || !covered.count(p)) omega.insert(p);
    }
    return omega;
}

std::vector<Collection> orbit_collections(const Subspace &i) {
    std::vector<Collection> out;
    for (auto &c : enumerate_collections(i)) {
        if (omega_of_collection(c).size() == 7) out.push_back(std::move(c));
    }
    return out;
}

std::vector<std::pair<ValueAssignment, ValueAssignment>> derive_assignments(const Subspace &i,
                                                                            const ValueAssignment &gamma,
                                                                            const PointSet &omega) {
    std::vector<PauliPoint> nz;
    for (const auto &p : omega) {
        if (!p.is_zero()) nz.push_back(p);
    }
    std::vector<std::pair<ValueAssignment, ValueAssignment>> out;
    for (uint32_t bits = 0; bits < (1u << nz.size()); bits++) {
        ValueAssignment gp{{PauliPoint::zero(kN), 0}}, gpp{{PauliPoint::zero(kN), 0}};
        for (size_t k = 0; k < nz.size(); k++) {
            gp[nz[k]] = (bits >> k) & 1;
            gpp[nz[k]] = 1 - gp[nz[k]];
        }
        if (omega_rule_holds(i, gamma, omega, gp)) out.emplace_back(std::move(gp), std::move(gpp));
    }
    return out;
}

void OrbitVertexParams::validate() const {
    if (I.n() != kN || !I.is_maximal_isotropic()) throw std::invalid_argument("orbit params: I must be maximal isotropic in E_2");
    for (const auto &v : I.elements()) {
        if (!gamma.count(v)) throw std::invalid_argument("orbit params: gamma misses " + v.label());
    }
    if (!is_consistent(gamma)) throw std::invalid_argument("orbit params: gamma inconsistent on I");
    if (!satisfies_collection_rules(I, C)) throw std::invalid_argument("orbit params: collection breaks the covering rules");
    if (omega != omega_of_collection(C) || omega.size() != 7) {
        throw std::invalid_argument("orbit params: omega must be the six uncovered points plus 0");
    }
    for (const auto &v : omega) {
        if (!gamma_p.count(v) || !gamma_pp.count(v)) throw std::invalid_argument("orbit params: gamma' misses " + v.label());
        int expect = v.is_zero() ? gamma_p.at(v) : 1 - gamma_p.at(v);
        if (gamma_pp.at(v) != expect) throw std::invalid_argument("orbit params: gamma'' must be 1 + gamma' off 0");
    }
    if (gamma_p.at(PauliPoint::zero(kN)) != 0) throw std::invalid_argument("orbit params: gamma'(0) must be 0");
    if (!omega_rule_holds(I, gamma, omega, gamma_p)) throw std::invalid_argument("orbit params: gamma' violates the rule tied to gamma");
}

OrbitVertexParams make_orbit_params(const Subspace &i, const ValueAssignment &gamma, const Collection &c,
                                    const ValueAssignment &gamma_p) {
    OrbitVertexParams p;
    p.I = i;
    p.gamma = restrict_assignment(gamma, i.element_set());
    p.C = c;
    std::sort(p.C.begin(), p.C.end());
    p.omega = omega_of_collection(p.C);
    for (const auto &v : p.omega) {
        auto it = gamma_p.find(v);
        if (it == gamma_p.end()) throw std::invalid_argument("orbit params: gamma' misses " + v.label());
        p.gamma_p[v] = it->second & 1;
        p.gamma_pp[v] = v.is_zero() ? 0 : 1 - (it->second & 1);
    }
    p.validate();
    return p;
}

QOperator build_orbit_vertex(const OrbitVertexParams &p) {
    QOperator a(kN);
    for (const auto &v : p.I.elements()) a.add_to(v, FieldElem(p.gamma.at(v) ? -1 : 1));
    for (const auto &v : p.omega) {
        if (v.is_zero()) continue;
        a.add_to(v, FieldElem::frac(p.gamma_p.at(v) ? -1 : 1, 2));
    }
    return a;
}

const std::vector<OrbitVertexParams> &enumerate_family_params() {
    static std::vector<OrbitVertexParams> params;
    static std::once_flag once;
    std::call_once(once, [] {
        for (const auto &i : max_isotropics2()) {
            for (const auto &g : enumerate_consistent_assignments(i)) {
                for (const auto &c : orbit_collections(i)) {
                    PointSet omega = omega_of_collection(c);
                    for (const auto &[gp, gpp] : derive_assignments(i, g, omega)) {
                        params.push_back(make_orbit_params(i, g, c, gp));
                    }
                }
            }
        }
    });
    return params;
}

std::vector<QOperator> enumerate_family() {
    std::set<QOperator> ops;
    for (const auto &p : enumerate_family_params()) ops.insert(build_orbit_vertex(p));
    return std::vector<QOperator>(ops.begin(), ops.end());
}

std::optional<OrbitVertexParams> find_orbit_params(const QOperator &a) {
    if (a.n() != kN) return std::nullopt;
    std::vector<PauliPoint> ipts;
    PointSet omega{PauliPoint::zero(kN)};
    ValueAssignment gamma, gp{{PauliPoint::zero(kN), 0}};
    const FieldElem one(1), half = FieldElem::frac(1, 2);
    for (const auto &[v, c] : a.coeffs()) {
        if (c == one || c == -one) {
            ipts.push_back(v);
            gamma[v] = c == one ? 0 : 1;
        } else if (c == half || c == -half) {
            omega.insert(v);
            gp[v] = c == half ? 0 : 1;
        } else {
            return std::nullopt;
        }
    }
    if (ipts.size() != 4 || omega.size() != 7) return std::nullopt;
    Subspace i = Subspace::span(kN, ipts);
    if (!i.is_maximal_isotropic() || gamma.at(PauliPoint::zero(kN)) != 0 || !is_consistent(gamma)) return std::nullopt;
    for (const auto &c : orbit_collections(i)) {
        if (omega_of_collection(c) != omega) continue;
        if (!omega_rule_holds(i, gamma, omega, gp)) return std::nullopt;
        OrbitVertexParams p = make_orbit_params(i, gamma, c, gp);
        if (build_orbit_vertex(p) == a) return p;
    }
    return std::nullopt;
}

QOperator alpha0_table() {
    static const char *labels[16] = {"II", "IX", "XI", "XX", "IZ", "IY", "XZ", "XY",
                                     "ZI", "ZX", "YI", "YX", "ZZ", "ZY", "YZ", "YY"};
    static const int num[16] = {1, -1, 1, 0, -1, -1, -1, 0, 1, -1, -1, 0, 0, 0, 0, 1};
    static const int den[16] = {1, 2, 2, 1, 2, 2, 1, 1, 2, 1, 2, 1, 1, 1, 1, 1};
    QOperator a(kN);
    for (int k = 0; k < 16; k++) a.set(PauliPoint::from_label(labels[k]), FieldElem::frac(num[k], den[k]));
    return a;
}

Collection alpha0_collection() {
    auto sp = [](const char *u, const char *v) {
        return Subspace::span(kN, {PauliPoint::from_label(u), PauliPoint::from_label(v)});
    };
    Collection c{sp("XZ", "ZX"), sp("XX", "ZZ"), sp("XY", "YZ"), sp("ZY", "YX"), sp("YX", "XY"), sp("ZY", "YZ")};
    std::sort(c.begin(), c.end());
    return c;
}

PointSet omega_of_alpha0() {
    PointSet omega;
    for (const char *l : {"II", "XI", "YI", "ZI", "IX", "IY", "IZ"}) omega.insert(PauliPoint::from_label(l));
    return omega;
}

OrbitVertexParams alpha0_params() {
    Subspace i = Subspace::span(kN, {PauliPoint::from_label("XZ"), PauliPoint::from_label("ZX")});
    ValueAssignment gamma{{PauliPoint::zero(kN), 0}};
    gamma[PauliPoint::from_label("XZ")] = 1;
    gamma[PauliPoint::from_label("ZX")] = 1;
    gamma[PauliPoint::from_label("YY")] = 0;
    ValueAssignment gp{{PauliPoint::zero(kN), 0}};
    for (const auto &[l, bit] : std::vector<std::pair<const char *, int>>{
             {"IX", 1}, {"XI", 0}, {"IZ", 1}, {"IY", 1}, {"ZI", 0}, {"YI", 1}}) {
        gp[PauliPoint::from_label(l)] = bit;
    }
    return make_orbit_params(i, gamma, alpha0_collection(), gp);
}

int orbit_update_case(const OrbitVertexParams &p, const PauliPoint &a) {
    if (p.I.contains(a)) return 1;
    if (p.omega.count(a)) return 2;
    return 3;
}

std::vector<WeightedCnc> orbit_update(const OrbitVertexParams &p, const PauliPoint &a, int s) {
    if (a.n != kN) throw std::invalid_argument("orbit_update: point must live in E_2");
    if (a.is_zero()) throw std::invalid_argument("orbit_update: measured point must be nonzero");
    s &= 1;
    const PauliPoint zero = PauliPoint::zero(kN);
    PointSet om_a;
    for (const auto &v : p.omega) {
        if (commute(v, a)) om_a.insert(v);
    }
    ValueAssignment gt = extend_assignment(om_a, p.gamma_p);
    PointSet st;
    for (const auto &[v, g] : gt) st.insert(v);
    auto one = [](int x) { return 1 - x; };

    if (p.I.contains(a)) {
        if (s != p.gamma.at(a)) return {};
        if (gt.at(a) != p.gamma.at(a)) throw std::logic_error("orbit_update: extension disagrees with gamma at a");
        PauliPoint vt = first_excluding(p.I.element_set(), {zero, a});
        PauliPoint wt = first_excluding(st, {zero, a});
        PauliPoint vw = vt + wt;
        int gv = p.gamma.at(vt), gw = gt.at(wt);
        return {WeightedCnc{FieldElem::frac(1, 2), lift(a, s, {{vt, gv}, {wt, gw}, {vw, 0}})},
                WeightedCnc{FieldElem::frac(1, 4), lift(a, s, {{vt, gv}, {wt, gw}, {vw, 1}})},
                WeightedCnc{FieldElem::frac(1, 4), lift(a, s, {{vt, gv}, {wt, one(gw)}, {vw, 1}})}};
    }

    PointSet ia;
    for (const auto &v : p.I.elements()) {
        if (!v.is_zero() && commute(v, a)) ia.insert(v);
    }
    PauliPoint vt = *ia.begin();

    if (p.omega.count(a)) {
        ValueAssignment gpp0;
        for (const auto &v : om_a) gpp0[v] = p.gamma_pp.at(v);
        ValueAssignment gtt = extend_assignment(om_a, gpp0);
        PointSet abar = perp_of_point(a).element_set();
        PauliPoint wt = first_excluding(abar, {zero, a, vt, vt + a});
        PauliPoint vw = vt + wt;
        if (s != gt.at(a)) {
            return {WeightedCnc{FieldElem::frac(1, 4),
                                lift(a, s, {{vt, gtt.at(vt)}, {wt, one(gtt.at(wt))}, {vw, one(gtt.at(vw))}})}};
        }
        CncSet al{kN, st, gt};
        al.validate();
        return {WeightedCnc{FieldElem::frac(1, 2), al},
                WeightedCnc{FieldElem::frac(1, 4),
                            lift(a, s, {{vt, gt.at(vt)}, {wt, one(gt.at(wt))}, {vw, one(gt.at(vw))}})}};
    }

    PauliPoint wt = first_excluding(st, {zero, a});
    PauliPoint vw = vt + wt;
    int gv = p.gamma.at(vt);
    if (s != gt.at(a)) {
        return {WeightedCnc{FieldElem::frac(1, 4), lift(a, s, {{vt, gv}, {wt, 0}, {vw, 0}})},
                WeightedCnc{FieldElem::frac(1, 4), lift(a, s, {{vt, gv}, {wt, 1}, {vw, 1}})}};
    }
    int gw = gt.at(wt);
    return {WeightedCnc{FieldElem::frac(1, 4), lift(a, s, {{vt, gv}, {wt, gw}, {vw, 0}})},
            WeightedCnc{FieldElem::frac(1, 4), lift(a, s, {{vt, gv}, {wt, gw}, {vw, 1}})}};
}

QOperator single_qubit_vertex(int ax, int ay, int az) {
    QOperator a(1);
    a.set(PauliPoint::zero(1), FieldElem(1));
    a.set(PauliPoint::from_label("X"), FieldElem((ax & 1) ? -1 : 1));
    a.set(PauliPoint::from_label("Y"), FieldElem((ay & 1) ? -1 : 1));
    a.set(PauliPoint::from_label("Z"), FieldElem((az & 1) ? -1 : 1));
    return a;
}

namespace {

struct Alpha1 {
    std::map<PauliPoint, int> val;
    QOperator op() const {
        return single_qubit_vertex(val.at(PauliPoint::from_label("X")), val.at(PauliPoint::from_label("Y")),
                                   val.at(PauliPoint::from_label("Z")));
    }
};

Alpha1 alpha_with(const PauliPoint &v, int av, const PauliPoint &w, int aw, int avw) {
    Alpha1 a;
    a.val[v] = av & 1;
    a.val[w] = aw & 1;
    a.val[v + w] = avw & 1;
    return a;
}

}  // namespace

Lemma3Report lemma3_identities() {
    Lemma3Report rep;
    auto pts = nonzero_points(1);
    const FieldElem half = FieldElem::frac(1, 2), quarter = FieldElem::frac(1, 4), third = FieldElem::frac(1, 3);
    auto check = [&](int part, const QOperator &lhs, const QOperator &rhs, const std::string &what) {
        rep.checked[part - 1]++;
        if (lhs != rhs) rep.failures.push_back("part " + std::to_string(part) + ": " + what);
    };
    for (const auto &v : pts) {
        for (const auto &w : pts) {
            if (v == w) continue;
            std::string vw = v.label() + "," + w.label();
            for (int sv = 0; sv < 2; sv++) {
                QOperator pv = pauli_projector(v, sv);
                for (int sw = 0; sw < 2; sw++) {
                    QOperator pw_diff = pauli_projector(w, sw) - pauli_projector(w, sw + 1);
                    for (int f = 0; f < 2; f++) {
                        std::string tag = vw + " sv=" + std::to_string(sv) + " sw=" + std::to_string(sw) +
                                          " free=" + std::to_string(f);
                        // (1): alpha0(w) = sw plays the free role there, alpha0(v+w) = f.
                        Alpha1 a0 = alpha_with(v, sv, w, sw, f), a1 = alpha_with(v, sv, w, sw + 1, f + 1);
                        check(1, pv, (a0.op() + a1.op()).scaled(half), tag);
                        // (2)
                        Alpha1 b0 = alpha_with(v, sv, w, sw, f), b1 = alpha_with(v, sv, w, sw, f + 1);
                        check(2, pv + pw_diff.scaled(half), (b0.op() + b1.op()).scaled(half), tag);
                        // (5)
                        Alpha1 c0 = alpha_with(v, sv, w, sw, f), c1 = alpha_with(v, sv, w, sw, f + 1),
                               c2 = alpha_with(v, sv, w, sw + 1, f + 1);
                        check(5, pv + pw_diff.scaled(quarter),
                              (c0.op().scaled(FieldElem(2)) + c1.op() + c2.op()).scaled(quarter), tag);
                    }
                }
            }
            for (int bits = 0; bits < 8; bits++) {
                int av = bits & 1, aw = (bits >> 1) & 1, avw = (bits >> 2) & 1;
                std::string tag = vw + " alpha=" + std::to_string(av) + std::to_string(aw) + std::to_string(avw);
                Alpha1 al = alpha_with(v, av, w, aw, avw), alp = alpha_with(v, av, w, aw + 1, avw + 1);
                QOperator pv = pauli_projector(v, av);
                // (3)
                check(3, (pv.scaled(FieldElem(2)) + al.op()).scaled(third),
                      (al.op().scaled(FieldElem(2)) + alp.op()).scaled(third), tag);
                // (4)
                check(4, pv.scaled(FieldElem(2)) - al.op(), alp.op(), tag);
            }
        }
    }
    return rep;
}

IsoPoset export_isotropic_poset() {
    IsoPoset g;
    for (const auto &p : nonzero_points(kN)) g.lines.push_back(Subspace::span(kN, {p}));
    std::sort(g.lines.begin(), g.lines.end());
    g.planes = max_isotropics2();
    Collection ref = alpha0_collection();
    for (size_t j = 0; j < g.planes.size(); j++) {
        g.highlighted.push_back(std::find(ref.begin(), ref.end(), g.planes[j]) != ref.end());
        for (size_t i = 0; i < g.lines.size(); i++) {
            if (g.lines[i].is_subspace_of(g.planes[j])) g.edges.emplace_back(i, j);
        }
    }
    return g;
}

}  // namespace lambda_forge
