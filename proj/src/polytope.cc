// Copyright 2026 The lambda-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include "lambda_forge/polytope.h"

#include <array>
#include <mutex>
#include <set>
#include <stdexcept>

namespace lambda_forge {

const std::vector<StabilizerState> &stabilizer_states(int n) {
    static std::array<std::vector<StabilizerState>, 5> cache;
    static std::array<std::once_flag, 5> flags;
    if (n < 1 || n > 4) throw std::invalid_argument("stabilizer_states: n must be in 1..4");
    std::call_once(flags[n], [n] { cache[n] = enumerate_stabilizer_states(n); });
    return cache[n];
}

FieldElem FacetCertificate::min_value() const {
    FieldElem m = facet_values.at(0);
    for (const auto &v : facet_values) {
        if (v < m) m = v;
    }
    return m;
}

std::vector<size_t> FacetCertificate::minimizers() const {
    FieldElem m = min_value();
    std::vector<size_t> out;
    for (size_t i = 0; i < facet_values.size(); i++) {
        if (facet_values[i] == m) out.push_back(i);
    }
    return out;
}

namespace {

// Tr(X Pi_{I,s}) = |I|^{-1} sum_{v in I} (-1)^{s(v)} alpha_v.
FieldElem facet_value(const QOperator &x, const StabilizerState &st) {
    FieldElem sum;
    for (const auto &[v, sv] : st.values) {
        auto it = x.coeffs().find(v);
        if (it == x.coeffs().end()) continue;
        if (sv) {
            sum -= it->second;
        } else {
            sum += it->second;
        }
    }
    return sum.scaled_pow2(-st.space.dim());
}

}  // namespace

FacetCertificate membership(const QOperator &x) {
    if (x.trace() != FieldElem(1)) {
        throw std::invalid_argument("membership: operator must have trace 1 (got " + x.trace().to_string() + ")");
    }
    FacetCertificate cert;
    cert.op = x;
    const auto &states = stabilizer_states(x.n());
    cert.facet_values.reserve(states.size());
    for (size_t i = 0; i < states.size(); i++) {
        FieldElem v = facet_value(x, states[i]);
        int sg = v.sign();
        if (sg == 0) cert.active_set.push_back(i);
        if (sg < 0 && (!cert.violation || v < cert.facet_values[*cert.violation])) cert.violation = i;
        cert.facet_values.push_back(std::move(v));
    }
    return cert;
}

int rational_rank(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) return 0;
    size_t cols = rows[0].size();
    int rank = 0;
    for (size_t c = 0; c < cols && size_t(rank) < rows.size(); c++) {
        size_t p = rank;
        while (p < rows.size() && sgn(rows[p][c]) == 0) p++;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        for (size_t i = rank + 1; i < rows.size(); i++) {
            if (sgn(rows[i][c]) == 0) continue;
            Rational f = rows[i][c] / rows[rank][c];
            for (size_t k = c; k < cols; k++) rows[i][k] -= f * rows[rank][k];
        }
        rank++;
    }
    return rank;
}

namespace {

std::vector<std::vector<Rational>> active_rows(const FacetCertificate &cert, const std::vector<PauliPoint> &pts) {
    std::map<PauliPoint, size_t> col;
    for (size_t i = 0; i < pts.size(); i++) col[pts[i]] = i;
    std::vector<std::vector<Rational>> rows;
    for (size_t idx : cert.active_set) {
        const auto &st = cert.state(idx);
        std::vector<Rational> row(pts.size(), Rational(0));
        for (const auto &[v, sv] : st.values) {
            if (v.is_zero()) continue;
            row[col.at(v)] = sv ? -1 : 1;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

VertexReport is_vertex(const QOperator &x) {
    FacetCertificate cert = membership(x);
    if (!cert.member()) throw std::domain_error("is_vertex: operator is not in the polytope");
    auto pts = nonzero_points(x.n());
    VertexReport rep;
    rep.needed = int(pts.size());
    rep.active = cert.active_set.size();
    rep.rank = rational_rank(active_rows(cert, pts));
    rep.vertex = rep.rank == rep.needed;
    return rep;
}

std::vector<QOperator> active_nullspace(const FacetCertificate &cert) {
    int n = cert.op.n();
    auto pts = nonzero_points(n);
    auto rows = active_rows(cert, pts);
    size_t cols = pts.size();
    // Reduced row echelon form, then one null vector per free column.
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows.size(); c++) {
        size_t p = r;
        while (p < rows.size() && sgn(rows[p][c]) == 0) p++;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        Rational inv = 1 / rows[r][c];
        for (size_t k = 0; k < cols; k++) rows[r][k] *= inv;
        for (size_t i = 0; i < rows.size(); i++) {
            if (i == r || sgn(rows[i][c]) == 0) continue;
            Rational f = rows[i][c];
            for (size_t k = 0; k < cols; k++) rows[i][k] -= f * rows[r][k];
        }
        pivots.push_back(c);
        r++;
    }
    std::vector<QOperator> out;
    std::set<size_t> piv(pivots.begin(), pivots.end());
    for (size_t f = 0; f < cols; f++) {
        if (piv.count(f)) continue;
        QOperator d(n);
        d.set(pts[f], FieldElem(1));
        for (size_t i = 0; i < pivots.size(); i++) d.set(pts[pivots[i]], FieldElem(Rational(-rows[i][f])));
        out.push_back(d);
    }
    return out;
}

std::vector<QOperator> enumerate_vertices_n1() {
    // Chart (alpha_x, alpha_y, alpha_z); each facet reads c + sum_v g_v alpha_v >= 0.
    const auto &states = stabilizer_states(1);
    auto pts = nonzero_points(1);
    struct Facet {
        std::array<Rational, 3> g;
        Rational c;
    };
    std::vector<Facet> facets;
    for (const auto &st : states) {
        Facet f{{Rational(0), Rational(0), Rational(0)}, Rational(1)};
        for (const auto &[v, sv] : st.values) {
            if (v.is_zero()) continue;
            for (int k = 0; k < 3; k++) {
                if (pts[k] == v) f.g[k] = sv ? -1 : 1;
            }
        }
        facets.push_back(f);
    }
    std::set<QOperator> found;
    size_t m = facets.size();
    for (size_t i = 0; i < m; i++) {
        for (size_t j = i + 1; j < m; j++) {
            for (size_t k = j + 1; k < m; k++) {
                // Solve g . alpha = -c for the three chosen facets (Cramer's rule).
                std::array<std::array<Rational, 3>, 3> a{facets[i].g, facets[j].g, facets[k].g};
                std::array<Rational, 3> b{-facets[i].c, -facets[j].c, -facets[k].c};
                auto det3 = [](const std::array<std::array<Rational, 3>, 3> &q) -> Rational {
                    return q[0][0] * (q[1][1] * q[2][2] - q[1][2] * q[2][1]) -
                           q[0][1] * (q[1][0] * q[2][2] - q[1][2] * q[2][0]) +
                           q[0][2] * (q[1][0] * q[2][1] - q[1][1] * q[2][0]);
                };
                Rational d = det3(a);
                if (sgn(d) == 0) continue;
                std::array<Rational, 3> sol;
                for (int c = 0; c < 3; c++) {
                    auto q = a;
                    for (int rr = 0; rr < 3; rr++) q[rr][c] = b[rr];
                    sol[c] = det3(q) / d;
                }
                bool feasible = true;
                for (const auto &f : facets) {
                    Rational val = f.c + f.g[0] * sol[0] + f.g[1] * sol[1] + f.g[2] * sol[2];
                    if (sgn(val) < 0) feasible = false;
                }
                if (!feasible) continue;
                QOperator v = QOperator::maximally_mixed(1);
                for (int c = 0; c < 3; c++) v.set(pts[c], FieldElem(sol[c]));
                found.insert(v);
            }
        }
    }
    return std::vector<QOperator>(found.begin(), found.end());
}

Decomposition decompose(const QOperator &rho, const std::vector<QOperator> &pool) {
    Decomposition out;
    if (pool.empty()) return out;
    int n = rho.n();
    PointSet rows_set = rho.support();
    for (const auto &p : pool) {
        if (p.n() != n) throw std::invalid_argument("decompose: pool operator of wrong size");
        auto s = p.support();
        rows_set.insert(s.begin(), s.end());
    }
    rows_set.insert(PauliPoint::zero(n));
    std::vector<PauliPoint> rows(rows_set.begin(), rows_set.end());
    size_t m = rows.size(), k = pool.size();
    size_t cols = k + m;  // structural columns, then one artificial per row
    // Tableau [A | I | b] with b >= 0.
    std::vector<std::vector<FieldElem>> t(m, std::vector<FieldElem>(cols + 1));
    for (size_t i = 0; i < m; i++) {
        FieldElem b = rho.coeff(rows[i]);
        int flip = b.sign() < 0 ? -1 : 1;
        for (size_t j = 0; j < k; j++) {
            FieldElem a = pool[j].coeff(rows[i]);
            t[i][j] = flip < 0 ? -a : a;
        }
        t[i][k + i] = FieldElem(1);
        t[i][cols] = flip < 0 ? -b : b;
    }
    std::vector<size_t> basis(m);
    for (size_t i = 0; i < m; i++) basis[i] = k + i;
    // Phase one: minimise the sum of artificials.  Reduced cost of column j is -sum_i t[i][j] over rows whose basic
    // variable is artificial; recomputed each iteration (sizes are small).
    auto cost = [&](size_t j) { return j >= k ? FieldElem(1) : FieldElem(0); };
    for (int iter = 0; iter < 100000; iter++) {
        size_t enter = cols;
        for (size_t j = 0; j < cols; j++) {
            FieldElem rc = cost(j);
            for (size_t i = 0; i < m; i++) {
                if (basis[i] >= k) rc -= t[i][j];
            }
            if (rc.sign() < 0) {
                enter = j;  // Bland: smallest index with negative reduced cost
                break;
            }
        }
        if (enter == cols) break;
        size_t leave = m;
        FieldElem best;
        for (size_t i = 0; i < m; i++) {
            if (t[i][enter].sign() <= 0) continue;
            FieldElem ratio = t[i][cols] / t[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) throw std::logic_error("decompose: phase one unbounded");
        FieldElem piv = t[leave][enter];
        for (auto &x : t[leave]) x /= piv;
        for (size_t i = 0; i < m; i++) {
            if (i == leave || t[i][enter].is_zero()) continue;
            FieldElem f = t[i][enter];
            for (size_t j = 0; j <= cols; j++) {
                if (!t[leave][j].is_zero()) t[i][j] -= f * t[leave][j];
            }
        }
        basis[leave] = enter;
    }
    FieldElem art;
    for (size_t i = 0; i < m; i++) {
        if (basis[i] >= k) art += t[i][cols];
    }
    if (!art.is_zero()) return out;
    out.feasible = true;
    out.weights.assign(k, FieldElem());
    for (size_t i = 0; i < m; i++) {
        if (basis[i] < k) out.weights[basis[i]] = t[i][cols];
    }
    QOperator check(n);
    for (size_t j = 0; j < k; j++) check = check + pool[j].scaled(out.weights[j]);
    if (check != rho) throw std::logic_error("decompose: solution does not re-substitute");
    return out;
}

}  // namespace lambda_forge
