// Copyright 2026 The lambda-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include "lambda_forge/gf2.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace lambda_forge {

PauliPoint::PauliPoint(int n, uint32_t z, uint32_t x) : n(n), z(z), x(x) {
    if (n < 0 || n > kMaxQubits) {
        throw std::invalid_argument("qubit count out of range: " + std::to_string(n));
    }
    uint32_t mask = n == 32 ? ~0u : ((1u << n) - 1);
    if ((z & ~mask) || (x & ~mask)) {
        throw std::invalid_argument("point has bits beyond its qubit count");
    }
}

PauliPoint PauliPoint::from_label(std::string_view label) {
    int n = int(label.size());
    if (n > kMaxQubits) {
        throw std::invalid_argument("Pauli label too long");
    }
    uint32_t z = 0, x = 0;
    for (int k = 0; k < n; k++) {
        switch (label[k]) {
            case 'I':
            case '_':
                break;
            case 'X':
                x |= 1u << k;
                break;
            case 'Z':
                z |= 1u << k;
                break;
            case 'Y':
                x |= 1u << k;
                z |= 1u << k;
                break;
            default:
                throw std::invalid_argument("bad Pauli label character '" + std::string(1, label[k]) + "' in \"" +
                                            std::string(label) + "\"");
        }
    }
    return PauliPoint(n, z, x);
}

int PauliPoint::y_weight() const { return std::popcount(z & x); }

std::string PauliPoint::label() const {
    std::string out(n, 'I');
    for (int k = 0; k < n; k++) {
        int zb = (z >> k) & 1, xb = (x >> k) & 1;
        out[k] = "IXZY"[xb + 2 * zb];
    }
    return out;
}

PauliPoint PauliPoint::operator+(const PauliPoint &other) const {
    PauliPoint r = *this;
    r += other;
    return r;
}

PauliPoint &PauliPoint::operator+=(const PauliPoint &other) {
    if (n != other.n) {
        throw std::invalid_argument("point dimension mismatch");
    }
    z ^= other.z;
    x ^= other.x;
    return *this;
}

std::strong_ordering PauliPoint::operator<=>(const PauliPoint &other) const {
    if (auto c = n <=> other.n; c != 0) return c;
    return word() <=> other.word();
}

PauliPoint PauliPoint::head(int m) const {
    uint32_t mask = (1u << m) - 1;
    return PauliPoint(m, z & mask, x & mask);
}

PauliPoint PauliPoint::tail(int m) const { return PauliPoint(n - m, z >> m, x >> m); }

PauliPoint PauliPoint::concat(const PauliPoint &rest) const {
    return PauliPoint(n + rest.n, z | (rest.z << n), x | (rest.x << n));
}

PauliPoint PauliPoint::embed(int big_n, int offset) const {
    if (offset + n > big_n) {
        throw std::invalid_argument("embedding does not fit");
    }
    return PauliPoint(big_n, z << offset, x << offset);
}

int symplectic_form(const PauliPoint &v, const PauliPoint &w) {
    if (v.n != w.n) {
        throw std::invalid_argument("symplectic_form: dimension mismatch");
    }
    return std::popcount((v.z & w.x) ^ (v.x & w.z)) & 1;
}

std::vector<PauliPoint> all_points(int n) {
    std::vector<PauliPoint> out;
    out.reserve(size_t(1) << (2 * n));
    for (uint32_t x = 0; x < (1u << n); x++) {
        for (uint32_t z = 0; z < (1u << n); z++) {
            out.emplace_back(n, z, x);
        }
    }
    return out;
}

std::vector<PauliPoint> nonzero_points(int n) {
    auto pts = all_points(n);
    pts.erase(pts.begin());
    return pts;
}

namespace {

int pivot_of(const PauliPoint &v) { return 63 - std::countl_zero(v.word()); }

}  // namespace

void Subspace::insert(PauliPoint v) {
    v = reduce(v);
    if (v.is_zero()) return;
    int p = pivot_of(v);
    uint64_t bit = uint64_t(1) << p;
    for (auto &b : basis_) {
        if (b.word() & bit) b += v;
    }
    basis_.push_back(v);
    std::sort(basis_.begin(), basis_.end(), [](const PauliPoint &a, const PauliPoint &b) { return a.word() > b.word(); });
}

PauliPoint Subspace::reduce(PauliPoint v) const {
    if (v.n != n_) {
        throw std::invalid_argument("subspace dimension mismatch");
    }
    for (const auto &b : basis_) {
        if (v.word() & (uint64_t(1) << pivot_of(b))) v += b;
    }
    return v;
}

Subspace Subspace::span(int n, const std::vector<PauliPoint> &vectors) {
    Subspace s(n);
    for (const auto &v : vectors) s.insert(v);
    return s;
}

Subspace Subspace::full(int n) {
    Subspace s(n);
    for (int k = 0; k < n; k++) {
        s.insert(PauliPoint::X(n, k));
        s.insert(PauliPoint::Z(n, k));
    }
    return s;
}

bool Subspace::contains(const PauliPoint &v) const { return reduce(v).is_zero(); }

bool Subspace::is_isotropic() const {
    for (size_t i = 0; i < basis_.size(); i++) {
        for (size_t j = i + 1; j < basis_.size(); j++) {
            if (symplectic_form(basis_[i], basis_[j])) return false;
        }
    }
    return true;
}

uint64_t Subspace::coordinates(const PauliPoint &v) const {
    PauliPoint r = v;
    uint64_t c = 0;
    for (size_t i = 0; i < basis_.size(); i++) {
        if (r.word() & (uint64_t(1) << pivot_of(basis_[i]))) {
            r += basis_[i];
            c |= uint64_t(1) << i;
        }
    }
    if (!r.is_zero()) {
        throw std::invalid_argument("point " + v.label() + " is not in the subspace");
    }
    return c;
}

std::vector<PauliPoint> Subspace::elements() const {
    std::vector<PauliPoint> out;
    out.reserve(size());
    for (uint64_t c = 0; c < size(); c++) {
        PauliPoint v = PauliPoint::zero(n_);
        for (size_t i = 0; i < basis_.size(); i++) {
            if ((c >> i) & 1) v += basis_[i];
        }
        out.push_back(v);
    }
    return out;
}

PointSet Subspace::element_set() const {
    auto e = elements();
    return PointSet(e.begin(), e.end());
}

Subspace Subspace::with(const PauliPoint &v) const {
    Subspace s = *this;
    s.insert(v);
    return s;
}

Subspace Subspace::sum(const Subspace &other) const {
    Subspace s = *this;
    for (const auto &b : other.basis_) s.insert(b);
    return s;
}

Subspace Subspace::intersect(const Subspace &other) const {
    // (A + B) perp = A perp cap B perp, so A cap B = (A perp + B perp) perp.
    return perp(perp(*this).sum(perp(other)));
}

bool Subspace::is_subspace_of(const Subspace &other) const {
    for (const auto &b : basis_) {
        if (!other.contains(b)) return false;
    }
    return true;
}

std::string Subspace::to_string() const {
    std::string out = "<";
    for (size_t i = 0; i < basis_.size(); i++) {
        if (i) out += ",";
        out += basis_[i].label();
    }
    return out + ">";
}

std::strong_ordering Subspace::operator<=>(const Subspace &other) const {
    if (auto c = n_ <=> other.n_; c != 0) return c;
    if (auto c = basis_.size() <=> other.basis_.size(); c != 0) return c;
    for (size_t i = 0; i < basis_.size(); i++) {
        if (auto c = basis_[i] <=> other.basis_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

Subspace perp(const Subspace &w) {
    // Solve [v, b] = 0 for every basis vector b.  The form is [v,b] = v_z.b_x + v_x.b_z,
    // i.e. the ordinary dot product of v with the swapped vector (b_x, b_z).
    int n = w.n();
    std::vector<PauliPoint> swapped;
    for (const auto &b : w.basis()) swapped.emplace_back(n, b.x, b.z);
    Subspace rows = Subspace::span(n, swapped);
    // Null space of rows under the standard dot product over packed words.
    std::vector<PauliPoint> out;
    const auto &rb = rows.basis();
    std::vector<int> pivots;
    for (const auto &r : rb) pivots.push_back(pivot_of(r));
    std::vector<int> free_cols;
    for (int c = 0; c < 64; c++) {
        bool valid = (c < 32) ? c < n : (c - 32) < n;
        if (!valid) continue;
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free_cols.push_back(c);
    }
    for (int f : free_cols) {
        uint64_t v = uint64_t(1) << f;
        for (size_t i = 0; i < rb.size(); i++) {
            if (rb[i].word() & (uint64_t(1) << f)) v |= uint64_t(1) << pivots[i];
        }
        out.emplace_back(n, uint32_t(v & 0xffffffffu), uint32_t(v >> 32));
    }
    return Subspace::span(n, out);
}

Subspace perp_of_point(const PauliPoint &a) { return perp(Subspace::span(a.n, {a})); }

std::vector<Subspace> enumerate_isotropics(int n, int bound) {
    if (n > bound) {
        throw std::invalid_argument("enumerate_isotropics: n above bound");
    }
    std::set<Subspace> seen;
    std::vector<Subspace> frontier{Subspace(n)};
    seen.insert(Subspace(n));
    auto pts = nonzero_points(n);
    while (!frontier.empty()) {
        std::vector<Subspace> next;
        for (const auto &s : frontier) {
            if (s.dim() == n) continue;
            for (const auto &p : pts) {
                if (s.contains(p)) continue;
                bool ok = true;
                for (const auto &b : s.basis()) {
                    if (symplectic_form(b, p)) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                Subspace t = s.with(p);
                if (seen.insert(t).second) next.push_back(t);
            }
        }
        frontier = std::move(next);
    }
    return std::vector<Subspace>(seen.begin(), seen.end());
}

std::vector<Subspace> enumerate_maximal_isotropics(int n, int bound) {
    if (n > bound) {
        throw std::invalid_argument("enumerate_maximal_isotropics: n above bound");
    }
    // Depth-first extension of isotropic flags; duplicates are removed by the canonical form.
    std::set<Subspace> out;
    std::set<Subspace> visited;
    std::function<void(const Subspace &)> rec = [&](const Subspace &s) {
        if (s.dim() == n) {
            out.insert(s);
            return;
        }
        if (!visited.insert(s).second) return;
        Subspace sp = perp(s);
        for (const auto &p : sp.elements()) {
            if (s.contains(p)) continue;
            rec(s.with(p));
        }
    };
    rec(Subspace(n));
    return std::vector<Subspace>(out.begin(), out.end());
}

PointSet closure_under_inference(const PointSet &points, int n) {
    PointSet s = points;
    s.insert(PauliPoint::zero(n));
    std::vector<PauliPoint> todo(s.begin(), s.end());
    while (!todo.empty()) {
        PauliPoint v = todo.back();
        todo.pop_back();
        std::vector<PauliPoint> snapshot(s.begin(), s.end());
        for (const auto &w : snapshot) {
            if (commute(v, w)) {
                PauliPoint u = v + w;
                if (s.insert(u).second) todo.push_back(u);
            }
        }
    }
    return s;
}

void Gf2System::add_equation(const std::vector<int> &vars, int rhs) {
    std::vector<uint8_t> row(unknowns_ + 1, 0);
    for (int v : vars) {
        if (v < 0 || v >= unknowns_) throw std::out_of_range("Gf2System: unknown index");
        row[v] ^= 1;
    }
    row[unknowns_] = uint8_t(rhs & 1);
    rows_.push_back(std::move(row));
}

bool Gf2System::solve(std::vector<uint8_t> &particular, std::vector<std::vector<uint8_t>> &nullspace) const {
    auto m = rows_;
    std::vector<int> pivot_col;
    size_t r = 0;
    for (int c = 0; c < unknowns_ && r < m.size(); c++) {
        size_t p = r;
        while (p < m.size() && !m[p][c]) p++;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        for (size_t i = 0; i < m.size(); i++) {
            if (i != r && m[i][c]) {
                for (int k = c; k <= unknowns_; k++) m[i][k] ^= m[r][k];
            }
        }
        pivot_col.push_back(c);
        r++;
    }
    for (size_t i = r; i < m.size(); i++) {
        if (m[i][unknowns_]) return false;
    }
    particular.assign(unknowns_, 0);
    for (size_t i = 0; i < r; i++) particular[pivot_col[i]] = m[i][unknowns_];
    nullspace.clear();
    std::vector<bool> is_pivot(unknowns_, false);
    for (int c : pivot_col) is_pivot[c] = true;
    for (int f = 0; f < unknowns_; f++) {
        if (is_pivot[f]) continue;
        std::vector<uint8_t> v(unknowns_, 0);
        v[f] = 1;
        for (size_t i = 0; i < r; i++) v[pivot_col[i]] = m[i][f];
        nullspace.push_back(std::move(v));
    }
    return true;
}

bool Gf2System::consistent() const {
    std::vector<uint8_t> p;
    std::vector<std::vector<uint8_t>> ns;
    return solve(p, ns);
}

std::vector<std::vector<uint8_t>> gf2_inverse(std::vector<std::vector<uint8_t>> m) {
    size_t n = m.size();
    std::vector<std::vector<uint8_t>> inv(n, std::vector<uint8_t>(n, 0));
    for (size_t i = 0; i < n; i++) inv[i][i] = 1;
    for (size_t c = 0; c < n; c++) {
        size_t p = c;
        while (p < n && !m[p][c]) p++;
        if (p == n) throw std::domain_error("gf2_inverse: singular matrix");
        std::swap(m[p], m[c]);
        std::swap(inv[p], inv[c]);
        for (size_t i = 0; i < n; i++) {
            if (i != c && m[i][c]) {
                for (size_t k = 0; k < n; k++) {
                    m[i][k] ^= m[c][k];
                    inv[i][k] ^= inv[c][k];
                }
            }
        }
    }
    return inv;
}

}  // namespace lambda_forge
