// Copyright 2026 The lambda-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include "lambda_forge/qoperator.h"

#include <complex>
#include <stdexcept>

namespace lambda_forge {

QOperator::QOperator(int n, const Map &coeffs) : n_(n) {
    for (const auto &[v, c] : coeffs) set(v, c);
}

QOperator QOperator::maximally_mixed(int n) {
    QOperator r(n);
    r.set(PauliPoint::zero(n), FieldElem(1));
    return r;
}

QOperator QOperator::identity(int n) {
    QOperator r(n);
    r.set(PauliPoint::zero(n), FieldElem(1L << n));
    return r;
}

QOperator QOperator::from_labels(const std::map<std::string, FieldElem> &coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("from_labels: empty coefficient map");
    int n = int(coeffs.begin()->first.size());
    QOperator r(n);
    for (const auto &[label, c] : coeffs) {
        PauliPoint v = PauliPoint::from_label(label);
        if (v.n != n) throw std::invalid_argument("from_labels: inconsistent label lengths");
        r.add_to(v, c);
    }
    return r;
}

FieldElem QOperator::coeff(const PauliPoint &v) const {
    auto it = coeffs_.find(v);
    return it == coeffs_.end() ? FieldElem() : it->second;
}

void QOperator::set(const PauliPoint &v, const FieldElem &value) {
    if (v.n != n_) throw std::invalid_argument("operator/point dimension mismatch");
    if (value.is_zero()) {
        coeffs_.erase(v);
    } else {
        coeffs_[v] = value;
    }
}

void QOperator::add_to(const PauliPoint &v, const FieldElem &value) {
    if (v.n != n_) throw std::invalid_argument("operator/point dimension mismatch");
    if (value.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(v, value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

PointSet QOperator::support() const {
    PointSet s;
    for (const auto &kv : coeffs_) s.insert(kv.first);
    return s;
}

QOperator QOperator::scaled(const FieldElem &c) const {
    QOperator r(n_);
    if (c.is_zero()) return r;
    for (const auto &[v, x] : coeffs_) r.coeffs_.emplace(v, x * c);
    return r;
}

QOperator QOperator::operator+(const QOperator &o) const {
    if (o.n_ != n_) throw std::invalid_argument("operator dimension mismatch");
    QOperator r = *this;
    for (const auto &[v, x] : o.coeffs_) r.add_to(v, x);
    return r;
}

QOperator QOperator::operator-(const QOperator &o) const { return *this + o.scaled(FieldElem(-1)); }

bool QOperator::operator<(const QOperator &o) const {
    if (n_ != o.n_) return n_ < o.n_;
    auto i = coeffs_.begin(), j = o.coeffs_.begin();
    for (; i != coeffs_.end() && j != o.coeffs_.end(); ++i, ++j) {
        if (i->first != j->first) return i->first < j->first;
        if (i->second != j->second) {
            if (i->second.a() != j->second.a()) return i->second.a() < j->second.a();
            return i->second.b() < j->second.b();
        }
    }
    return i == coeffs_.end() && j != o.coeffs_.end();
}

std::string QOperator::to_string() const {
    std::string out = "(1/" + std::to_string(1L << n_) + ")[";
    bool first = true;
    for (const auto &[v, x] : coeffs_) {
        if (!first) out += ", ";
        first = false;
        out += v.label() + ":" + x.to_string();
    }
    return out + "]";
}

namespace {

// Unnormalized complex coefficients (re, im) of T_u; the 2^-n prefactor is applied on conversion.
using ComplexMap = std::map<PauliPoint, std::pair<FieldElem, FieldElem>>;

ComplexMap to_complex(const QOperator &a) {
    ComplexMap m;
    for (const auto &[v, x] : a.coeffs()) m[v] = {x, FieldElem(0)};
    return m;
}

// (2^-n sum alpha T)(2^-n sum beta T) = 2^-n sum_u [2^-n sum alpha beta i^f] T_u.
ComplexMap complex_product(const ComplexMap &a, const ComplexMap &b, int n) {
    ComplexMap acc;
    for (const auto &[v, x] : a) {
        for (const auto &[w, y] : b) {
            FieldElem re = x.first * y.first - x.second * y.second;
            FieldElem im = x.first * y.second + x.second * y.first;
            auto &cell = acc[v + w];
            switch (product_phase(v, w)) {
                case 0:
                    cell.first += re;
                    cell.second += im;
                    break;
                case 1:
                    cell.first -= im;
                    cell.second += re;
                    break;
                case 2:
                    cell.first -= re;
                    cell.second -= im;
                    break;
                default:
                    cell.first += im;
                    cell.second -= re;
                    break;
            }
        }
    }
    for (auto &[u, cell] : acc) {
        cell.first = cell.first.scaled_pow2(-n);
        cell.second = cell.second.scaled_pow2(-n);
    }
    return acc;
}

QOperator from_complex(const ComplexMap &m, int n, const char *what) {
    QOperator r(n);
    for (const auto &[u, cell] : m) {
        if (!cell.second.is_zero()) {
            throw std::domain_error(std::string(what) + ": result is not Hermitian (imaginary part at " + u.label() +
                                    ")");
        }
        r.set(u, cell.first);
    }
    return r;
}

}  // namespace

QOperator op_product(const QOperator &a, const QOperator &b) {
    if (a.n() != b.n()) throw std::invalid_argument("op_product: dimension mismatch");
    return from_complex(complex_product(to_complex(a), to_complex(b), a.n()), a.n(), "op_product");
}

QOperator op_tensor(const QOperator &a, const QOperator &b) {
    QOperator r(a.n() + b.n());
    for (const auto &[v, x] : a.coeffs()) {
        for (const auto &[w, y] : b.coeffs()) r.set(v.concat(w), x * y);
    }
    return r;
}

FieldElem trace_inner(const QOperator &a, const QOperator &b) {
    if (a.n() != b.n()) throw std::invalid_argument("trace_inner: dimension mismatch");
    FieldElem sum;
    const auto &small = a.coeffs().size() <= b.coeffs().size() ? a.coeffs() : b.coeffs();
    const QOperator &other = a.coeffs().size() <= b.coeffs().size() ? b : a;
    for (const auto &[v, x] : small) {
        auto it = other.coeffs().find(v);
        if (it != other.coeffs().end()) sum += x * it->second;
    }
    return sum.scaled_pow2(-a.n());
}

QOperator pauli_projector(const PauliPoint &a, int s) {
    int n = a.n;
    QOperator p(n);
    FieldElem half_scale = FieldElem::frac(1L << n, 2);
    p.set(PauliPoint::zero(n), half_scale);
    p.add_to(a, (s & 1) ? -half_scale : half_scale);
    return p;
}

QOperator project(const QOperator &a_op, const PauliPoint &a, int s) {
    if (a.is_zero()) throw std::invalid_argument("project: measured point must be nonzero");
    if (a.n != a_op.n()) throw std::invalid_argument("project: dimension mismatch");
    QOperator r(a_op.n());
    for (const auto &[v, x] : a_op.coeffs()) {
        if (symplectic_form(a, v)) continue;
        FieldElem h = x.scaled_pow2(-1);
        r.add_to(v, h);
        r.add_to(v + a, ((s + beta(v, a)) & 1) ? -h : h);
    }
    return r;
}

QOperator project_via_product(const QOperator &a_op, const PauliPoint &a, int s) {
    if (a.is_zero()) throw std::invalid_argument("project: measured point must be nonzero");
    if (a.n != a_op.n()) throw std::invalid_argument("project: dimension mismatch");
    ComplexMap p = to_complex(pauli_projector(a, s));
    int n = a_op.n();
    return from_complex(complex_product(complex_product(p, to_complex(a_op), n), p, n), n, "project");
}

Eigen::MatrixXcd pauli_matrix(const PauliPoint &v) {
    using C = std::complex<double>;
    Eigen::Matrix2cd I, X, Y, Z;
    I << 1, 0, 0, 1;
    X << 0, 1, 1, 0;
    Y << 0, C(0, -1), C(0, 1), 0;
    Z << 1, 0, 0, -1;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
    for (int k = 0; k < v.n; k++) {
        int zb = (v.z >> k) & 1, xb = (v.x >> k) & 1;
        const Eigen::Matrix2cd &f = zb ? (xb ? Y : Z) : (xb ? X : I);
        Eigen::MatrixXcd next(m.rows() * 2, m.cols() * 2);
        for (int i = 0; i < m.rows(); i++) {
            for (int j = 0; j < m.cols(); j++) next.block(2 * i, 2 * j, 2, 2) = m(i, j) * f;
        }
        m = std::move(next);
    }
    return m;
}

Eigen::MatrixXcd dense_matrix(const QOperator &a) {
    if (a.n() > 5) throw std::invalid_argument("dense_matrix: n too large");
    int d = 1 << a.n();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (const auto &[v, x] : a.coeffs()) m += (x.to_double() / d) * pauli_matrix(v);
    return m;
}

}  // namespace lambda_forge
