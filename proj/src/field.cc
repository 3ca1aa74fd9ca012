// Copyright 2026 The lambda-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include "lambda_forge/field.h"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace lambda_forge {

Rational parse_rational(const std::string &text) {
    std::string t;
    for (char c : text) {
        if (c != ' ' && c != '+') t.push_back(c);
    }
    if (t.empty()) throw std::invalid_argument("empty rational");
    for (char c : t) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/')) {
            throw std::invalid_argument("malformed rational \"" + text + "\"");
        }
    }
    Rational q;
    if (q.set_str(t, 10) != 0) throw std::invalid_argument("malformed rational \"" + text + "\"");
    if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator in \"" + text + "\"");
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational &q) { return q.get_str(); }

int FieldElem::sign() const {
    int sa = sgn(a_), sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 with 2 b^2.
    Rational lhs = a_ * a_, rhs = 2 * b_ * b_;
    int c = cmp(lhs, rhs);
    if (c == 0) return 0;  // unreachable for rationals since sqrt 2 is irrational
    return c > 0 ? sa : sb;
}

double FieldElem::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(2.0); }

std::string FieldElem::to_string() const {
    if (is_rational()) return a_.get_str();
    std::string s = a_.get_str();
    s += sgn(b_) < 0 ? "-" : "+";
    return s + Rational(abs(b_)).get_str() + "*sqrt2";
}

FieldElem &FieldElem::operator+=(const FieldElem &o) {
    a_ += o.a_;
    if (sgn(o.b_) != 0) b_ += o.b_;
    return *this;
}

FieldElem &FieldElem::operator-=(const FieldElem &o) {
    a_ -= o.a_;
    if (sgn(o.b_) != 0) b_ -= o.b_;
    return *this;
}

FieldElem &FieldElem::operator*=(const FieldElem &o) {
    if (sgn(b_) == 0 && sgn(o.b_) == 0) {
        a_ *= o.a_;
        return *this;
    }
    Rational na = a_ * o.a_ + 2 * b_ * o.b_;
    Rational nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(sqrt2)");
    Rational norm = a_ * a_ - 2 * b_ * b_;
    return FieldElem(Rational(a_ / norm), Rational(-b_ / norm));
}

FieldElem &FieldElem::operator/=(const FieldElem &o) {
    if (o.is_rational()) {
        if (sgn(o.a_) == 0) throw std::domain_error("division by zero in Q(sqrt2)");
        a_ /= o.a_;
        if (sgn(b_) != 0) b_ /= o.a_;
        return *this;
    }
    return *this *= o.inverse();
}

FieldElem FieldElem::scaled_pow2(int k) const {
    FieldElem r = *this;
    if (k > 0) {
        mpq_mul_2exp(r.a_.get_mpq_t(), r.a_.get_mpq_t(), k);
        mpq_mul_2exp(r.b_.get_mpq_t(), r.b_.get_mpq_t(), k);
    } else if (k < 0) {
        mpq_div_2exp(r.a_.get_mpq_t(), r.a_.get_mpq_t(), -k);
        mpq_div_2exp(r.b_.get_mpq_t(), r.b_.get_mpq_t(), -k);
    }
    return r;
}

}  // namespace lambda_forge
