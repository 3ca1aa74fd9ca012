// Copyright 2026 The lambda-forge Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LAMBDA_FORGE_FIELD_H
#define LAMBDA_FORGE_FIELD_H

#include <gmpxx.h>

#include <string>

namespace lambda_forge {

using Rational = mpq_class;

Rational parse_rational(const std::string &text);
std::string rational_to_string(const Rational &q);

/// Exact element a + b*sqrt(2) of Q(sqrt 2).
class FieldElem {
   public:
    FieldElem() = default;
    FieldElem(long v) : a_(v) {}  // NOLINT: implicit from integers is convenient in formulas
    FieldElem(const Rational &a) : a_(a) { a_.canonicalize(); }  // NOLINT
    FieldElem(const Rational &a, const Rational &b) : a_(a), b_(b) {
        a_.canonicalize();
        b_.canonicalize();
    }
    static FieldElem frac(long num, long den) {
        Rational q(num, den);
        q.canonicalize();
        return FieldElem(q);
    }
    static FieldElem sqrt2() { return FieldElem(Rational(0), Rational(1)); }

    const Rational &a() const { return a_; }
    const Rational &b() const { return b_; }
    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }
    int sign() const;
    double to_double() const;
    /// "p/q" when rational, otherwise "a+b*sqrt2".
    std::string to_string() const;

    FieldElem operator-() const { return FieldElem(-a_, -b_); }
    FieldElem &operator+=(const FieldElem &o);
    FieldElem &operator-=(const FieldElem &o);
    FieldElem &operator*=(const FieldElem &o);
    FieldElem &operator/=(const FieldElem &o);
    FieldElem inverse() const;
    /// Multiply by 2^k (k may be negative); cheap on the rational parts.
    FieldElem scaled_pow2(int k) const;

    friend FieldElem operator+(FieldElem x, const FieldElem &y) { return x += y; }
    friend FieldElem operator-(FieldElem x, const FieldElem &y) { return x -= y; }
    friend FieldElem operator*(FieldElem x, const FieldElem &y) { return x *= y; }
    friend FieldElem operator/(FieldElem x, const FieldElem &y) { return x /= y; }
    friend bool operator==(const FieldElem &x, const FieldElem &y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend bool operator<(const FieldElem &x, const FieldElem &y) { return (x - y).sign() < 0; }
    friend bool operator>(const FieldElem &x, const FieldElem &y) { return y < x; }
    friend bool operator<=(const FieldElem &x, const FieldElem &y) { return !(y < x); }
    friend bool operator>=(const FieldElem &x, const FieldElem &y) { return !(x < y); }

   private:
    Rational a_{0};
    Rational b_{0};
};

}  // namespace lambda_forge

#endif
