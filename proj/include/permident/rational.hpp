#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "permident/errors.hpp"

namespace permident {

using Integer = mpz_class;

/*
 * Arbitrary-precision rational scalar, always kept in canonical form:
 * denominator > 0, gcd(|numerator|, denominator) = 1, zero stored as 0/1.
 * The sign lives on the numerator, so equality is equality of fields.
 */
class Rational {
public:
    Rational() : q_(0) {}
    Rational(int n) : q_(n) {}
    Rational(long n) : q_(n) {}
    Rational(const Integer& n) : q_(n) {}
    Rational(const Integer& num, const Integer& den);
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    /// Parses the canonical text syntax: optional '-', digits, optionally
    /// '/' and a positive integer denominator. Throws ParseError.
    static Rational parse(std::string_view text);

    const Integer& num() const { return q_.get_num(); }
    const Integer& den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// Canonical text form, "p/q" or plain "p" for integers.
    std::string str() const;

    /// Nearest double (ties to even); overflows to +-inf.
    double to_double() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.q_ == b.q_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) {
        return a.q_ != b.q_;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.q_ < b.q_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return a.q_ <= b.q_;
    }
    friend bool operator>(const Rational& a, const Rational& b) {
        return a.q_ > b.q_;
    }
    friend bool operator>=(const Rational& a, const Rational& b) {
        return a.q_ >= b.q_;
    }

    friend Rational abs(const Rational& a);
    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class q_;
};

/// r^p with integer p; negative p inverts (throws Error on r = 0).
Rational pow(const Rational& base, long p);

/// Exact rational value of a finite double. Throws Error on inf/nan.
Rational rational_from_double(double d);

/// base^e for nonnegative e.
Integer int_pow(const Integer& base, unsigned long e);

}  // namespace permident
