#include "permident/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

namespace permident {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw ParseError("rational with zero denominator");
    }
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    // Grammar: '-'? digits ('/' digits)?, denominator > 0.
    const auto fail = [&] {
        throw ParseError("bad rational token '" + std::string(text) + "'");
    };
    std::string_view s = text;
    std::string num, den;
    if (!s.empty() && s.front() == '-') {
        num += '-';
        s.remove_prefix(1);
    }
    std::size_t i = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        ++i;
    }
    if (i == 0) fail();
    num.append(s.substr(0, i));
    s.remove_prefix(i);
    if (!s.empty()) {
        if (s.front() != '/') fail();
        s.remove_prefix(1);
        i = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            ++i;
        }
        if (i == 0 || i != s.size()) fail();
        den = std::string(s);
    }
    Integer n(num);
    if (den.empty()) {
        return Rational(n);
    }
    Integer d(den);
    if (d == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(n, d);
}

std::string Rational::str() const {
    return q_.get_str();
}

double Rational::to_double() const {
    // Round-to-nearest-even: force a quotient of >= 55 bits, split off the
    // top 53, and resolve the tie with guard/sticky bits plus the division
    // remainder.
    if (is_zero()) return 0.0;
    Integer an = abs(q_.get_num());
    const Integer& d = q_.get_den();
    const long nb = static_cast<long>(mpz_sizeinbase(an.get_mpz_t(), 2));
    const long db = static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2));
    const long shift = 56 - (nb - db);
    Integer q, r, den = d;
    if (shift >= 0) {
        an <<= static_cast<unsigned long>(shift);
    } else {
        den <<= static_cast<unsigned long>(-shift);
    }
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), an.get_mpz_t(), den.get_mpz_t());

    const long bits = static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 2));
    const long drop = bits - 53;  // >= 2 by choice of shift
    Integer head = q >> static_cast<unsigned long>(drop);
    const bool guard = mpz_tstbit(q.get_mpz_t(), static_cast<unsigned long>(drop - 1)) != 0;
    bool sticky = (r != 0);
    if (!sticky) {
        Integer low = q - (head << static_cast<unsigned long>(drop));
        mpz_clrbit(low.get_mpz_t(), static_cast<unsigned long>(drop - 1));
        sticky = (low != 0);
    }
    if (guard && (sticky || mpz_tstbit(head.get_mpz_t(), 0))) {
        head += 1;
    }
    double mant = head.get_d();  // head <= 2^53, exact
    double v = std::ldexp(mant, static_cast<int>(drop - shift));
    return sign() < 0 ? -v : v;
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw Error("rational division by zero");
    }
    q_ /= o.q_;
    return *this;
}

Rational abs(const Rational& a) {
    return a.sign() < 0 ? -a : a;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational pow(const Rational& base, long p) {
    if (p == 0) return Rational(1);
    if (base.is_zero() && p < 0) {
        throw Error("zero raised to a negative power");
    }
    const unsigned long e = static_cast<unsigned long>(p < 0 ? -p : p);
    Integer n = int_pow(base.num(), e);
    Integer d = int_pow(base.den(), e);
    // gcd(n, d) = 1 is preserved by powering, but Rational re-canonicalizes.
    if (p < 0) n.swap(d);
    return Rational(n, d);
}

Integer int_pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rational rational_from_double(double d) {
    if (!std::isfinite(d)) {
        throw Error("cannot convert a non-finite double to a rational");
    }
    if (d == 0.0) return Rational(0);
    int exp = 0;
    const double frac = std::frexp(d, &exp);           // d = frac * 2^exp
    const double scaled = std::ldexp(frac, 53);        // integer-valued, |.| < 2^53
    Integer mant(scaled);                              // exact
    const int e2 = exp - 53;
    if (e2 >= 0) {
        return Rational(mant << e2);
    }
    return Rational(mant, Integer(1) << (-e2));
}

}  // namespace permident
