#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "kwasep/errors.hpp"

namespace kwasep {

// Exact rationals are GMP mpq values: always reduced, denominator > 0,
// canonical zero 0/1.  mpq arithmetic preserves the canonical form; the
// helpers below canonicalise on construction.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational ratio(long num, long den) {
    if (den == 0) throw ArgumentError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational ratio(const Integer& num, const Integer& den) {
    if (den == 0) throw ArgumentError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "num/den" or "num".  Whitespace is not accepted.
inline Rational rat_parse(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0)
        throw ArgumentError("cannot parse rational: '" + text + "'");
    r.canonicalize();
    if (r.get_den() == 0) throw ArgumentError("rational with zero denominator: '" + text + "'");
    return r;
}

inline std::string rat_str(const Rational& r) { return r.get_str(); }

inline Rational rat_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw DomainError("0 raised to a negative power");
        return Rational(0);
    }
    Rational b = e < 0 ? Rational(1) / base : base;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational acc(1);
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

// Exact square root, when the rational is a perfect square of a rational.
inline std::optional<Rational> rat_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    Integer num = r.get_num(), den = r.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    Integer sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    return ratio(sn, sd);
}

} // namespace kwasep
