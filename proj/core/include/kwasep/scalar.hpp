#pragma once

#include <string>

#include "kwasep/bigfloat.hpp"
#include "kwasep/rational.hpp"

namespace kwasep {

// The algebra/operator layer is generic over the coefficient scalar:
// Rational for exact computations, BigFloat for the numeric mode.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static constexpr bool exact = true;
    static Rational from(const Rational& r, long /*prec*/) { return r; }
    static Rational zero(long /*prec*/) { return Rational(0); }
    static Rational one(long /*prec*/) { return Rational(1); }
    static std::string str(const Rational& r) { return rat_str(r); }
};

template <>
struct ScalarTraits<BigFloat> {
    static constexpr bool exact = false;
    static BigFloat from(const Rational& r, long prec) { return BigFloat(r, prec); }
    static BigFloat zero(long prec) { return BigFloat(prec); }
    static BigFloat one(long prec) { return BigFloat(1, prec); }
    static std::string str(const BigFloat& x) { return x.str(); }
};

template <class S>
inline constexpr bool is_exact_scalar = ScalarTraits<S>::exact;

inline Rational abs_val(const Rational& r) { return abs(r); }
inline BigFloat abs_val(const BigFloat& x) { return abs(x); }

inline bool scalar_is_zero(const Rational& r) { return r == 0; }
inline bool scalar_is_zero(const BigFloat& x) { return x.is_zero(); }

// Integer power for either scalar.
inline Rational scalar_pow(const Rational& b, long e) { return rat_pow(b, e); }
inline BigFloat scalar_pow(const BigFloat& b, long e) { return pow(b, e); }

} // namespace kwasep
