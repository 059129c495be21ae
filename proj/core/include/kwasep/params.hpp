#pragma once

#include <string>

#include "kwasep/errors.hpp"
#include "kwasep/scalar.hpp"

namespace kwasep {

// Exact model parameters.  The six half-parameters s^{1/2}, t^{1/2},
// t_0^{1/2}, u_0^{1/2}, t_N^{1/2}, u_N^{1/2} and the fugacity xi are the
// master values; the Noumi combinations a, b, c, d and the ASEP rates
// p, q, alpha, gamma, beta, delta are derived.
//
// Rate dictionary:  t^{1/2} = sqrt(p/q), t_0^{1/2} = sqrt(alpha/gamma),
// t_N^{1/2} = sqrt(beta/delta),
// u_0^{1/2} - u_0^{-1/2} = (p - q + gamma - alpha)/sqrt(alpha gamma),
// u_N^{1/2} - u_N^{-1/2} = (p - q + delta - beta)/sqrt(beta delta).
struct ParameterPoint {
    Rational sHalf, tHalf, t0Half, u0Half, tNHalf, uNHalf, xi;

    // scale factors fixing the rates: sqrt(pq), sqrt(alpha gamma), sqrt(beta delta)
    Rational sqrtPQ, sqrtAG, sqrtBD;
    bool hasRates = false;  // scale factors are finite and nonzero
    bool physical = false;  // all six rates strictly positive

    Rational s() const { return sHalf * sHalf; }
    Rational t() const { return tHalf * tHalf; }
    Rational t0() const { return t0Half * t0Half; }
    Rational u0() const { return u0Half * u0Half; }
    Rational tN() const { return tNHalf * tNHalf; }
    Rational uN() const { return uNHalf * uNHalf; }

    // Noumi parameters
    Rational a() const { return sHalf * t0Half * u0Half; }
    Rational b() const { return -sHalf * t0Half / u0Half; }
    Rational c() const { return tNHalf * uNHalf; }
    Rational d() const { return -tNHalf / uNHalf; }

    Rational p() const { require_rates(); return sqrtPQ * tHalf; }
    Rational q() const { require_rates(); return sqrtPQ / tHalf; }
    Rational alpha() const { require_rates(); return sqrtAG * t0Half; }
    Rational gamma() const { require_rates(); return sqrtAG / t0Half; }
    Rational beta() const { require_rates(); return sqrtBD * tNHalf; }
    Rational delta() const { require_rates(); return sqrtBD / tNHalf; }

    // Gallavotti--Cohen image of the fugacity:
    // xi' = t_0^{-1} t_N^{-1} t^{-(N-1)} xi^{-1}.
    Rational xi_gc(int N) const {
        return Rational(1) / (t0() * tN() * rat_pow(t(), N - 1) * xi);
    }

    ParameterPoint with_xi(const Rational& newXi) const {
        ParameterPoint p = *this;
        p.xi = newXi;
        return p;
    }

    // Construct from the six half-parameters.  Rates are normalised by
    // sqrt(pq) = 1; they may come out nonpositive, in which case the point
    // is algebra-only (physical = false).
    static ParameterPoint from_halves(Rational sHalf, Rational tHalf, Rational t0Half,
                                      Rational u0Half, Rational tNHalf, Rational uNHalf,
                                      Rational xi = Rational(1));

    // Construct from ASEP rates.  All square roots must be exact rationals;
    // u^{1/2} takes the positive root of u^{1/2} - u^{-1/2} = r (the kappa_+
    // convention).
    static ParameterPoint from_rates(const Rational& p, const Rational& q,
                                     const Rational& alpha, const Rational& gamma,
                                     const Rational& beta, const Rational& delta,
                                     Rational sHalf, Rational xi = Rational(1));

    // Generic point for exact identity checks (avoids all operator
    // denominator zeros; rates are not physical here).
    static ParameterPoint default_generic();

    // Second generic point for Schwartz--Zippel style confidence.
    static ParameterPoint default_generic2();

    // Physical point with |t| < 1 and fast Fock-space convergence; used by
    // the matrix-product and limit computations.
    static ParameterPoint default_physical();

    // Physical point satisfying t_0 t_N t^{N-1} = 1 at the given N
    // (thermal equilibrium when xi = 1).
    static ParameterPoint equilibrium_point(int N);

  private:
    void require_rates() const {
        if (!hasRates)
            throw DomainError("ParameterPoint: ASEP rates are not defined at this point");
    }
};

// Parameter values materialised in a scalar type.  For BigFloat the stored
// precision governs every derived constant.  The s-half entry can be
// overridden independently (s = xi^{1/m} in the limit computations).
template <class S>
struct ParamSet {
    S sHalf, tHalf, t0Half, u0Half, tNHalf, uNHalf, xi;
    S sqrtPQ, sqrtAG, sqrtBD;
    bool hasRates = false;
    long prec = 0;

    static ParamSet from(const ParameterPoint& pp, long precision = 256) {
        ParamSet ps;
        ps.prec = precision;
        ps.sHalf = ScalarTraits<S>::from(pp.sHalf, precision);
        ps.tHalf = ScalarTraits<S>::from(pp.tHalf, precision);
        ps.t0Half = ScalarTraits<S>::from(pp.t0Half, precision);
        ps.u0Half = ScalarTraits<S>::from(pp.u0Half, precision);
        ps.tNHalf = ScalarTraits<S>::from(pp.tNHalf, precision);
        ps.uNHalf = ScalarTraits<S>::from(pp.uNHalf, precision);
        ps.xi = ScalarTraits<S>::from(pp.xi, precision);
        ps.hasRates = pp.hasRates;
        if (pp.hasRates) {
            ps.sqrtPQ = ScalarTraits<S>::from(pp.sqrtPQ, precision);
            ps.sqrtAG = ScalarTraits<S>::from(pp.sqrtAG, precision);
            ps.sqrtBD = ScalarTraits<S>::from(pp.sqrtBD, precision);
        }
        return ps;
    }

    S make(const Rational& r) const { return ScalarTraits<S>::from(r, prec); }
    S one() const { return ScalarTraits<S>::one(prec); }
    S zero() const { return ScalarTraits<S>::zero(prec); }

    S s() const { return sHalf * sHalf; }
    S t() const { return tHalf * tHalf; }
    S t0() const { return t0Half * t0Half; }
    S u0() const { return u0Half * u0Half; }
    S tN() const { return tNHalf * tNHalf; }
    S uN() const { return uNHalf * uNHalf; }

    S a() const { return sHalf * t0Half * u0Half; }
    S b() const { return -(sHalf * t0Half / u0Half); }
    S c() const { return tNHalf * uNHalf; }
    S d() const { return -(tNHalf / uNHalf); }

    S p() const { return sqrtPQ * tHalf; }
    S q() const { return sqrtPQ / tHalf; }

    ParamSet with_s_half(S newSHalf) const {
        ParamSet ps = *this;
        ps.sHalf = std::move(newSHalf);
        return ps;
    }
    ParamSet with_xi(S newXi) const {
        ParamSet ps = *this;
        ps.xi = std::move(newXi);
        return ps;
    }
};

using ExactParams = ParamSet<Rational>;

} // namespace kwasep
