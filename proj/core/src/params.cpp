#include "kwasep/params.hpp"

namespace kwasep {

ParameterPoint ParameterPoint::from_halves(Rational sHalf, Rational tHalf, Rational t0Half,
                                           Rational u0Half, Rational tNHalf, Rational uNHalf,
                                           Rational xi) {
    for (const Rational* h : {&sHalf, &tHalf, &t0Half, &u0Half, &tNHalf, &uNHalf, &xi})
        if (*h == 0) throw ArgumentError("ParameterPoint: zero parameter");

    ParameterPoint pp;
    pp.sHalf = sHalf;
    pp.tHalf = tHalf;
    pp.t0Half = t0Half;
    pp.u0Half = u0Half;
    pp.tNHalf = tNHalf;
    pp.uNHalf = uNHalf;
    pp.xi = xi;

    // Normalise sqrt(pq) = 1 and solve the boundary dictionary for the
    // remaining scales.
    pp.sqrtPQ = 1;
    const Rational pq = tHalf - Rational(1) / tHalf;  // p - q
    const Rational den0 = (u0Half - Rational(1) / u0Half) + t0Half - Rational(1) / t0Half;
    const Rational denN = (uNHalf - Rational(1) / uNHalf) + tNHalf - Rational(1) / tNHalf;
    if (den0 != 0 && denN != 0) {
        pp.sqrtAG = pq / den0;
        pp.sqrtBD = pq / denN;
        pp.hasRates = pp.sqrtAG != 0 && pp.sqrtBD != 0;
    }
    if (pp.hasRates) {
        pp.physical = pp.p() > 0 && pp.q() > 0 && pp.alpha() > 0 && pp.gamma() > 0 &&
                      pp.beta() > 0 && pp.delta() > 0;
    }
    return pp;
}

namespace {

Rational exact_sqrt_or_throw(const Rational& v, const char* what) {
    auto r = rat_sqrt(v);
    if (!r)
        throw ArgumentError(std::string("ParameterPoint::from_rates: ") + what +
                            " is not a perfect square of a rational; choose perfect-square "
                            "rate combinations");
    return *r;
}

// Positive root of u^{1/2} - u^{-1/2} = r:  u^{1/2} = (r + sqrt(r^2 + 4))/2.
Rational u_half_from_gap(const Rational& r, const char* what) {
    Rational disc = exact_sqrt_or_throw(r * r + 4, what);
    return (r + disc) / 2;
}

} // namespace

ParameterPoint ParameterPoint::from_rates(const Rational& p, const Rational& q,
                                          const Rational& alpha, const Rational& gamma,
                                          const Rational& beta, const Rational& delta,
                                          Rational sHalf, Rational xi) {
    for (const Rational* r : {&p, &q, &alpha, &gamma, &beta, &delta})
        if (*r <= 0) throw ArgumentError("ParameterPoint::from_rates: rates must be positive");

    const Rational tHalf = exact_sqrt_or_throw(p / q, "p/q");
    const Rational t0Half = exact_sqrt_or_throw(alpha / gamma, "alpha/gamma");
    const Rational tNHalf = exact_sqrt_or_throw(beta / delta, "beta/delta");
    const Rational sqrtAG = exact_sqrt_or_throw(alpha * gamma, "alpha*gamma");
    const Rational sqrtBD = exact_sqrt_or_throw(beta * delta, "beta*delta");
    const Rational sqrtPQ = exact_sqrt_or_throw(p * q, "p*q");

    const Rational r0 = (p - q + gamma - alpha) / sqrtAG;
    const Rational rN = (p - q + delta - beta) / sqrtBD;
    const Rational u0Half = u_half_from_gap(r0, "(p-q+gamma-alpha)^2/(alpha gamma)+4");
    const Rational uNHalf = u_half_from_gap(rN, "(p-q+delta-beta)^2/(beta delta)+4");

    ParameterPoint pp;
    pp.sHalf = sHalf;
    pp.tHalf = tHalf;
    pp.t0Half = t0Half;
    pp.u0Half = u0Half;
    pp.tNHalf = tNHalf;
    pp.uNHalf = uNHalf;
    pp.xi = xi;
    pp.sqrtPQ = sqrtPQ;
    pp.sqrtAG = sqrtAG;
    pp.sqrtBD = sqrtBD;
    pp.hasRates = true;
    pp.physical = true;
    return pp;
}

ParameterPoint ParameterPoint::default_generic() {
    return from_halves(ratio(4, 9), ratio(2, 3), ratio(3, 5), ratio(7, 4), ratio(5, 7),
                       ratio(9, 5), ratio(3, 2));
}

ParameterPoint ParameterPoint::default_generic2() {
    return from_halves(ratio(2, 5), ratio(3, 7), ratio(2, 9), ratio(5, 3), ratio(4, 5),
                       ratio(6, 7), ratio(5, 3));
}

ParameterPoint ParameterPoint::default_physical() {
    // p=2/3, q=3/2, alpha=5/11, gamma=20/11, beta=25/63, delta=100/63
    return from_rates(ratio(2, 3), ratio(3, 2), ratio(5, 11), ratio(20, 11), ratio(25, 63),
                      ratio(100, 63), ratio(4, 9));
}

ParameterPoint ParameterPoint::equilibrium_point(int N) {
    // t = 4/9, t0 = 9/16 fixed; tN chosen so that t0 tN t^{N-1} = 1.
    const Rational tHalf = ratio(2, 3);
    const Rational t0Half = ratio(3, 4);
    Rational tNHalfSq = Rational(1) / (t0Half * t0Half * rat_pow(tHalf * tHalf, N - 1));
    auto tNHalf = rat_sqrt(tNHalfSq);
    if (!tNHalf)
        throw ArgumentError("equilibrium_point: no rational equilibrium at this N");
    // u_N^{1/2} = 1/(t_N^{1/2} + 1) keeps the right boundary scale positive
    // for every N with p < q.
    const Rational uNHalf = Rational(1) / (*tNHalf + 1);
    ParameterPoint pp = from_halves(ratio(4, 9), tHalf, t0Half, ratio(5, 4), *tNHalf,
                                    uNHalf, Rational(1));
    if (!pp.physical)
        throw InternalConsistencyError("equilibrium_point: rates not physical");
    return pp;
}

} // namespace kwasep
