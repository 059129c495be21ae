#pragma once

#include "kwasep/errors.hpp"
#include "kwasep/scalar.hpp"

namespace kwasep {

// First-order jet: value plus exact derivative in one designated variable.
// Arithmetic follows the product and quotient rules, so pushing jets through
// the matrix builders yields exact derivatives of rational expressions.
template <class S>
struct Jet {
    S val;
    S der;

    Jet() : val(0), der(0) {}
    Jet(S v) : val(std::move(v)), der(0) {}                 // constant
    Jet(S v, S d) : val(std::move(v)), der(std::move(d)) {}
    Jet(int v) : val(v), der(0) {}

    static Jet variable(S v) { return Jet(std::move(v), S(1)); }

    friend Jet operator+(const Jet& a, const Jet& b) { return {a.val + b.val, a.der + b.der}; }
    friend Jet operator-(const Jet& a, const Jet& b) { return {a.val - b.val, a.der - b.der}; }
    Jet operator-() const { return {-val, -der}; }
    friend Jet operator*(const Jet& a, const Jet& b) {
        return {a.val * b.val, a.der * b.val + a.val * b.der};
    }
    friend Jet operator/(const Jet& a, const Jet& b) {
        if (scalar_is_zero(b.val)) throw DomainError("Jet division by zero value");
        S q = a.val / b.val;
        return {q, (a.der - q * b.der) / b.val};
    }
    Jet& operator+=(const Jet& o) { *this = *this + o; return *this; }
    Jet& operator-=(const Jet& o) { *this = *this - o; return *this; }
    Jet& operator*=(const Jet& o) { *this = *this * o; return *this; }
    Jet& operator/=(const Jet& o) { *this = *this / o; return *this; }

    friend bool operator==(const Jet& a, const Jet& b) { return a.val == b.val && a.der == b.der; }
    friend bool operator!=(const Jet& a, const Jet& b) { return !(a == b); }
};

template <class S>
bool scalar_is_zero(const Jet<S>& j) {
    return scalar_is_zero(j.val) && scalar_is_zero(j.der);
}

template <class S>
Jet<S> abs_val(const Jet<S>& j) {
    return {abs_val(j.val), abs_val(j.der)};
}

template <class S>
bool operator<(const Jet<S>& a, const Jet<S>& b) {
    return a.val < b.val;  // magnitude ordering for max_abs reporting only
}

} // namespace kwasep
