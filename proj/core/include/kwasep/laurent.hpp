#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "kwasep/composition.hpp"
#include "kwasep/errors.hpp"
#include "kwasep/scalar.hpp"

namespace kwasep {

// Multivariate Laurent polynomial over an exact field (Rational) or over
// BigFloat in numeric mode.  Terms are kept in a map ordered
// lexicographically on exponent vectors, so iteration is deterministic.
// No zero coefficients are stored; equality is term-map equality.
template <class S>
class Laurent {
  public:
    using TermMap = std::map<Composition, S>;

    Laurent() : nvars_(0) {}
    explicit Laurent(int nvars) : nvars_(nvars) {}

    static Laurent zero(int nvars) { return Laurent(nvars); }

    static Laurent constant(int nvars, S c) {
        Laurent f(nvars);
        if (!scalar_is_zero(c)) f.terms_.emplace(Composition(nvars, 0), std::move(c));
        return f;
    }

    static Laurent monomial(int nvars, const Composition& exp, S c) {
        if (static_cast<int>(exp.size()) != nvars)
            throw ArgumentError("Laurent::monomial: exponent length mismatch");
        Laurent f(nvars);
        if (!scalar_is_zero(c)) f.terms_.emplace(exp, std::move(c));
        return f;
    }

    // x_i as a polynomial (i is 1-based).
    static Laurent variable(int nvars, int i, int power = 1) {
        Composition e(nvars, 0);
        e.at(static_cast<std::size_t>(i - 1)) = power;
        return monomial(nvars, e, S(1));
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    S coeff(const Composition& exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? S(0) : it->second;
    }

    void add_term(const Composition& exp, const S& c) {
        if (scalar_is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(exp, c);
        if (!inserted) {
            it->second += c;
            if (scalar_is_zero(it->second)) terms_.erase(it);
        }
    }

    friend bool operator==(const Laurent& a, const Laurent& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

    Laurent& operator+=(const Laurent& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Laurent& operator-=(const Laurent& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend Laurent operator+(Laurent a, const Laurent& b) { a += b; return a; }
    friend Laurent operator-(Laurent a, const Laurent& b) { a -= b; return a; }
    Laurent operator-() const {
        Laurent r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        a.check_same(b);
        Laurent r(a.nvars_);
        Composition e(a.nvars_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (int k = 0; k < a.nvars_; ++k) e[k] = ea[k] + eb[k];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }
    Laurent& operator*=(const Laurent& o) { *this = *this * o; return *this; }

    Laurent scaled(const S& c) const {
        Laurent r(nvars_);
        if (scalar_is_zero(c)) return r;
        for (const auto& [e, cc] : terms_) {
            S prod = cc * c;
            if (!scalar_is_zero(prod)) r.terms_.emplace(e, std::move(prod));
        }
        return r;
    }

    // Multiply by the monomial c * x^shift.
    Laurent shifted(const Composition& shift, const S& c) const {
        Laurent r(nvars_);
        if (scalar_is_zero(c)) return r;
        Composition e(nvars_);
        for (const auto& [ee, cc] : terms_) {
            for (int k = 0; k < nvars_; ++k) e[k] = ee[k] + shift[k];
            S prod = cc * c;
            if (!scalar_is_zero(prod)) r.terms_.emplace(e, std::move(prod));
        }
        return r;
    }

    // --- substitutions (variables are 1-based) ---

    Laurent swap_vars(int i, int j) const {
        check_var(i); check_var(j);
        Laurent r(nvars_);
        for (auto [e, c] : terms_) {
            std::swap(e[i - 1], e[j - 1]);
            r.terms_[e] = std::move(c);
        }
        return r;
    }

    Laurent invert_var(int i) const {
        check_var(i);
        Laurent r(nvars_);
        for (auto [e, c] : terms_) {
            e[i - 1] = -e[i - 1];
            r.terms_[e] = std::move(c);
        }
        return r;
    }

    // x_i -> c * x_i
    Laurent scale_var(int i, const S& c) const {
        check_var(i);
        if (scalar_is_zero(c)) throw ArgumentError("scale_var: zero scale");
        Laurent r(nvars_);
        for (const auto& [e, cc] : terms_) {
            S prod = cc * scalar_pow(c, e[i - 1]);
            if (!scalar_is_zero(prod)) r.terms_[e] = std::move(prod);
        }
        return r;
    }

    // s_0 : x_1 -> sVal * x_1^{-1}
    Laurent s0_sub(const S& sVal) const {
        check_var(1);
        if (scalar_is_zero(sVal)) throw ArgumentError("s0_sub: zero s");
        Laurent r(nvars_);
        for (auto [e, c] : terms_) {
            S prod = c * scalar_pow(sVal, e[0]);
            e[0] = -e[0];
            if (!scalar_is_zero(prod)) r.terms_[e] = std::move(prod);
        }
        return r;
    }

    S evaluate(const std::vector<S>& point) const {
        if (static_cast<int>(point.size()) != nvars_)
            throw ArgumentError("Laurent::evaluate: point length mismatch");
        for (const S& p : point)
            if (scalar_is_zero(p)) throw DomainError("Laurent::evaluate: zero coordinate");
        S total(0);
        for (const auto& [e, c] : terms_) {
            S term = c;
            for (int k = 0; k < nvars_; ++k)
                if (e[k] != 0) term *= scalar_pow(point[k], e[k]);
            total += term;
        }
        return total;
    }

    int min_exponent(int var) const {
        check_var(var);
        bool first = true;
        int best = 0;
        for (const auto& [e, c] : terms_) {
            if (first || e[var - 1] < best) best = e[var - 1];
            first = false;
        }
        return best;
    }
    int max_exponent(int var) const {
        check_var(var);
        bool first = true;
        int best = 0;
        for (const auto& [e, c] : terms_) {
            if (first || e[var - 1] > best) best = e[var - 1];
            first = false;
        }
        return best;
    }

    // Largest coefficient magnitude; the residual norm used by checks.
    S max_abs_coeff() const {
        S best(0);
        for (const auto& [e, c] : terms_) {
            S a = abs_val(c);
            if (best < a) best = a;
        }
        return best;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << ScalarTraits<S>::str(c) << ")";
            for (int k = 0; k < nvars_; ++k)
                if (e[k] != 0) os << "*x" << (k + 1) << "^" << e[k];
        }
        return os.str();
    }

  private:
    void check_same(const Laurent& o) const {
        if (nvars_ != o.nvars_) throw ArgumentError("Laurent arity mismatch");
    }
    void check_var(int i) const {
        if (i < 1 || i > nvars_) throw ArgumentError("Laurent variable index out of range");
    }

    int nvars_;
    TermMap terms_;
};

// Exact division of f by the binomial  ca*x^ea + cb*x^eb,  where the two
// exponents differ in the pivot variable and ea[pivot] > eb[pivot].  The
// quotient is built top-down in the pivot degree; a nonzero remainder means
// the caller's divisibility assumption failed and raises
// InternalConsistencyError.
template <class S>
Laurent<S> divide_exact_binomial(Laurent<S> f, const Composition& ea, const S& ca,
                                 const Composition& eb, const S& cb, int pivot) {
    const int n = f.nvars();
    Laurent<S> q(n);
    if (f.is_zero()) return q;
    long guard = static_cast<long>(f.max_exponent(pivot) - f.min_exponent(pivot)) + 2;
    while (!f.is_zero()) {
        if (--guard < 0)
            throw InternalConsistencyError("divide_exact_binomial: nonzero remainder");
        const int d = f.max_exponent(pivot);
        // quotient slice at pivot degree d - ea[pivot]
        Laurent<S> qslice(n);
        Composition qe(n);
        for (const auto& [e, c] : f.terms()) {
            if (e[pivot - 1] != d) continue;
            for (int k = 0; k < n; ++k) qe[k] = e[k] - ea[k];
            qslice.add_term(qe, c / ca);
        }
        q += qslice;
        f -= qslice.shifted(ea, ca);
        f -= qslice.shifted(eb, cb);
        if constexpr (!is_exact_scalar<S>) {
            // rounding can leave crumbs in the eliminated slice
            Laurent<S> cleaned(n);
            for (const auto& [e, c] : f.terms())
                if (e[pivot - 1] != d) cleaned.add_term(e, c);
            f = std::move(cleaned);
        }
    }
    return q;
}

} // namespace kwasep
