#pragma once

#include <algorithm>
#include <cstdlib>
#include <set>
#include <vector>

#include "kwasep/errors.hpp"

namespace kwasep {

// Integer exponent vector (lambda_1, ..., lambda_N).
using Composition = std::vector<int>;

inline bool is_partition(const Composition& c) {
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        if (c[i] < c[i + 1]) return false;
    return c.empty() || c.back() >= 0;
}

// lambda^+: absolute values sorted decreasing.
inline Composition plus_part(const Composition& c) {
    Composition p(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) p[i] = std::abs(c[i]);
    std::sort(p.begin(), p.end(), std::greater<int>());
    return p;
}

// Dominance order: mu <= lambda iff all prefix sums of (mu - lambda) are <= 0.
inline bool dominance_leq(const Composition& mu, const Composition& lambda) {
    if (mu.size() != lambda.size())
        throw ArgumentError("dominance_leq: length mismatch");
    long acc = 0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        acc += mu[i] - lambda[i];
        if (acc > 0) return false;
    }
    return true;
}

// mu preceq lambda iff mu^+ < lambda^+ (strict dominance) or
// (mu^+ = lambda^+ and mu <= lambda).
inline bool preceq(const Composition& mu, const Composition& lambda) {
    if (mu.size() != lambda.size())
        throw ArgumentError("preceq: length mismatch");
    Composition mp = plus_part(mu), lp = plus_part(lambda);
    if (mp == lp) return dominance_leq(mu, lambda);
    return dominance_leq(mp, lp);
}

inline bool prec_strict(const Composition& mu, const Composition& lambda) {
    return mu != lambda && preceq(mu, lambda);
}

// All partitions mu with mu <= (m^N) in dominance order, i.e. partitions of
// length N with parts <= m, listed in a total order refining dominance:
// by weight ascending, then lexicographically ascending.
inline std::vector<Composition> box_partitions(int m, int N) {
    if (m < 0 || N < 1) throw ArgumentError("box_partitions: need m >= 0, N >= 1");
    std::vector<Composition> out;
    Composition cur(static_cast<std::size_t>(N), 0);
    auto rec = [&](auto&& self, int pos, int maxPart) -> void {
        if (pos == N) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= maxPart; ++v) {
            cur[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, v);
        }
        cur[static_cast<std::size_t>(pos)] = 0;
    };
    rec(rec, 0, m);
    std::sort(out.begin(), out.end(), [](const Composition& a, const Composition& b) {
        long sa = 0, sb = 0;
        for (int v : a) sa += v;
        for (int v : b) sb += v;
        if (sa != sb) return sa < sb;
        return a < b;
    });
    return out;
}

// The W0 orbit of a partition: all distinct sign/permutation images.
inline std::vector<Composition> signed_permutations(const Composition& lambda) {
    if (!is_partition(lambda))
        throw ArgumentError("signed_permutations: input must be a partition");
    std::set<Composition> seen;
    Composition perm = lambda;
    std::sort(perm.begin(), perm.end());
    do {
        const std::size_t n = perm.size();
        for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
            Composition c = perm;
            bool skip = false;
            for (std::size_t i = 0; i < n; ++i) {
                if (mask & (1ul << i)) {
                    if (c[i] == 0) { skip = true; break; } // sign flip of 0 is not new
                    c[i] = -c[i];
                }
            }
            if (!skip) seen.insert(c);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {seen.begin(), seen.end()};
}

// Prefix-sum vector, used to build total orders refining dominance.
inline std::vector<long> prefix_sums(const Composition& c) {
    std::vector<long> p(c.size());
    long acc = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        acc += c[i];
        p[i] = acc;
    }
    return p;
}

// A total order refining preceq: the key (prefix sums of mu^+, prefix sums
// of mu, mu) compared lexicographically.  mu preceq lambda (strictly)
// implies mu sorts before lambda.
struct PreceqRefinement {
    bool operator()(const Composition& x, const Composition& y) const {
        auto px = prefix_sums(plus_part(x)), py = prefix_sums(plus_part(y));
        if (px != py) return px < py;
        auto qx = prefix_sums(x), qy = prefix_sums(y);
        if (qx != qy) return qx < qy;
        return x < y;
    }
};

// All compositions mu with mu preceq lambda, for lambda with lambda^+ = (m^N).
// Definition 1 supports the expansion of E_lambda exactly on this set.
inline std::vector<Composition> compositions_preceq(const Composition& lambda) {
    const int N = static_cast<int>(lambda.size());
    Composition lp = plus_part(lambda);
    for (int v : lp)
        if (v != lp[0]) throw ArgumentError("compositions_preceq: need lambda^+ = (m^N)");
    const int m = lp.empty() ? 0 : lp[0];
    std::vector<Composition> out;
    for (const Composition& part : box_partitions(m, N))
        for (const Composition& mu : signed_permutations(part))
            if (preceq(mu, lambda)) out.push_back(mu);
    std::sort(out.begin(), out.end(), PreceqRefinement{});
    return out;
}

} // namespace kwasep
