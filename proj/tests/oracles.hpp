// Brute-force reference implementations used only by the tests. Nothing here
// calls into the library beyond its value types.
#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "ptas/polynomial.hpp"
#include "ptas/rational.hpp"

namespace oracle {

using ptas::Integer;
using ptas::Rational;

inline Integer fact(unsigned n) {
    Integer out = 1;
    for (unsigned i = 2; i <= n; ++i) out *= i;
    return out;
}

inline Integer choose(unsigned n, unsigned k) {
    if (k > n) return 0;
    std::vector<Integer> row(1, 1);
    for (unsigned i = 1; i <= n; ++i) {
        std::vector<Integer> next(i + 1, 1);
        for (unsigned j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
        row = std::move(next);
    }
    return row[k];
}

inline Integer falling(unsigned r, unsigned d) {
    Integer out = 1;
    for (unsigned i = 0; i < d; ++i) out *= Integer(static_cast<long>(r) - static_cast<long>(i));
    return d > r ? Integer(0) : out;
}

inline Rational power(const Rational& x, unsigned e) {
    Rational out = 1;
    for (unsigned i = 0; i < e; ++i) out = out * x;
    return out;
}

/// All nonnegative integer vectors of length n summing to r, by recursion.
inline std::vector<std::vector<unsigned>> compositions(std::size_t n, unsigned r) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur(n, 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
        if (i + 1 == n) {
            cur[i] = left;
            out.push_back(cur);
            return;
        }
        for (unsigned a = 0; a <= left; ++a) {
            cur[i] = a;
            rec(i + 1, left - a);
        }
    };
    rec(0, r);
    return out;
}

/// Naive sum of c * prod x_i^e_i.
template <typename P>
Rational eval(const P& f, const std::vector<Rational>& x) {
    Rational total = 0;
    for (const auto& [beta, c] : f.terms()) {
        Rational term = c;
        for (std::size_t i = 0; i < beta.size(); ++i) term = term * power(x[i], beta[i]);
        total = total + term;
    }
    return total;
}

inline std::vector<Rational> point(const std::vector<unsigned>& alpha, unsigned r) {
    std::vector<Rational> x;
    for (unsigned a : alpha) x.push_back(Rational(Integer(a), Integer(r)));
    return x;
}

struct Extremum {
    Rational value;
    std::vector<unsigned> alpha;
};

/// Exhaustive min over Delta(n,r) with the first (lexicographically smallest) minimizer.
inline Extremum grid_min(const ptas::HomogeneousPolynomial& f, unsigned r, bool maximize = false) {
    Extremum best{0, {}};
    bool have = false;
    for (const auto& alpha : compositions(f.dimension(), r)) {
        Rational v = eval(f, point(alpha, r));
        if (!have || (maximize ? v > best.value : v < best.value)) {
            best = {v, alpha};
            have = true;
        }
    }
    return best;
}

/// B_r(f)(x) = sum_alpha f(alpha/r) r!/alpha! x^alpha, straight from the definition.
inline Rational bernstein_value(const ptas::HomogeneousPolynomial& f, unsigned r, const std::vector<Rational>& x) {
    Rational total = 0;
    for (const auto& alpha : compositions(f.dimension(), r)) {
        Integer w = fact(r);
        Rational mono = 1;
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            w /= fact(alpha[i]);
            mono = mono * power(x[i], alpha[i]);
        }
        total = total + eval(f, point(alpha, r)) * Rational(w) * mono;
    }
    return total;
}

/// sum_alpha alpha^beta r!/alpha! x^alpha.
inline Rational moment(unsigned r, const std::vector<unsigned>& beta, const std::vector<Rational>& x) {
    Rational total = 0;
    for (const auto& alpha : compositions(x.size(), r)) {
        Integer w = fact(r);
        Rational term = 1;
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            w /= fact(alpha[i]);
            term = term * power(x[i], alpha[i]) * Rational(power(Rational(alpha[i]), beta[i]));
        }
        total = total + term * Rational(w);
    }
    return total;
}

/// Number of set partitions of {0..b-1} into exactly a blocks, via restricted growth strings.
inline unsigned long set_partitions(unsigned b, unsigned a) {
    if (b == 0) return a == 0 ? 1 : 0;
    unsigned long count = 0;
    std::vector<unsigned> rgs(b, 0);
    std::function<void(unsigned, unsigned)> rec = [&](unsigned i, unsigned blocks) {
        if (i == b) {
            if (blocks == a) ++count;
            return;
        }
        for (unsigned k = 0; k <= blocks && k < a; ++k) {
            rgs[i] = k;
            rec(i + 1, k == blocks ? blocks + 1 : blocks);
        }
    };
    rgs[0] = 0;
    rec(1, 1);
    return a == 0 ? 0 : count;
}

/// Largest set of pairwise non-adjacent vertices, recursive include/exclude.
inline unsigned stability(const std::vector<std::vector<int>>& adj) {
    const std::size_t n = adj.size();
    std::vector<int> chosen;
    unsigned best = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t v) {
        if (v == n) {
            best = std::max<unsigned>(best, static_cast<unsigned>(chosen.size()));
            return;
        }
        bool free = true;
        for (int u : chosen)
            if (adj[v][static_cast<std::size_t>(u)]) free = false;
        if (free) {
            chosen.push_back(static_cast<int>(v));
            rec(v + 1);
            chosen.pop_back();
        }
        rec(v + 1);
    };
    rec(0);
    return best;
}

/// Every simple graph on n vertices, as adjacency matrices.
inline std::vector<std::vector<std::vector<int>>> all_graphs(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::vector<std::vector<std::vector<int>>> out;
    for (unsigned long mask = 0; mask < (1ul << pairs.size()); ++mask) {
        std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));
        for (std::size_t e = 0; e < pairs.size(); ++e)
            if (mask >> e & 1ul) adj[pairs[e].first][pairs[e].second] = adj[pairs[e].second][pairs[e].first] = 1;
        out.push_back(std::move(adj));
    }
    return out;
}

/// Random point alpha/R of the simplex, alpha drawn by a stars-and-bars shuffle.
template <typename Rng>
std::vector<Rational> simplex_point(std::size_t n, Rng& rng, unsigned R = 37) {
    std::vector<int> bars(R + n - 1, 0);
    for (std::size_t i = 0; i + 1 < n; ++i) bars[i] = 1;
    std::shuffle(bars.begin(), bars.end(), rng);
    std::vector<unsigned> alpha(n, 0);
    std::size_t k = 0;
    for (int b : bars) {
        if (b) ++k;
        else ++alpha[k];
    }
    return point(alpha, R);
}

} // namespace oracle
