#ifndef PTAS_GRID_HPP
#define PTAS_GRID_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <limits>
#include <random>
#include <thread>
#include <vector>

#include "errors.hpp"
#include "multi_index.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace ptas {

/// |I(n,r)| = C(n+r-1, r).
inline Integer grid_size(std::size_t n, unsigned r) {
    if (n == 0) throw PreconditionError("dimension must be at least 1");
    return binomial(n + r - 1, r);
}

namespace detail {

inline std::uint64_t grid_size_u64(std::size_t n, unsigned r) {
    Integer size = grid_size(n, r);
    if (!size.fits_ulong_p()) throw PreconditionError("grid Delta(" + std::to_string(n) + "," + std::to_string(r) + ") is too large to enumerate");
    return size.get_ui();
}

} // namespace detail

/// The rank-th element (0-based) of I(n,r) in lexicographic order.
inline MultiIndex unrank_grid_point(std::size_t n, unsigned r, std::uint64_t rank) {
    if (rank >= detail::grid_size_u64(n, r)) throw PreconditionError("grid rank out of range");
    MultiIndex alpha(n);
    unsigned rem = r;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (unsigned a = 0; a <= rem; ++a) {
            std::uint64_t below = detail::grid_size_u64(n - i - 1, rem - a);
            if (rank < below) {
                alpha.set(i, a);
                rem -= a;
                break;
            }
            rank -= below;
        }
    }
    alpha.set(n - 1, rem);
    return alpha;
}

/// Lexicographic range over the elements of I(n,r) with ranks in [first, last).
class GridRange {
public:
    class iterator {
    public:
        using value_type = MultiIndex;
        using difference_type = std::ptrdiff_t;
        using reference = const MultiIndex&;
        using iterator_category = std::input_iterator_tag;

        iterator() = default;
        iterator(MultiIndex start, std::uint64_t remaining) : alpha_(std::move(start)), remaining_(remaining) {}

        reference operator*() const { return alpha_; }
        const MultiIndex* operator->() const { return &alpha_; }

        iterator& operator++() {
            if (--remaining_ > 0) next_composition(alpha_);
            return *this;
        }
        void operator++(int) { ++*this; }

        friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.remaining_ == 0; }

    private:
        MultiIndex alpha_;
        std::uint64_t remaining_ = 0;
    };

    GridRange(std::size_t n, unsigned r, std::uint64_t first, std::uint64_t last)
        : n_(n), r_(r), first_(first), last_(std::min(last, detail::grid_size_u64(n, r))) {}

    GridRange(std::size_t n, unsigned r) : GridRange(n, r, 0, std::numeric_limits<std::uint64_t>::max()) {}

    iterator begin() const {
        if (first_ >= last_) return iterator();
        return iterator(unrank_grid_point(n_, r_, first_), last_ - first_);
    }
    std::default_sentinel_t end() const { return {}; }

    std::uint64_t size() const { return first_ >= last_ ? 0 : last_ - first_; }

private:
    std::size_t n_;
    unsigned r_;
    std::uint64_t first_;
    std::uint64_t last_;
};

/// Every alpha in I(n,r) once, lexicographically: (0,..,0,r) first.
inline GridRange enumerate_grid(std::size_t n, unsigned r) { return GridRange(n, r); }

/// alpha / r, a point of the regular grid Delta(n,r).
struct GridPoint {
    MultiIndex alpha;
    unsigned r = 1;

    std::vector<Rational> coordinates() const {
        std::vector<Rational> x;
        x.reserve(alpha.size());
        for (unsigned a : alpha) x.emplace_back(Integer(a), Integer(r));
        return x;
    }

    friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

struct GridMinimum {
    Rational value;
    GridPoint argmin;
    std::uint64_t evaluations = 0;
};

struct GridOptions {
    unsigned threads = 1;
};

namespace detail {

/// Evaluates f(alpha/r) with integer arithmetic: f(alpha/r) = N(alpha) / (D r^d),
/// D the lcm of the coefficient denominators.
class ScaledGridEvaluator {
public:
    ScaledGridEvaluator(const HomogeneousPolynomial& f, unsigned r) {
        Integer lcm_den = 1;
        for (const auto& [beta, c] : f.terms()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.denominator().get_mpz_t());
        for (const auto& [beta, c] : f.terms()) {
            Term t;
            t.coeff = c.numerator() * (lcm_den / c.denominator());
            for (std::size_t i = 0; i < beta.size(); ++i)
                if (beta[i] != 0) t.factors.emplace_back(i, beta[i]);
            terms_.push_back(std::move(t));
        }
        const unsigned d = f.degree();
        powers_.assign(r + 1, std::vector<Integer>(d + 1));
        for (unsigned a = 0; a <= r; ++a)
            for (unsigned e = 0; e <= d; ++e) powers_[a][e] = ipow(a, e);
        scale_ = lcm_den * ipow(r, d);
    }

    void numerator(const MultiIndex& alpha, Integer& out, Integer& scratch) const {
        out = 0;
        for (const auto& t : terms_) {
            scratch = t.coeff;
            for (const auto& [i, e] : t.factors) {
                const Integer& p = powers_[alpha[i]][e];
                if (sgn(p) == 0) {
                    scratch = 0;
                    break;
                }
                scratch *= p;
            }
            out += scratch;
        }
    }

    Rational value(const Integer& numerator) const { return Rational(numerator, scale_); }

private:
    struct Term {
        Integer coeff;
        std::vector<std::pair<std::size_t, unsigned>> factors;
    };
    std::vector<Term> terms_;
    std::vector<std::vector<Integer>> powers_;
    Integer scale_;
};

struct LocalBest {
    bool found = false;
    Integer numerator;
    MultiIndex alpha;
};

template <typename Better>
GridMinimum grid_extremum(const HomogeneousPolynomial& f, unsigned r, const GridOptions& options, Better better) {
    if (r == 0) throw PreconditionError("grid order r must be at least 1");
    const std::size_t n = f.dimension();
    const std::uint64_t size = grid_size_u64(n, r);
    const ScaledGridEvaluator eval(f, r);

    auto scan = [&](std::uint64_t first, std::uint64_t last, LocalBest& best) {
        Integer value, scratch;
        for (const MultiIndex& alpha : GridRange(n, r, first, last)) {
            eval.numerator(alpha, value, scratch);
            if (!best.found || better(value, best.numerator)) {
                best.found = true;
                best.numerator = value;
                best.alpha = alpha;
            }
        }
    };

    const std::uint64_t workers = std::clamp<std::uint64_t>(options.threads, 1, std::max<std::uint64_t>(1, size / 64));
    std::vector<LocalBest> partial(workers);
    if (workers == 1) {
        scan(0, size, partial[0]);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::uint64_t w = 0; w < workers; ++w) {
            std::uint64_t first = size * w / workers;
            std::uint64_t last = size * (w + 1) / workers;
            pool.emplace_back([&, w, first, last] { scan(first, last, partial[w]); });
        }
    }

    // Chunks are in rank order, so keeping the earliest strict improvement
    // reproduces the sequential lexicographic tie-break.
    LocalBest best;
    for (auto& p : partial) {
        if (!p.found) continue;
        if (!best.found || better(p.numerator, best.numerator)) best = std::move(p);
    }
    return GridMinimum{eval.value(best.numerator), GridPoint{best.alpha, r}, size};
}

} // namespace detail

/// min over Delta(n,r) of f, ties broken by the lexicographically smallest alpha.
inline GridMinimum grid_minimize(const HomogeneousPolynomial& f, unsigned r, const GridOptions& options = {}) {
    return detail::grid_extremum(f, r, options, [](const Integer& a, const Integer& b) { return a < b; });
}

/// max over Delta(n,r) of f, ties broken by the lexicographically smallest alpha.
inline GridMinimum grid_maximize(const HomogeneousPolynomial& f, unsigned r, const GridOptions& options = {}) {
    return detail::grid_extremum(f, r, options, [](const Integer& a, const Integer& b) { return a > b; });
}

/// Closed-form grid minimum of x_1^d + ... + x_n^d: with r = kn + s,
/// s coordinates equal (k+1)/r and n-s equal k/r.
inline Rational sum_of_powers_grid_min(std::size_t n, unsigned r, unsigned d) {
    if (n == 0 || r == 0 || d == 0) throw PreconditionError("sum_of_powers_grid_min requires n, r, d >= 1");
    const unsigned k = static_cast<unsigned>(r / n);
    const unsigned long s = r % n;
    const Rational lo{Integer(k), Integer(r)};
    const Rational hi{Integer(k + 1), Integer(r)};
    return Rational(s) * pow(hi, d) + Rational(static_cast<unsigned long>(n - s)) * pow(lo, d);
}

/// Uniformly random alpha in I(n,R).
template <typename Rng>
MultiIndex random_grid_point(std::size_t n, unsigned R, Rng& rng) {
    std::uniform_int_distribution<std::uint64_t> pick(0, detail::grid_size_u64(n, R) - 1);
    return unrank_grid_point(n, R, pick(rng));
}

/// Random rational point of the simplex drawn from Delta(n,R). R = 37 avoids
/// landing on the small grids the tests minimize over.
template <typename Rng>
std::vector<Rational> random_simplex_point(std::size_t n, Rng& rng, unsigned R = 37) {
    return GridPoint{random_grid_point(n, R, rng), R}.coordinates();
}

} // namespace ptas

#endif // PTAS_GRID_HPP
