#ifndef PTAS_BERNSTEIN_HPP
#define PTAS_BERNSTEIN_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <thread>
#include <vector>

#include "combinatorics.hpp"
#include "errors.hpp"
#include "grid.hpp"
#include "multi_index.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace ptas {

enum class BernsteinRoute {
    definitional,
    closed_form,
    specialized_quadratic,
    specialized_cubic,
    specialized_squarefree,
};

inline std::string_view route_name(BernsteinRoute route) {
    switch (route) {
    case BernsteinRoute::definitional: return "definitional";
    case BernsteinRoute::closed_form: return "closed_form";
    case BernsteinRoute::specialized_quadratic: return "specialized_quadratic";
    case BernsteinRoute::specialized_cubic: return "specialized_cubic";
    case BernsteinRoute::specialized_squarefree: return "specialized_squarefree";
    }
    return "unknown";
}

/// B_r(f) as produced by one route. The definitional route fills `homogeneous`
/// (degree r); every other route fills `reduced`, a polynomial of degree <= d
/// that agrees with B_r(f) on the simplex only.
struct BernsteinResult {
    std::optional<HomogeneousPolynomial> homogeneous;
    std::optional<GeneralPolynomial> reduced;
    unsigned r = 1;
    BernsteinRoute source = BernsteinRoute::definitional;

    /// Value at a point of the simplex.
    Rational evaluate(std::span<const Rational> x) const {
        if (reduced) return ptas::evaluate(*reduced, x);
        return ptas::evaluate(*homogeneous, x);
    }
    Rational evaluate(const std::vector<Rational>& x) const { return evaluate(std::span<const Rational>(x)); }
};

namespace detail {

inline void require_order(unsigned r) {
    if (r == 0) throw PreconditionError("Bernstein order r must be at least 1");
}

inline void require_degree(const HomogeneousPolynomial& f, unsigned d, std::string_view route) {
    if (f.degree() != d)
        throw PreconditionError(std::string(route) + " route requires degree " + std::to_string(d) +
                                ", polynomial has degree " + std::to_string(f.degree()));
}

} // namespace detail

/// sum_{alpha in I(n,r)} f(alpha/r) (r!/alpha!) x^alpha
inline BernsteinResult bernstein_definitional(const HomogeneousPolynomial& f, unsigned r) {
    detail::require_order(r);
    const detail::ScaledGridEvaluator eval(f, r);
    HomogeneousPolynomial out(f.dimension(), r);
    Integer num, scratch;
    for (const MultiIndex& alpha : enumerate_grid(f.dimension(), r)) {
        eval.numerator(alpha, num, scratch);
        if (sgn(num) == 0) continue;
        out.add_term(alpha, eval.value(num) * Rational(multinomial(r, alpha)));
    }
    return {std::move(out), std::nullopt, r, BernsteinRoute::definitional};
}

/// Bernstein image of the single monomial x^beta on the simplex:
/// r^-|beta| sum_{alpha <= beta} r^(|alpha| falling) x^alpha prod_i S(beta_i, alpha_i).
inline GeneralPolynomial bernstein_monomial(const MultiIndex& beta, unsigned r) {
    detail::require_order(r);
    const std::size_t n = beta.size();
    GeneralPolynomial out(n);
    const Integer r_pow = ipow(r, beta.total());
    // S(b, 0) = 0 for b >= 1, so alpha shares the support of beta.
    MultiIndex alpha(n);
    for (std::size_t i = 0; i < n; ++i) alpha.set(i, beta[i] ? 1 : 0);
    for (;;) {
        Integer c = falling_factorial(r, alpha.total());
        for (std::size_t i = 0; i < n && sgn(c) != 0; ++i) c *= stirling2(beta[i], alpha[i]);
        if (sgn(c) != 0) out.add_term(alpha, Rational(c, r_pow));
        std::size_t i = 0;
        for (; i < n; ++i) {
            if (alpha[i] < beta[i]) {
                alpha.increment(i);
                break;
            }
            alpha.set(i, beta[i] ? 1 : 0);
        }
        if (i == n) break;
    }
    return out;
}

/// Stirling closed form, summed term by term.
inline BernsteinResult bernstein_closed_form(const HomogeneousPolynomial& f, unsigned r) {
    detail::require_order(r);
    GeneralPolynomial out(f.dimension());
    for (const auto& [beta, c] : f.terms()) out += bernstein_monomial(beta, r) * c;
    return {std::nullopt, std::move(out), r, BernsteinRoute::closed_form};
}

/// Quadratic f = x^T Q x: B_r(f) = (1/r) sum_i Q_ii x_i + (1 - 1/r) f on the simplex.
inline BernsteinResult bernstein_quadratic(const HomogeneousPolynomial& f, unsigned r) {
    detail::require_order(r);
    detail::require_degree(f, 2, "quadratic");
    const std::size_t n = f.dimension();
    const Rational inv_r(Integer(1), Integer(r));
    GeneralPolynomial out = f.to_general() * (Rational(1) - inv_r);
    for (std::size_t i = 0; i < n; ++i)
        out.add_term(MultiIndex::unit(n, i), f.coefficient(MultiIndex::unit(n, i, 2)) * inv_r);
    return {std::nullopt, std::move(out), r, BernsteinRoute::specialized_quadratic};
}

/// Cubic f = sum f_i x_i^3 + sum_{i<j} (f_ij x_i x_j^2 + g_ij x_i^2 x_j) + sum f_ijk x_i x_j x_k:
/// r^2 B_r(f) = (r-1)(r-2) f + sum f_i x_i + (r-1)(sum 3 f_i x_i^2 + sum_{i<j} (f_ij + g_ij) x_i x_j).
inline BernsteinResult bernstein_cubic(const HomogeneousPolynomial& f, unsigned r) {
    detail::require_order(r);
    detail::require_degree(f, 3, "cubic");
    const std::size_t n = f.dimension();
    const Rational r2{Integer(Integer(r) * r)};
    const Rational rm1(static_cast<long>(r) - 1);
    GeneralPolynomial out = f.to_general() * (rm1 * Rational(static_cast<long>(r) - 2) / r2);
    for (std::size_t i = 0; i < n; ++i) {
        const Rational fi = f.coefficient(MultiIndex::unit(n, i, 3));
        out.add_term(MultiIndex::unit(n, i), fi / r2);
        out.add_term(MultiIndex::unit(n, i, 2), Rational(3) * fi * rm1 / r2);
        for (std::size_t j = i + 1; j < n; ++j) {
            MultiIndex ij(n), iij(n), ijj(n);
            ij.set(i, 1), ij.set(j, 1);
            iij.set(i, 2), iij.set(j, 1);
            ijj.set(i, 1), ijj.set(j, 2);
            out.add_term(ij, (f.coefficient(ijj) + f.coefficient(iij)) * rm1 / r2);
        }
    }
    return {std::nullopt, std::move(out), r, BernsteinRoute::specialized_cubic};
}

/// Square-free f of degree d: B_r(f) = (r^(d falling) / r^d) f on the simplex.
inline BernsteinResult bernstein_squarefree(const HomogeneousPolynomial& f, unsigned r) {
    detail::require_order(r);
    if (!is_square_free(f)) throw PreconditionError("square-free route requires a square-free polynomial");
    const unsigned d = f.degree();
    GeneralPolynomial out = f.to_general() * Rational(falling_factorial(r, d), ipow(r, d));
    return {std::nullopt, std::move(out), r, BernsteinRoute::specialized_squarefree};
}

namespace detail {

inline void require_simplex_point(std::size_t n, std::span<const Rational> x) {
    if (x.size() != n) throw PreconditionError("point has the wrong number of coordinates");
    Rational sum;
    for (const auto& xi : x) {
        if (xi.sign() < 0) throw PreconditionError("point has a negative coordinate");
        sum += xi;
    }
    if (sum != Rational(1)) throw PreconditionError("point coordinates sum to " + sum.str() + ", not 1");
}

} // namespace detail

/// m^beta = sum_{alpha in I(n,r)} alpha^beta (r!/alpha!) x^alpha, by full enumeration.
inline Rational moment_direct(std::size_t n, unsigned r, const MultiIndex& beta, std::span<const Rational> x) {
    detail::require_simplex_point(n, x);
    if (beta.size() != n) throw PreconditionError("moment index has the wrong length");
    // Work over the common denominator q: x_i = p_i / q.
    Integer q = 1;
    for (const auto& xi : x) mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), xi.denominator().get_mpz_t());
    std::vector<Integer> p;
    for (const auto& xi : x) p.push_back(xi.numerator() * (q / xi.denominator()));

    Integer total = 0, term;
    for (const MultiIndex& alpha : enumerate_grid(n, r)) {
        term = multinomial(r, alpha);
        for (std::size_t i = 0; i < n && sgn(term) != 0; ++i) {
            if (beta[i]) term *= ipow(alpha[i], beta[i]);
            if (alpha[i]) {
                Integer pw;
                mpz_pow_ui(pw.get_mpz_t(), p[i].get_mpz_t(), alpha[i]);
                term *= pw;
            }
        }
        total += term;
    }
    Integer den;
    mpz_pow_ui(den.get_mpz_t(), q.get_mpz_t(), r);
    return Rational(total, den);
}

inline Rational moment_direct(std::size_t n, unsigned r, const MultiIndex& beta, const std::vector<Rational>& x) {
    return moment_direct(n, r, beta, std::span<const Rational>(x));
}

/// m^beta = sum_{alpha <= beta} r^(|alpha| falling) x^alpha prod_i S(beta_i, alpha_i).
inline Rational moment_stirling(std::size_t n, unsigned r, const MultiIndex& beta, std::span<const Rational> x) {
    detail::require_simplex_point(n, x);
    if (beta.size() != n) throw PreconditionError("moment index has the wrong length");
    Rational total;
    MultiIndex alpha(n);
    for (;;) {
        Integer c = falling_factorial(r, alpha.total());
        for (std::size_t i = 0; i < n && sgn(c) != 0; ++i) c *= stirling2(beta[i], alpha[i]);
        if (sgn(c) != 0) {
            Rational t(c);
            for (std::size_t i = 0; i < n; ++i)
                if (alpha[i]) t *= pow(x[i], alpha[i]);
            total += t;
        }
        std::size_t i = 0;
        for (; i < n; ++i) {
            if (alpha[i] < beta[i]) {
                alpha.increment(i);
                break;
            }
            alpha.set(i, 0);
        }
        if (i == n) break;
    }
    return total;
}

inline Rational moment_stirling(std::size_t n, unsigned r, const MultiIndex& beta, const std::vector<Rational>& x) {
    return moment_stirling(n, r, beta, std::span<const Rational>(x));
}

struct MonteCarloEstimate {
    double estimate = 0.0;
    /// Standard error of the mean; infinite for a single sample.
    double std_error = 0.0;
    std::uint64_t samples = 0;
};

struct MonteCarloOptions {
    std::uint64_t block_size = 4096;
    unsigned threads = 1;
};

/// Estimates B_r(f)(x) = E f(y/r) where y counts r independent categorical
/// draws with P(i) = x_i. Output depends only on (seed, samples, block_size).
template <PolynomialLike P>
MonteCarloEstimate monte_carlo_bernstein(const P& f, unsigned r, std::span<const double> x, std::uint64_t samples,
                                         std::uint64_t seed, const MonteCarloOptions& options = {}) {
    detail::require_order(r);
    if (samples == 0) throw PreconditionError("Monte Carlo needs at least one sample");
    if (options.block_size == 0) throw PreconditionError("Monte Carlo block size must be positive");
    const std::size_t n = f.dimension();
    if (x.size() != n) throw PreconditionError("point has the wrong number of coordinates");
    double sum = 0.0;
    for (double xi : x) {
        if (!(xi >= 0.0)) throw PreconditionError("probability vector has a negative or NaN entry");
        sum += xi;
    }
    if (std::abs(sum - 1.0) > 1e-12) throw PreconditionError("probability vector does not sum to 1");

    std::vector<double> cumulative(n);
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) cumulative[i] = (acc += x[i]);

    struct Block {
        std::uint64_t count = 0;
        double mean = 0.0;
        double m2 = 0.0;
    };
    const std::uint64_t nblocks = (samples + options.block_size - 1) / options.block_size;
    std::vector<Block> blocks(nblocks);

    auto run_block = [&](std::uint64_t b) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
        std::mt19937_64 rng(seq);
        const std::uint64_t count = std::min(options.block_size, samples - b * options.block_size);
        std::vector<unsigned> y(n);
        std::vector<double> point(n);
        Block blk;
        for (std::uint64_t s = 0; s < count; ++s) {
            std::fill(y.begin(), y.end(), 0u);
            for (unsigned step = 0; step < r; ++step) {
                const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * acc;
                std::size_t cat = static_cast<std::size_t>(std::upper_bound(cumulative.begin(), cumulative.end(), u) -
                                                           cumulative.begin());
                if (cat >= n) cat = n - 1;
                while (x[cat] == 0.0 && cat > 0) --cat;
                ++y[cat];
            }
            for (std::size_t i = 0; i < n; ++i) point[i] = static_cast<double>(y[i]) / r;
            const double v = evaluate_double(f, point);
            ++blk.count;
            const double delta = v - blk.mean;
            blk.mean += delta / static_cast<double>(blk.count);
            blk.m2 += delta * (v - blk.mean);
        }
        blocks[b] = blk;
    };

    const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(std::max(1u, options.threads), nblocks));
    if (workers == 1) {
        for (std::uint64_t b = 0; b < nblocks; ++b) run_block(b);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (std::uint64_t b = w; b < nblocks; b += workers) run_block(b);
            });
    }

    // Combine in block order so the result does not depend on thread count.
    Block total;
    for (const auto& blk : blocks) {
        if (blk.count == 0) continue;
        const double n_ab = static_cast<double>(total.count + blk.count);
        const double delta = blk.mean - total.mean;
        total.mean += delta * static_cast<double>(blk.count) / n_ab;
        total.m2 += blk.m2 + delta * delta * static_cast<double>(total.count) * static_cast<double>(blk.count) / n_ab;
        total.count += blk.count;
    }
    MonteCarloEstimate out;
    out.samples = total.count;
    out.estimate = total.mean;
    out.std_error = total.count < 2 ? std::numeric_limits<double>::infinity()
                                    : std::sqrt(total.m2 / static_cast<double>(total.count - 1) /
                                                static_cast<double>(total.count));
    return out;
}

template <PolynomialLike P>
MonteCarloEstimate monte_carlo_bernstein(const P& f, unsigned r, const std::vector<double>& x, std::uint64_t samples,
                                         std::uint64_t seed, const MonteCarloOptions& options = {}) {
    return monte_carlo_bernstein(f, r, std::span<const double>(x), samples, seed, options);
}

} // namespace ptas

#endif // PTAS_BERNSTEIN_HPP
