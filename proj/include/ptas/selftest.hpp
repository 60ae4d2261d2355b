#ifndef PTAS_SELFTEST_HPP
#define PTAS_SELFTEST_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bernstein.hpp"
#include "combinatorics.hpp"
#include "grid.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace ptas {

/// Random homogeneous polynomial with up to max_terms terms and coefficients
/// p/q, |p| <= 9, 1 <= q <= 4.
template <typename Rng>
HomogeneousPolynomial random_polynomial(std::size_t n, unsigned d, Rng& rng, unsigned max_terms = 6) {
    HomogeneousPolynomial f(n, d);
    std::uniform_int_distribution<unsigned> nterms(1, max_terms);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    const unsigned count = nterms(rng);
    for (unsigned t = 0; t < count; ++t)
        f.add_term(random_grid_point(n, d, rng), Rational(Integer(num(rng)), Integer(den(rng))));
    return f;
}

struct SelftestItem {
    std::string name;
    bool passed = true;
    std::uint64_t cases = 0;
    std::string failure;  ///< first failing case with both side values
};

struct SelftestRanges {
    unsigned falling_sum_max_d = 8;
    unsigned falling_sum_max_r = 20;
    std::size_t split_max_n = 3;
    unsigned split_max_k = 4;
    unsigned split_max_d = 6;
    unsigned surjection_max_d = 8;
    std::size_t moment_max_n = 3;
    unsigned moment_max_r = 5;
    unsigned moment_max_beta = 4;
    unsigned moment_points = 3;
    unsigned route_polynomials = 20;
    std::size_t route_max_n = 3;
    unsigned route_max_d = 3;
    unsigned route_max_r = 6;
    unsigned route_points = 5;

    static SelftestRanges deep() {
        SelftestRanges s;
        s.falling_sum_max_d = 12;
        s.falling_sum_max_r = 40;
        s.split_max_n = 4;
        s.split_max_d = 7;
        s.surjection_max_d = 9;
        s.moment_max_n = 4;
        s.moment_max_r = 8;
        s.moment_max_beta = 6;
        s.moment_points = 10;
        s.route_polynomials = 100;
        s.route_max_n = 4;
        s.route_max_d = 4;
        s.route_max_r = 8;
        s.route_points = 20;
        return s;
    }
};

namespace detail {

inline void record(SelftestItem& item, bool ok, const std::string& what) {
    ++item.cases;
    if (!ok && item.passed) {
        item.passed = false;
        item.failure = what;
    }
}

} // namespace detail

/// Runs the identity sweeps and route/moment equivalences. Deterministic for a seed.
inline std::vector<SelftestItem> run_selftest(const SelftestRanges& ranges = {}, std::uint64_t seed = 20240521) {
    std::vector<SelftestItem> items;
    std::mt19937_64 rng(seed);

    {
        SelftestItem item{"falling factorial sum of Stirling numbers", true, 0, {}};
        for (unsigned d = 1; d <= ranges.falling_sum_max_d; ++d)
            for (unsigned r = 1; r <= ranges.falling_sum_max_r; ++r) {
                auto chk = check_identity_falling_sum(d, r);
                detail::record(item, chk.holds, "d=" + std::to_string(d) + " r=" + std::to_string(r) +
                                                    " lhs=" + chk.lhs.str() + " rhs=" + chk.rhs.str());
            }
        items.push_back(item);
    }
    {
        SelftestItem item{"Stirling split over I(n,d)", true, 0, {}};
        for (std::size_t n = 1; n <= ranges.split_max_n; ++n)
            for (unsigned k = 0; k <= ranges.split_max_k; ++k)
                for (const MultiIndex& alpha : enumerate_grid(n, k))
                    for (unsigned d = k + 1; d <= ranges.split_max_d; ++d) {
                        auto chk = check_identity_stirling_split(alpha, d);
                        detail::record(item, chk.holds, "alpha=" + alpha.str() + " d=" + std::to_string(d) +
                                                            " lhs=" + chk.lhs.str() + " rhs=" + chk.rhs.str());
                    }
        items.push_back(item);
    }
    {
        SelftestItem item{"surjections equal k! S(d,k)", true, 0, {}};
        for (unsigned d = 0; d <= ranges.surjection_max_d; ++d)
            for (unsigned k = 0; k <= d; ++k) {
                Integer lhs = factorial(k) * stirling2(d, k);
                Integer rhs = surjection_count(d, k);
                detail::record(item, lhs == rhs, "d=" + std::to_string(d) + " k=" + std::to_string(k) +
                                                     " k!S=" + lhs.get_str() + " count=" + rhs.get_str());
            }
        items.push_back(item);
    }
    {
        SelftestItem item{"multinomial moments: direct vs Stirling", true, 0, {}};
        for (std::size_t n = 1; n <= ranges.moment_max_n; ++n)
            for (unsigned r = 1; r <= ranges.moment_max_r; ++r)
                for (unsigned p = 0; p < ranges.moment_points; ++p) {
                    auto x = random_simplex_point(n, rng);
                    for (unsigned b = 0; b <= ranges.moment_max_beta; ++b)
                        for (const MultiIndex& beta : enumerate_grid(n, b)) {
                            Rational lhs = moment_direct(n, r, beta, x);
                            Rational rhs = moment_stirling(n, r, beta, x);
                            detail::record(item, lhs == rhs, "n=" + std::to_string(n) + " r=" + std::to_string(r) +
                                                                 " beta=" + beta.str() + " direct=" + lhs.str() +
                                                                 " stirling=" + rhs.str());
                        }
                }
        items.push_back(item);
    }
    {
        SelftestItem item{"Bernstein routes: definitional vs closed form", true, 0, {}};
        std::uniform_int_distribution<std::size_t> pick_n(1, ranges.route_max_n);
        std::uniform_int_distribution<unsigned> pick_d(1, ranges.route_max_d);
        std::uniform_int_distribution<unsigned> pick_r(1, ranges.route_max_r);
        for (unsigned t = 0; t < ranges.route_polynomials; ++t) {
            auto f = random_polynomial(pick_n(rng), pick_d(rng), rng);
            const unsigned r = pick_r(rng);
            auto def = bernstein_definitional(f, r);
            auto closed = bernstein_closed_form(f, r);
            for (unsigned p = 0; p < ranges.route_points; ++p) {
                auto x = random_simplex_point(f.dimension(), rng);
                Rational a = def.evaluate(x), b = closed.evaluate(x);
                detail::record(item, a == b, "r=" + std::to_string(r) + " definitional=" + a.str() +
                                                 " closed_form=" + b.str());
            }
        }
        items.push_back(item);
    }
    return items;
}

} // namespace ptas

#endif // PTAS_SELFTEST_HPP
