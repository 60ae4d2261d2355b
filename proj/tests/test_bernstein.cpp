#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "ptas/ptas.hpp"

using namespace ptas;

namespace {

Rational q(long p, long d = 1) { return Rational(Integer(p), Integer(d)); }

HomogeneousPolynomial sample_quadratic() { return parse_polynomial("2*x1^2 + x2^2 - 5*x1*x2", 2); }

GeneralPolynomial general(std::size_t n, std::initializer_list<std::pair<MultiIndex, Rational>> terms) {
    GeneralPolynomial g(n);
    for (const auto& [k, c] : terms) g.add_term(k, c);
    return g;
}

} // namespace

TEST(DefinitionalTest, SampleQuadraticHomogenized) {
    auto b = bernstein_definitional(sample_quadratic(), 2);
    ASSERT_TRUE(b.homogeneous);
    EXPECT_EQ(*b.homogeneous, parse_polynomial("2*x1^2 + x2^2 - x1*x2", 2));
    EXPECT_EQ(b.source, BernsteinRoute::definitional);
}

TEST(DefinitionalTest, ConstantOnGridGivesPowerOfSum) {
    // f = (x1 + x2 + x3)^2 equals 1 on every grid point.
    auto f = parse_polynomial("x1^2 + x2^2 + x3^2 + 2*x1*x2 + 2*x1*x3 + 2*x2*x3", 3);
    for (unsigned r = 1; r <= 5; ++r) {
        auto b = bernstein_definitional(f, r);
        for (const auto& alpha : enumerate_grid(3, r))
            EXPECT_EQ(b.homogeneous->coefficient(alpha), Rational(multinomial(r, alpha)));
    }
}

TEST(DefinitionalTest, CubicAtMidpoint) {
    auto b = bernstein_definitional(parse_polynomial("x1^3 + x2^3", 2), 2);
    EXPECT_EQ(b.evaluate({q(1, 2), q(1, 2)}), q(5, 8));
}

TEST(DefinitionalTest, MatchesDefinitionOracle) {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 1 + rng() % 3;
        auto f = random_polynomial(n, 1 + rng() % 3, rng);
        const unsigned r = 1 + rng() % 5;
        auto b = bernstein_definitional(f, r);
        for (int k = 0; k < 5; ++k) {
            auto x = oracle::simplex_point(n, rng);
            EXPECT_EQ(b.evaluate(x), oracle::bernstein_value(f, r, x));
        }
    }
}

TEST(ClosedFormTest, MonomialForms) {
    const std::size_t n = 3;
    for (unsigned r = 1; r <= 8; ++r) {
        Rational rr(r);
        for (std::size_t i = 0; i < n; ++i) {
            EXPECT_EQ(bernstein_monomial(MultiIndex::unit(n, i), r), general(n, {{MultiIndex::unit(n, i), 1}}));
            EXPECT_EQ(bernstein_monomial(MultiIndex::unit(n, i, 2), r),
                      general(n, {{MultiIndex::unit(n, i), Rational(1) / rr},
                                  {MultiIndex::unit(n, i, 2), Rational(1) - Rational(1) / rr}}));
        }
        Rational c = Rational(static_cast<long>(r) - 1) * Rational(static_cast<long>(r) - 2) / (rr * rr);
        GeneralPolynomial want(n);
        want.add_term({1, 1, 1}, c);
        EXPECT_EQ(bernstein_monomial({1, 1, 1}, r), want) << "r=" << r;
    }
}

TEST(QuadraticRouteTest, SampleQuadratic) {
    auto b = bernstein_quadratic(sample_quadratic(), 2);
    auto want = general(2, {{{1, 0}, 1}, {{0, 1}, q(1, 2)}, {{2, 0}, 1}, {{0, 2}, q(1, 2)}, {{1, 1}, q(-5, 2)}});
    EXPECT_EQ(*b.reduced, want);
    EXPECT_EQ(*bernstein_closed_form(sample_quadratic(), 2).reduced, want);
}

TEST(QuadraticRouteTest, SumOfSquares) {
    auto f = parse_polynomial("x1^2 + x2^2 + x3^2", 3);
    std::mt19937_64 rng(2);
    for (unsigned r = 1; r <= 6; ++r) {
        auto b = bernstein_quadratic(f, r);
        for (int k = 0; k < 10; ++k) {
            auto x = oracle::simplex_point(3, rng);
            EXPECT_EQ(b.evaluate(x), Rational(1) / Rational(r) + (Rational(1) - Rational(1) / Rational(r)) * evaluate(f, x));
        }
    }
    auto b1 = bernstein_quadratic(f, 1);
    EXPECT_EQ(*b1.reduced, parse_polynomial("x1 + x2 + x3", 3).to_general());
    EXPECT_THROW(bernstein_quadratic(parse_polynomial("x1^3", 1), 2), PreconditionError);
}

TEST(CubicRouteTest, ClosedForms) {
    auto f = parse_polynomial("x1^3 + x2^3", 2);
    std::mt19937_64 rng(4);
    for (unsigned r = 1; r <= 10; ++r) {
        auto b = bernstein_cubic(f, r);
        for (int k = 0; k < 10; ++k) {
            auto x = oracle::simplex_point(2, rng);
            EXPECT_EQ(b.evaluate(x), Rational(1) + (Rational(3) / Rational(r) - 3) * x[0] * x[1]);
        }
    }
    auto m = parse_polynomial("x1*x2*x3", 3);
    for (unsigned r = 3; r <= 8; ++r) {
        GeneralPolynomial want(3);
        want.add_term({1, 1, 1}, Rational(static_cast<long>((r - 1) * (r - 2))) / Rational(r * r));
        EXPECT_EQ(*bernstein_cubic(m, r).reduced, want);
    }
    auto c = bernstein_cubic(parse_polynomial("x1^3", 1), 2);
    EXPECT_EQ(*c.reduced, general(1, {{{1}, q(1, 4)}, {{2}, q(3, 4)}}));
    EXPECT_EQ(c.evaluate({q(1)}), q(1));
    EXPECT_THROW(bernstein_cubic(sample_quadratic(), 3), PreconditionError);
}

TEST(SquareFreeRouteTest, ClosedForms) {
    auto f = parse_polynomial("-x1*x2", 2);
    EXPECT_EQ(*bernstein_squarefree(f, 5).reduced, general(2, {{{1, 1}, q(-4, 5)}}));
    EXPECT_TRUE(bernstein_squarefree(f, 1).reduced->is_zero());
    auto m = parse_polynomial("x1*x2*x3", 3);
    EXPECT_EQ(*bernstein_squarefree(m, 3).reduced, general(3, {{{1, 1, 1}, q(2, 9)}}));
    EXPECT_THROW(bernstein_squarefree(sample_quadratic(), 3), PreconditionError);
}

TEST(RouteAgreementTest, DefinitionalVersusClosedForm) {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 1 + rng() % 4;
        auto f = random_polynomial(n, 1 + rng() % 4, rng);
        const unsigned r = 1 + rng() % 8;
        auto def = bernstein_definitional(f, r);
        auto closed = bernstein_closed_form(f, r);
        for (int k = 0; k < 50; ++k) {
            auto x = random_simplex_point(n, rng);
            ASSERT_EQ(def.evaluate(x), closed.evaluate(x)) << to_string(f) << " r=" << r;
        }
    }
}

TEST(RouteAgreementTest, SpecializedRoutesTermExact) {
    std::mt19937_64 rng(47);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 1 + rng() % 4;
        const unsigned r = 1 + rng() % 8;
        auto f2 = random_polynomial(n, 2, rng);
        EXPECT_EQ(*bernstein_quadratic(f2, r).reduced, *bernstein_closed_form(f2, r).reduced);
        auto f3 = random_polynomial(n, 3, rng, 10);
        EXPECT_EQ(*bernstein_cubic(f3, r).reduced, *bernstein_closed_form(f3, r).reduced);
        HomogeneousPolynomial sf(n, std::min<unsigned>(static_cast<unsigned>(n), 1 + rng() % 3));
        for (int k = 0; k < 4; ++k) {
            MultiIndex a(n);
            std::vector<std::size_t> idx(n);
            for (std::size_t i = 0; i < n; ++i) idx[i] = i;
            std::shuffle(idx.begin(), idx.end(), rng);
            for (unsigned j = 0; j < sf.degree(); ++j) a.set(idx[j], 1);
            sf.add_term(a, Rational(static_cast<long>(rng() % 9) - 4));
        }
        EXPECT_EQ(*bernstein_squarefree(sf, r).reduced, *bernstein_closed_form(sf, r).reduced);
    }
}

TEST(BernsteinPropertyTest, ReproducesVerticesAndDominatesGridMinimum) {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 1 + rng() % 4;
        auto f = random_polynomial(n, 1 + rng() % 4, rng);
        const unsigned r = 1 + rng() % 7;
        auto b = bernstein_closed_form(f, r);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Rational> e(n, 0);
            e[i] = 1;
            EXPECT_EQ(b.evaluate(e), evaluate(f, e));
        }
        const Rational lo = grid_minimize(f, r).value;
        for (int k = 0; k < 20; ++k) EXPECT_GE(b.evaluate(random_simplex_point(n, rng)), lo);
    }
}

TEST(MomentTest, Examples) {
    EXPECT_EQ(moment_direct(3, 4, {0, 0, 0}, {q(1, 5), q(1, 5), q(3, 5)}), q(1));
    EXPECT_EQ(moment_direct(2, 3, {2, 0}, {q(1, 3), q(2, 3)}), q(5, 3));
    EXPECT_EQ(moment_direct(2, 2, {1, 1}, {q(1, 2), q(1, 2)}), q(1, 2));
    EXPECT_EQ(moment_stirling(3, 4, {0, 0, 0}, {q(1, 5), q(1, 5), q(3, 5)}), q(1));
    EXPECT_EQ(moment_stirling(2, 3, {2, 0}, {q(1, 3), q(2, 3)}), q(5, 3));
    EXPECT_EQ(moment_stirling(2, 2, {1, 1}, {q(1, 2), q(1, 2)}), q(1, 2));
}

TEST(MomentTest, SingleCoordinateAndZeroOneExponents) {
    std::mt19937_64 rng(59);
    for (unsigned r = 1; r <= 7; ++r) {
        auto x = oracle::simplex_point(3, rng);
        for (unsigned b = 0; b <= 6; ++b) {
            Rational want = 0;
            for (unsigned a = 0; a <= b; ++a)
                want = want + Rational(Integer(oracle::falling(r, a) * Integer(oracle::set_partitions(b, a)))) *
                                  oracle::power(x[1], a);
            EXPECT_EQ(moment_stirling(3, r, {0, b, 0}, x), want);
        }
        for (const auto& beta : oracle::compositions(3, 2)) {
            if (*std::max_element(beta.begin(), beta.end()) > 1) continue;
            Rational xb = 1;
            for (std::size_t i = 0; i < 3; ++i) xb = xb * oracle::power(x[i], beta[i]);
            EXPECT_EQ(moment_stirling(3, r, MultiIndex(beta), x), Rational(oracle::falling(r, 2)) * xb);
        }
    }
}

TEST(MomentTest, DirectAndStirlingMatchOracle) {
    std::mt19937_64 rng(61);
    for (std::size_t n = 1; n <= 3; ++n)
        for (unsigned r = 1; r <= 6; ++r) {
            auto x = oracle::simplex_point(n, rng);
            for (unsigned b = 0; b <= 4; ++b)
                for (const auto& beta : oracle::compositions(n, b)) {
                    Rational want = oracle::moment(r, beta, x);
                    EXPECT_EQ(moment_direct(n, r, MultiIndex(beta), x), want);
                    EXPECT_EQ(moment_stirling(n, r, MultiIndex(beta), x), want);
                }
        }
}

TEST(MomentTest, BinomialCase) {
    std::mt19937_64 rng(67);
    for (unsigned r = 1; r <= 8; ++r)
        for (unsigned b = 0; b <= 6; ++b) {
            auto x = oracle::simplex_point(2, rng);
            EXPECT_EQ(moment_direct(2, r, {b, 0}, x), moment_stirling(2, r, {b, 0}, x));
        }
}

TEST(MomentTest, RejectsPointsOffTheSimplex) {
    EXPECT_THROW(moment_direct(2, 2, {1, 1}, {q(1, 2), q(1, 3)}), PreconditionError);
    EXPECT_THROW(moment_stirling(2, 2, {1, 1}, {q(3, 2), q(-1, 2)}), PreconditionError);
    EXPECT_THROW(moment_direct(2, 2, {1, 1}, {q(1)}), PreconditionError);
}

TEST(MonteCarloTest, LinearIsExact) {
    auto f = parse_polynomial("2*x1 + 3*x2 - x3", 3);
    auto est = monte_carlo_bernstein(f, 6, std::vector<double>{0.2, 0.3, 0.5}, 20000, 1);
    EXPECT_NEAR(est.estimate, 0.4 + 0.9 - 0.5, 4 * est.std_error + 1e-12);
}

TEST(MonteCarloTest, SquareFreeExample) {
    auto f = parse_polynomial("-x1*x2", 2);
    auto est = monte_carlo_bernstein(f, 5, std::vector<double>{0.5, 0.5}, 200000, 99);
    EXPECT_NEAR(est.estimate, -0.2, 4 * est.std_error);
    EXPECT_LT(est.std_error, 1e-3);
}

TEST(MonteCarloTest, DeterministicPerSeedAndThreadCount) {
    auto f = parse_polynomial("x1^2 - 3*x1*x2 + x2*x3", 3);
    std::vector<double> x{0.25, 0.25, 0.5};
    auto a = monte_carlo_bernstein(f, 4, x, 1, 7);
    auto b = monte_carlo_bernstein(f, 4, x, 1, 7);
    EXPECT_EQ(a.estimate, b.estimate);
    EXPECT_TRUE(std::isinf(a.std_error));
    MonteCarloOptions one, four;
    one.block_size = four.block_size = 1000;
    four.threads = 4;
    auto s = monte_carlo_bernstein(f, 4, x, 10500, 3, one);
    auto p = monte_carlo_bernstein(f, 4, x, 10500, 3, four);
    EXPECT_EQ(s.estimate, p.estimate);
    EXPECT_EQ(s.std_error, p.std_error);
    EXPECT_EQ(s.samples, 10500u);
}

TEST(MonteCarloTest, RejectsInvalidDistribution) {
    auto f = parse_polynomial("x1*x2", 2);
    EXPECT_THROW(monte_carlo_bernstein(f, 2, std::vector<double>{0.5, 0.6}, 10, 1), PreconditionError);
    EXPECT_THROW(monte_carlo_bernstein(f, 2, std::vector<double>{1.5, -0.5}, 10, 1), PreconditionError);
    EXPECT_THROW(monte_carlo_bernstein(f, 2, std::vector<double>{0.5, 0.5}, 0, 1), PreconditionError);
}
