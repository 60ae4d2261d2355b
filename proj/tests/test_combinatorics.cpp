#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ptas/ptas.hpp"

using namespace ptas;

TEST(FallingFactorialTest, Values) {
    EXPECT_EQ(falling_factorial(5, 3), 60);
    EXPECT_EQ(falling_factorial(3, 5), 0);
    for (unsigned r = 0; r <= 10; ++r) EXPECT_EQ(falling_factorial(r, 0), 1);
    for (unsigned r = 0; r <= 12; ++r)
        for (unsigned d = 0; d <= 12; ++d) EXPECT_EQ(falling_factorial(r, d), oracle::falling(r, d));
}

TEST(Stirling2Test, Values) {
    EXPECT_EQ(stirling2(4, 2), 7);
    EXPECT_EQ(oracle::set_partitions(4, 2), 7u);
    for (unsigned d = 0; d <= 12; ++d) EXPECT_EQ(stirling2(d, d), 1);
    EXPECT_EQ(stirling2(3, 1), 1);
    EXPECT_EQ(stirling2(0, 0), 1);
    EXPECT_EQ(stirling2(5, 0), 0);
    EXPECT_EQ(stirling2(2, 5), 0);
}

TEST(Stirling2Test, MatchesSetPartitionEnumeration) {
    for (unsigned b = 0; b <= 9; ++b)
        for (unsigned a = 0; a <= b + 1; ++a)
            EXPECT_EQ(stirling2(b, a), Integer(oracle::set_partitions(b, a))) << b << "," << a;
}

TEST(Stirling2Test, TableSatisfiesRecurrence) {
    StirlingTable table(30);
    for (unsigned b = 0; b < 30; ++b)
        for (unsigned a = 1; a <= b + 1; ++a) EXPECT_EQ(table(b + 1, a), table(b, a - 1) + Integer(a) * table(b, a));
    EXPECT_EQ(table(30, 15), stirling2(30, 15));
}

TEST(MultinomialTest, Values) {
    EXPECT_EQ(multinomial(2, {1, 1}), 2);
    EXPECT_EQ(multinomial(4, {2, 2}), 6);
    EXPECT_EQ(multinomial(5, {5, 0, 0}), 1);
    EXPECT_THROW(multinomial(4, {1, 1}), PreconditionError);
}

TEST(MultinomialTest, TimesFactorialsIsRFactorial) {
    for (std::size_t n = 1; n <= 4; ++n)
        for (unsigned r = 0; r <= 9; ++r)
            for (const auto& a : oracle::compositions(n, r)) {
                Integer prod = multinomial(r, MultiIndex(a));
                for (unsigned ai : a) prod *= oracle::fact(ai);
                EXPECT_EQ(prod, oracle::fact(r));
            }
}

TEST(SurjectionTest, Values) {
    EXPECT_EQ(surjection_count(3, 2), 6);
    for (unsigned d = 1; d <= 6; ++d) EXPECT_EQ(surjection_count(d, 1), 1);
    EXPECT_EQ(surjection_count(2, 3), 0);
    EXPECT_THROW(surjection_count(11, 2), PreconditionError);
}

TEST(SurjectionTest, EqualsFactorialTimesStirling) {
    for (unsigned d = 0; d <= 8; ++d)
        for (unsigned k = 0; k <= d; ++k) EXPECT_EQ(surjection_count(d, k), oracle::fact(k) * stirling2(d, k));
}

TEST(IdentityTest, FallingSumExamples) {
    auto c = check_identity_falling_sum(3, 4);
    EXPECT_TRUE(c.holds);
    EXPECT_EQ(c.lhs, 40);
    EXPECT_EQ(c.rhs, 40);
    EXPECT_TRUE(check_identity_falling_sum(1, 7).holds);
    EXPECT_TRUE(check_identity_falling_sum(2, 2).holds);
}

TEST(IdentityTest, FallingSumSweep) {
    for (unsigned d = 1; d <= 8; ++d)
        for (unsigned r = 1; r <= 20; ++r) EXPECT_TRUE(check_identity_falling_sum(d, r).holds) << d << "," << r;
}

TEST(IdentityTest, StirlingSplitExamples) {
    auto c = check_identity_stirling_split({1, 1}, 3);
    EXPECT_TRUE(c.holds);
    EXPECT_EQ(c.lhs, 3);
    for (unsigned k = 0; k <= 4; ++k)
        for (unsigned d = k + 1; d <= 7; ++d) EXPECT_TRUE(check_identity_stirling_split({k}, d).holds);
    EXPECT_TRUE(check_identity_stirling_split({2, 1}, 4).holds);
    EXPECT_THROW(check_identity_stirling_split({2, 1}, 3), PreconditionError);
}

TEST(IdentityTest, StirlingSplitSweep) {
    for (std::size_t n = 1; n <= 3; ++n)
        for (unsigned k = 0; k <= 4; ++k)
            for (const auto& a : oracle::compositions(n, k))
                for (unsigned d = k + 1; d <= 6; ++d)
                    EXPECT_TRUE(check_identity_stirling_split(MultiIndex(a), d).holds);
}

TEST(IdentityTest, StirlingSplitIndependentEvaluation) {
    // S(d,k) = (alpha!/k!) sum_{beta in I(n,d)} d!/beta! prod S(beta_i, alpha_i), with
    // Stirling numbers counted by set-partition enumeration.
    for (std::size_t n = 1; n <= 3; ++n)
        for (unsigned k = 0; k <= 3; ++k)
            for (const auto& a : oracle::compositions(n, k))
                for (unsigned d = k + 1; d <= 6; ++d) {
                    Rational sum = 0;
                    for (const auto& b : oracle::compositions(n, d)) {
                        Integer term = oracle::fact(d);
                        for (std::size_t i = 0; i < n; ++i)
                            term = term / oracle::fact(b[i]) * Integer(oracle::set_partitions(b[i], a[i]));
                        sum = sum + Rational(term);
                    }
                    Integer afact = 1;
                    for (unsigned ai : a) afact *= oracle::fact(ai);
                    EXPECT_EQ(Rational(afact, oracle::fact(k)) * sum, Rational(Integer(oracle::set_partitions(d, k))));
                }
}
