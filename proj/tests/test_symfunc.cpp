#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "test_util.hpp"
#include "symcalc/symfunc.hpp"

using namespace symcalc;

namespace {

const Basis all_bases[] = {Basis::m, Basis::e, Basis::h, Basis::p, Basis::s};

SymExpr<Rational> random_homogeneous(std::mt19937& rng, int n, Basis b) {
    SymExpr<Rational> f(b);
    for (const auto& lam : partitions_of(n))
        if (rng() % 2) f.add_term(lam, Rational(static_cast<int>(rng() % 7) - 3));
    return f;
}

}  // namespace

TEST(Convert, Examples) {
    auto h2 = convert(h(Partition{2}), Basis::p);
    SymExpr<Rational> expected(Basis::p);
    expected.add_term(Partition{1, 1}, Rational(1, 2));
    expected.add_term(Partition{2}, Rational(1, 2));
    EXPECT_EQ(h2, expected);

    SymExpr<Rational> s21(Basis::p);
    s21.add_term(Partition{1, 1, 1}, Rational(1, 3));
    s21.add_term(Partition{3}, Rational(-1, 3));
    EXPECT_EQ(convert(s(Partition{2, 1}), Basis::p), s21);

    EXPECT_EQ(convert(p(Partition{2}), Basis::m), m(Partition{2}));
}

TEST(Convert, RoundTripsAllBasisPairs) {
    for (int n = 0; n <= 7; ++n)
        for (const auto& lam : partitions_of(n))
            for (Basis a : all_bases)
                for (Basis b : all_bases) {
                    auto f = sym(a, lam);
                    EXPECT_EQ(convert(convert(f, b), a), f) << basis_letter(a) << basis_letter(b) << to_string(lam);
                }
}

TEST(Convert, SchurToMonomialIsKostka) {
    for (int n = 1; n <= 6; ++n)
        for (const auto& lam : partitions_of(n)) {
            auto f = convert(s(lam), Basis::m);
            for (const auto& mu : partitions_of(n)) EXPECT_EQ(f.coeff(mu), Rational(oracle::kostka(lam, mu)));
        }
}

TEST(Convert, PowerSumToMonomial) {
    for (int n = 1; n <= 6; ++n)
        for (const auto& mu : partitions_of(n)) {
            auto f = convert(p(mu), Basis::m);
            for (const auto& lam : partitions_of(n))
                EXPECT_EQ(f.coeff(lam), Rational(oracle::power_sum_monomial(mu, lam)));
        }
}

TEST(Multiply, Examples) {
    EXPECT_EQ(h(Partition{1}) * h(Partition{1}), h(Partition{1, 1}));
    EXPECT_EQ(s(Partition{1}) * s(Partition{1}), s(Partition{2}) + s(Partition{1, 1}));
    EXPECT_EQ(p(Partition{2}) * p(Partition{3}), p(Partition{3, 2}));
    EXPECT_EQ((s(Partition{1}) * h(Partition{1})).basis(), Basis::s);
}

TEST(Multiply, SchurProductsMatchLittlewoodRichardsonTableaux) {
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (const auto& mu : partitions_of(a))
                for (const auto& nu : partitions_of(b)) {
                    auto f = s(mu) * s(nu);
                    for (const auto& lam : partitions_of(a + b))
                        EXPECT_EQ(f.coeff(lam), Rational(oracle::lr(mu, nu, lam)));
                }
}

TEST(Scalar, Examples) {
    EXPECT_EQ(scalar(p(Partition{2, 1}), p(Partition{2, 1})), 2);
    EXPECT_EQ(scalar(s(Partition{3, 1}), s(Partition{3, 1})), 1);
    EXPECT_EQ(scalar(s(Partition{3, 1}), s(Partition{2, 2})), 0);
    EXPECT_EQ(scalar(h(Partition{2, 1}), m(Partition{2, 1})), 1);
}

TEST(Scalar, Orthogonality) {
    auto parts = partitions_up_to(7);
    for (const auto& lam : parts)
        for (const auto& mu : parts) {
            Rational delta = lam == mu ? 1 : 0;
            EXPECT_EQ(scalar(s(lam), s(mu)), delta);
            EXPECT_EQ(scalar(h(lam), m(mu)), delta);
            EXPECT_EQ(scalar(p(lam), p(mu)), lam == mu ? Rational(z_value(lam)) : Rational(0));
        }
}

TEST(Internal, KroneckerSquareOfS41) {
    auto expected = s(Partition{5}) + s(Partition{4, 1}) + s(Partition{3, 2}) + s(Partition{3, 1, 1});
    EXPECT_EQ(internal(s(Partition{4, 1}), s(Partition{4, 1})), expected);
}

TEST(Internal, Examples) {
    EXPECT_EQ(internal(p(Partition{2, 1}), p(Partition{2, 1})), p(Partition{2, 1}) * Rational(2));
    std::mt19937 rng(3);
    auto f = random_homogeneous(rng, 5, Basis::s);
    EXPECT_EQ(in_s(internal(h(Partition{5}), f)), f);
    // degrees that differ annihilate
    EXPECT_TRUE(internal(s(Partition{2}), s(Partition{3})).is_zero());
}

TEST(Internal, CommutativeAssociativeWithUnit) {
    std::mt19937 rng(5);
    for (int n = 1; n <= 6; ++n)
        for (int trial = 0; trial < 3; ++trial) {
            auto f = random_homogeneous(rng, n, Basis::s), g = random_homogeneous(rng, n, Basis::h),
                 k = random_homogeneous(rng, n, Basis::e);
            EXPECT_EQ(in_s(internal(f, g)), in_s(internal(g, f)));
            EXPECT_EQ(convert(internal(internal(f, g), k), Basis::s), convert(internal(f, internal(g, k)), Basis::s));
            EXPECT_EQ(in_s(internal(h(Partition{n}), f)), f);
        }
}

TEST(Foulkes, Examples) {
    EXPECT_EQ(foulkes_derivative(p(Partition{1}), p(Partition{1, 1})), p(Partition{1}) * Rational(2));
    EXPECT_EQ(foulkes_derivative(e(Partition{1}), s(Partition{2, 1})), s(Partition{2}) + s(Partition{1, 1}));
    EXPECT_EQ(convert(foulkes_derivative(h(Partition{2}), h(Partition{2})), Basis::p),
              SymExpr<Rational>::constant(1));
}

TEST(Foulkes, AdjointToMultiplication) {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        int a = 1 + rng() % 3, b = 1 + rng() % 3;
        auto f = random_homogeneous(rng, a, all_bases[rng() % 5]);
        auto g = random_homogeneous(rng, b, all_bases[rng() % 5]);
        auto k = random_homogeneous(rng, a + b, all_bases[rng() % 5]);
        EXPECT_EQ(scalar(f * g, k), scalar(g, foulkes_derivative(f, k)));
    }
}

TEST(Characters, Examples) {
    for (const auto& mu : partitions_of(6)) {
        EXPECT_EQ(mn_character(Partition{6}, mu), 1);
        EXPECT_EQ(mn_character(Partition{5, 1}, mu), mu.multiplicity(1) - 1);
    }
    EXPECT_EQ(mn_character(Partition{2, 2}, Partition{2, 2}), 2);
    EXPECT_THROW(mn_character(Partition{2}, Partition{1}), DomainError);
}

TEST(Characters, MatchKostkaInversion) {
    for (int n = 1; n <= 6; ++n)
        for (const auto& lam : partitions_of(n))
            for (const auto& mu : partitions_of(n))
                EXPECT_EQ(mn_character(lam, mu), oracle::character(lam, mu)) << to_string(lam) << to_string(mu);
}

TEST(Characters, RowOrthogonality) {
    for (int n = 1; n <= 7; ++n)
        for (const auto& a : partitions_of(n))
            for (const auto& b : partitions_of(n)) {
                Rational sum = 0;
                for (const auto& mu : partitions_of(n))
                    sum += Rational(mn_character(a, mu) * mn_character(b, mu), z_value(mu));
                EXPECT_EQ(sum, Rational(a == b ? 1 : 0));
            }
}

TEST(LittlewoodRichardson, Examples) {
    EXPECT_EQ(lr_coefficient(Partition{1}, Partition{1, 1}, Partition{2, 1}), 1);
    for (const auto& lam : partitions_up_to(4))
        for (const auto& nu : partitions_up_to(4))
            EXPECT_EQ(lr_coefficient(Partition{}, nu, lam), lam == nu ? 1 : 0);
    EXPECT_EQ(lr_coefficient(Partition{2, 1}, Partition{2, 1, 1}, Partition{4, 2, 1}),
              oracle::lr(Partition{2, 1}, Partition{2, 1, 1}, Partition{4, 2, 1}));
    EXPECT_EQ(lr_coefficient(Partition{2, 1}, Partition{2, 1, 1}, Partition{4, 2, 1}), 1);
}

TEST(LittlewoodRichardson, MatchTableauEnumeration) {
    for (int n = 0; n <= 6; ++n)
        for (const auto& lam : partitions_of(n))
            for (int a = 0; a <= n; ++a)
                for (const auto& mu : partitions_of(a))
                    for (const auto& nu : partitions_of(n - a))
                        EXPECT_EQ(lr_coefficient(mu, nu, lam), oracle::lr(mu, nu, lam))
                            << to_string(mu) << to_string(nu) << to_string(lam);
}

TEST(SkewSchur, Examples) {
    for (const auto& lam : partitions_up_to(4)) EXPECT_EQ(skew_schur(lam, Partition{}), s(lam));
    EXPECT_EQ(skew_schur(Partition{2, 1}, Partition{1}), foulkes_derivative(s(Partition{1}), s(Partition{2, 1})));
    EXPECT_EQ(skew_schur(Partition{2, 1}, Partition{1}), s(Partition{2}) + s(Partition{1, 1}));
    SymExpr<Rational> expected(Basis::s);
    for (const auto& nu : partitions_of(2))
        expected.add_term(nu, Rational(oracle::lr(Partition{1, 1}, nu, Partition{2, 2})));
    EXPECT_EQ(skew_schur(Partition{2, 2}, Partition{1, 1}), expected);
    EXPECT_TRUE(skew_schur(Partition{2}, Partition{1, 1}).is_zero());
}

TEST(SymExpr, BasisMismatchIsRejected) {
    auto f = s(Partition{1});
    EXPECT_THROW(f += h(Partition{1}), DomainError);
    EXPECT_EQ((s(Partition{1}) + h(Partition{1})).basis(), Basis::s);
}
