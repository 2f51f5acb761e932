#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "symcalc/alphabet.hpp"
#include "test_util.hpp"

using namespace symcalc;

namespace {

SymExpr<Rational> random_expr(std::mt19937& rng, int max_degree, bool constant_term) {
    SymExpr<Rational> f(Basis::p);
    for (const auto& lam : partitions_up_to(max_degree)) {
        if (lam.empty() && !constant_term) continue;
        if (rng() % 3 == 0) f.add_term(lam, Rational(static_cast<int>(rng() % 5) - 2, 1 + static_cast<int>(rng() % 2)));
    }
    return f;
}

SymExpr<Rational> one() { return SymExpr<Rational>::constant(1); }

}  // namespace

TEST(Plethysm, Examples) {
    EXPECT_EQ(outer_plethysm(p(Partition{2}), p(Partition{3})), p(Partition{6}));
    std::mt19937 rng(1);
    for (int i = 0; i < 5; ++i) {
        auto f = random_expr(rng, 4, true);
        EXPECT_EQ(outer_plethysm(f, p(Partition{1})), f);
    }
    EXPECT_EQ(outer_plethysm(h(Partition{2}), h(Partition{2})), convert(s(Partition{4}) + s(Partition{2, 2}), Basis::h));
}

// e2 o e2 in four variables: e2 applied to the six products x_i x_j.
TEST(Plethysm, E2OfE2MatchesFourVariableExpansion) {
    std::vector<oracle::Poly4> letters;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) letters.push_back(oracle::mul(oracle::variable(i), oracle::variable(j)));
    auto brute = oracle::e2_of(letters);
    auto f = convert(outer_plethysm(e(Partition{2}), e(Partition{2})), Basis::m);
    for (const auto& lam : partitions_of(4)) {
        std::array<int, 4> exps{};
        for (int i = 0; i < lam.length(); ++i) exps[i] = lam[i];
        Integer expected = brute.count(exps) ? brute.at(exps) : Integer(0);
        EXPECT_EQ(f.coeff(lam), Rational(expected)) << to_string(lam);
    }
    auto fs = convert(outer_plethysm(e(Partition{2}), e(Partition{2})), Basis::s);
    EXPECT_EQ(fs.coeff(Partition{2, 1, 1}), 1);
    EXPECT_EQ(fs, s(Partition{2, 1, 1}));
}

TEST(Plethysm, Associative) {
    std::mt19937 rng(2);
    for (int trial = 0; trial < 10; ++trial) {
        auto f = random_expr(rng, 2, true), g = random_expr(rng, 2, false), k = random_expr(rng, 2, false);
        EXPECT_EQ(to_p(outer_plethysm(outer_plethysm(f, g), k)), to_p(outer_plethysm(f, outer_plethysm(g, k))));
    }
}

TEST(Plethysm, ParametersAreRaised) {
    auto t = ParamPoly::var("t");
    auto g = sym<ParamPoly>(Basis::p, Partition{1}, t);
    auto r = outer_plethysm(lift(p(Partition{2})), g);
    EXPECT_EQ(r, sym<ParamPoly>(Basis::p, Partition{2}, ParamPoly::var("t", 2)));
}

TEST(Shift, Examples) {
    EXPECT_EQ(in_s(shift_alphabet(s(Partition{1}), Rational(-1))), s(Partition{1}) - SymExpr<Rational>::constant(1, Basis::s));
    auto expected = e(Partition{2}) - e(Partition{1}) + SymExpr<Rational>::constant(1, Basis::e);
    EXPECT_EQ(convert(shift_alphabet(e(Partition{2}), Rational(-1)), Basis::e), expected);
}

TEST(Shift, PlusAndMinusOneAreInverse) {
    for (const auto& lam : partitions_up_to(7)) {
        auto f = s(lam);
        EXPECT_EQ(in_s(shift_alphabet(shift_alphabet(f, Rational(1)), Rational(-1))), f);
    }
}

TEST(Scale, HnOfOneMinusXTimesX) {
    auto got = scale_alphabet(lift(h(Partition{3})), ScaleMode::times_one_minus_q, 3, "x");
    SymExpr<ParamPoly> expected(Basis::s);
    for (int k = 0; k <= 3; ++k) {
        auto term = lift(h(k == 3 ? Partition{} : Partition{3 - k}) * e(k == 0 ? Partition{} : Partition{k}));
        expected = expected + term * (ParamPoly::var("x", k) * Rational(k % 2 ? -1 : 1));
    }
    EXPECT_EQ(convert(got, Basis::s), convert(expected, Basis::s));
}

TEST(Scale, DividedByOneMinusXGivesHooks) {
    auto got = scale_alphabet(lift(h(Partition{3})), ScaleMode::times_one_minus_q, 3, "x");
    ParamPoly geometric;
    geometric.set_cap("x", 3);
    for (int j = 0; j <= 3; ++j) geometric += ParamPoly::var("x", j);
    auto divided = convert(got * geometric, Basis::s);
    SymExpr<ParamPoly> hooks(Basis::s);
    hooks.add_term(Partition{3}, ParamPoly(1));
    hooks.add_term(Partition{2, 1}, -ParamPoly::var("x"));
    hooks.add_term(Partition{1, 1, 1}, ParamPoly::var("x", 2));
    EXPECT_EQ(divided, hooks);
}

TEST(Scale, AtQZeroIsIdentity) {
    for (const auto& lam : partitions_up_to(4)) {
        auto got = scale_alphabet(lift(s(lam)), ScaleMode::times_one_minus_q, 4);
        auto at0 = got.map_coefficients([](const ParamPoly& c) { return c.substitute("q", Rational(0)).constant_term(); });
        EXPECT_EQ(in_s(at0), s(lam));
    }
}

TEST(Series, Examples) {
    auto sig = sigma_series(SeriesKind::sigma, 1, 2);
    EXPECT_EQ(sig.cap, 2);
    EXPECT_EQ(sig.expr, one().relabeled(Basis::h) + h(Partition{1}) + h(Partition{2}));
    auto lam = sigma_series(SeriesKind::lambda, -1, 2);
    EXPECT_EQ(lam.expr, SymExpr<Rational>::constant(1, Basis::e) - e(Partition{1}) + e(Partition{2}));
    auto prod = multiply(sigma_series(SeriesKind::sigma, 1, 6).expr, sigma_series(SeriesKind::lambda, -1, 6).expr, 6);
    EXPECT_EQ(to_p(prod), one());
}

TEST(Series, TruncatedSeriesCapShrinks) {
    auto a = sigma_series(SeriesKind::sigma, 1, 5), b = sigma_series(SeriesKind::sigma, 1, 3);
    auto c = a * b;
    EXPECT_EQ(c.cap, 3);
    EXPECT_LE(c.expr.degree(), 3);
}

TEST(Lie, Examples) {
    EXPECT_EQ(lie_character(1), p(Partition{1}));
    SymExpr<Rational> l2(Basis::p);
    l2.add_term(Partition{1, 1}, Rational(1, 2));
    l2.add_term(Partition{2}, Rational(-1, 2));
    EXPECT_EQ(to_p(lie_character(2)), l2);
}

TEST(Lie, PoincareBirkhoffWitt) {
    for (int cap = 1; cap <= 6; ++cap) {
        SymExpr<Rational> L(Basis::p);
        for (int n = 1; n <= cap; ++n) L += to_p(lie_character(n));
        auto lhs = to_p(outer_plethysm(sigma_series(SeriesKind::sigma, 1, cap).expr, L, cap));
        SymExpr<Rational> geometric(Basis::p);
        for (int k = 0; k <= cap; ++k) geometric.add_term(Partition(std::vector<int>(k, 1)), 1);
        EXPECT_EQ(lhs, geometric) << cap;
    }
}

TEST(InvertSigma, DefiningIdentity) {
    for (int cap = 1; cap <= 7; ++cap) {
        auto M = invert_sigma(cap);
        auto lhs = to_p(outer_plethysm(sigma_series(SeriesKind::sigma, 1, cap).expr, M.expr, cap));
        EXPECT_EQ(lhs, one() + p(Partition{1})) << cap;
    }
}

TEST(InvertSigma, LowDegreeComponents) {
    auto M = invert_sigma(4).expr;
    EXPECT_EQ(in_s(M.component(1)), s(Partition{1}));
    EXPECT_EQ(in_s(M.component(2)), -s(Partition{2}));
    // |M_2| is l_2 evaluated at -X up to sign: l_2(-X) = (p_1^2 + p_2)/2 = h_2
    SymExpr<Rational> l2neg(Basis::p);
    for (const auto& [mu, c] : to_p(lie_character(2)).terms()) l2neg.add_term(mu, mu.length() % 2 ? -c : c);
    EXPECT_EQ(in_s(l2neg), s(Partition{2}));
    EXPECT_EQ(in_s(M.component(3)), s(Partition{2, 1}));
}

TEST(Series, SigmaPlethysmStabilises) {
    auto f = s(Partition{2, 1});
    for (int cap = 3; cap <= 5; ++cap) {
        auto a = outer_plethysm(f, sigma_series(SeriesKind::sigma, 1, cap)).expr.truncated(cap - 3);
        auto b = outer_plethysm(f, sigma_series(SeriesKind::sigma, 1, cap + 2)).expr.truncated(cap - 3);
        EXPECT_EQ(to_p(a), to_p(b));
    }
}

TEST(BinomialProduct, Examples) {
    auto t = ParamPoly::var("t");
    std::vector<ParamPoly> zeros(4);
    EXPECT_EQ(to_p(binomial_exp_product(zeros, 4).expr), lift(one()));
    auto single = binomial_exp_product({t}, 3).expr;
    EXPECT_EQ(to_p(single).coeff(Partition{1, 1}), (t * t - t) * Rational(1, 2));
}

TEST(BinomialProduct, SigmaTOfInverseSeries) {
    // prod (1+p_i)^{l_i(t)} equals sigma_t[M] with M = invert_sigma
    auto t = ParamPoly::var("t");
    auto ell = [&](int i) {
        ParamPoly out;
        for (int d = 1; d <= i; ++d)
            if (i % d == 0 && mobius(d) != 0) out += ParamPoly::var("t", i / d) * Rational(mobius(d), i);
        return out;
    };
    std::vector<ParamPoly> exps = {ell(1), ell(2), ell(3), ell(4)};
    auto lhs = to_p(binomial_exp_product(exps, 4).expr);
    // sigma_t = sum_n h_n[tX]; plethysm into M raises t under p_k
    SymExpr<ParamPoly> sigma_t(Basis::h);
    for (int n = 0; n <= 4; ++n) sigma_t.add_term(n ? Partition{n} : Partition{}, ParamPoly(1));
    auto tX = sym<ParamPoly>(Basis::p, Partition{1}, t);
    auto rhs = to_p(outer_plethysm(outer_plethysm(sigma_t, tX, 4), lift(invert_sigma(4).expr), 4));
    EXPECT_EQ(lhs, rhs);
}
