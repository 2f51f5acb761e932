#include <gtest/gtest.h>

#include "oracles.hpp"
#include "symcalc/applications.hpp"
#include "test_util.hpp"

using namespace symcalc;

namespace {

ParamPoly t(int i, int exp = 1) { return ParamPoly::var(weight_param(i), exp); }
ParamPoly tv(int exp = 1) { return ParamPoly::var("t", exp); }

SymExpr<ParamPoly> ps(const Partition& lam, const ParamPoly& c) {
    SymExpr<ParamPoly> out(Basis::s);
    out.add_term(lam, c);
    return out;
}

SymExpr<ParamPoly> ph(const Partition& lam, const ParamPoly& c) {
    SymExpr<ParamPoly> out(Basis::h);
    out.add_term(lam, c);
    return out;
}

SymExpr<Rational> at_all_ones(const SymExpr<ParamPoly>& f) {
    SymExpr<Rational> out(f.basis());
    for (const auto& [lam, c] : f.terms()) {
        std::map<std::string, Rational> ones;
        for (const auto& name : c.params()) ones[name] = 1;
        out.add_term(lam, c.evaluate(ones));
    }
    return out;
}

SymExpr<ParamPoly> with_t0_one(const SymExpr<ParamPoly>& f) {
    SymExpr<ParamPoly> out(f.basis());
    for (const auto& [lam, c] : f.terms()) out.add_term(lam, c.substitute(weight_param(0), Rational(1)));
    return out;
}

}  // namespace

TEST(Gay, ZeroWeightOfV321) {
    EXPECT_EQ(gay_restriction(Partition{3, 2, 1}, 2), s(Partition{2, 1}));
}

TEST(Gay, ZeroWeightOfS321) {
    EXPECT_EQ(gay_restriction(Partition{3, 2, 1}, 2, Basis::h), h(Partition{2, 1}) + h(Partition{1, 1, 1}) * Rational(2));
    // h-coefficients 1, 2, 0 come from m_mu[h_2]; the s_mu[h_2] pairings are the Schur coefficients
    const auto h2 = h(Partition{2});
    const Partition l321{3, 2, 1};
    EXPECT_EQ(scalar(h(l321), outer_plethysm(m(Partition{2, 1}), h2)), Rational(1));
    EXPECT_EQ(scalar(h(l321), outer_plethysm(m(Partition{1, 1, 1}), h2)), Rational(2));
    EXPECT_EQ(scalar(h(l321), outer_plethysm(m(Partition{3}), h2)), Rational(0));
    const auto in_schur = in_s(h(Partition{2, 1}) + h(Partition{1, 1, 1}) * Rational(2));
    for (const auto& mu : partitions_of(3))
        EXPECT_EQ(scalar(h(l321), outer_plethysm(s(mu), h2)), in_schur.coeff(mu)) << to_string(mu);
}

TEST(Gay, FirstPlethysmIsIdentity) {
    for (const auto& lam : partitions_up_to(5)) EXPECT_EQ(gay_restriction(lam, 1), s(lam));
    EXPECT_THROW(gay_restriction(Partition{2}, 0), DomainError);
}

TEST(Gay, IndivisibleSizeGivesZero) {
    EXPECT_TRUE(gay_restriction(Partition{2, 1}, 2).is_zero());
}

TEST(WeightOrbits, V321OfGL3) {
    auto expected = ps({1, 1, 1}, t(1) * t(2) * t(3)) + ps({2, 1}, t(2, 3) + t(1) * t(2) * t(3) * Rational(2)) +
                    ps({3}, t(1) * t(2) * t(3));
    EXPECT_EQ(weight_orbit_decomposition(Basis::s, Partition{3, 2, 1}, 3, 6), expected);
}

TEST(WeightOrbits, S321OfC3) {
    auto c111 = t(2, 3) * Rational(2) + t(1) * t(2) * t(3) * Rational(12) + t(0) * t(3, 2) * Rational(3) +
                t(1, 2) * t(4) * Rational(3) + t(0) * t(2) * t(4) * Rational(5) + t(0) * t(1) * t(5) * Rational(3);
    auto c21 = t(2, 3) + t(1, 2) * t(4) * Rational(2) + t(0, 2) * t(6);
    EXPECT_EQ(weight_orbit_decomposition(Basis::h, Partition{3, 2, 1}, 3, 6), ph({1, 1, 1}, c111) + ph({2, 1}, c21));
}

TEST(WeightOrbits, StableExamples) {
    auto t21 = t(2) * t(1), t111 = t(1, 3);
    auto expect = [](const SymExpr<ParamPoly>& f) { return StableChar<ParamPoly>(f); };
    EXPECT_EQ(stable_weight_decomposition(Partition{1, 1, 1}),
              expect(ph({1}, t(3)) + ph({1, 1}, t21 * Rational(3)) + ph({1, 1, 1}, t111)));
    EXPECT_EQ(stable_weight_decomposition(Partition{2, 1}),
              expect(ph({1}, t(3)) + ph({1, 1}, t21 * Rational(2)) + ph({2, 1}, t111)));
    // the weight-(3) orbit is the n points, so <<1>>
    EXPECT_EQ(stable_weight_decomposition(Partition{3}), expect(ph({1}, t(3)) + ph({1, 1}, t21) + ph({3}, t111)));
}

TEST(WeightOrbits, StableFormEvaluatesToFiniteOne) {
    for (const auto& lam : partitions_up_to(3)) {
        if (lam.empty()) continue;
        auto st = stable_weight_decomposition(lam);
        for (int n = 2 * lam.size(); n <= 2 * lam.size() + 1; ++n) {
            auto finite = with_t0_one(weight_orbit_decomposition(Basis::h, lam, n, lam.size()));
            EXPECT_EQ(convert(evaluate_at_n(st, n), Basis::h), finite) << to_string(lam) << " n=" << n;
        }
    }
}

TEST(WeightOrbits, AllOnesGivesLittlewoodBranching) {
    for (const auto& lam : partitions_up_to(6)) {
        if (lam.empty()) continue;
        for (int n = 1; n <= 4; ++n) {
            auto total = at_all_ones(weight_orbit_decomposition(Basis::s, lam, n, lam.size()));
            SymExpr<Rational> branching(Basis::s);
            for (const auto& mu : partitions_of(n))
                branching.add_term(mu, scalar(inner_plethysm(s(lam), perm_char(n)), s(mu)));
            EXPECT_EQ(total, branching) << to_string(lam) << " n=" << n;
        }
    }
}

TEST(Endofunctions, Examples) {
    EXPECT_EQ(endofunction_signature(1), t(1));
    EXPECT_EQ(endofunction_signature(3), t(1, 3) * Rational(3) + t(2) * t(1) * Rational(3) + t(3));
    EXPECT_EQ(endofunction_signature(4), t(1, 4) * Rational(5) + t(2) * t(1, 2) * Rational(7) + t(2, 2) * Rational(3) +
                                             t(3) * t(1) * Rational(3) + t(4));
    EXPECT_THROW(endofunction_signature(0), DomainError);
}

TEST(Endofunctions, TotalsMatchBurnside) {
    for (int n = 1; n <= 5; ++n) {
        auto sig = endofunction_signature(n);
        Rational total = 0;
        for (const auto& [m, c] : sig.terms()) total += c;
        EXPECT_EQ(total, Rational(oracle::endofunction_orbits(n))) << n;
    }
    EXPECT_EQ(oracle::endofunction_orbits(3), 7);
    EXPECT_EQ(oracle::endofunction_orbits(4), 19);
}

TEST(Braid, SmallCases) {
    EXPECT_EQ(braid_poincare(1), ps({1}, ParamPoly(1)));
    EXPECT_EQ(braid_poincare(2), ps({2}, ParamPoly(1) + tv()));
    EXPECT_EQ(braid_poincare(3), ps({3}, ParamPoly(1) + tv()) + ps({2, 1}, tv() + tv(2)));
    auto p4 = ps({4}, ParamPoly(1) + tv()) + ps({3, 1}, tv() + tv(2) * Rational(2) + tv(3)) +
              ps({2, 2}, tv() + tv(2)) + ps({2, 1, 1}, tv(2) + tv(3));
    EXPECT_EQ(braid_poincare(4), p4);
}

TEST(Braid, EulerCharacteristicVanishes) {
    for (int n = 2; n <= 6; ++n) {
        auto f = braid_poincare(n);
        for (const auto& [lam, c] : f.terms()) EXPECT_TRUE(c.substitute("t", Rational(-1)).is_zero()) << n;
    }
}

TEST(Braid, TotalDimensionIsFactorial) {
    // H^*(P_n) has Poincare polynomial prod_{k<n} (1 + k t), so total rank n!
    for (int n = 1; n <= 6; ++n) {
        auto f = braid_poincare(n);
        for (int i = 0; i < n; ++i) {
            Rational dim = 0;
            for (const auto& [lam, c] : param_coefficient(f, "t", i).terms()) dim += c * Rational(oracle::character(lam, Partition(std::vector<int>(n, 1))));
            std::vector<Integer> poly = {1};
            for (int k = 1; k < n; ++k) {
                std::vector<Integer> next(poly.size() + 1, 0);
                for (std::size_t j = 0; j < poly.size(); ++j) {
                    next[j] += poly[j];
                    next[j + 1] += poly[j] * k;
                }
                poly = next;
            }
            EXPECT_EQ(dim, Rational(poly[i])) << n << " " << i;
        }
    }
}

TEST(Braid, SchurPositive) {
    for (int n = 1; n <= 6; ++n)
        for (const auto& [lam, c] : braid_poincare(n).terms())
            for (const auto& [m, r] : c.terms()) EXPECT_GT(r, 0) << n << to_string(lam);
}

TEST(Braid, StableClasses) {
    EXPECT_EQ(stable_cohomology(0), StableChar<Rational>(SymExpr<Rational>::constant(1, Basis::s)));
    EXPECT_EQ(stable_cohomology(1), StableChar<Rational>(s(Partition{2})));
    EXPECT_EQ(stable_cohomology(2), StableChar<Rational>(s(Partition{2, 1}) + s(Partition{3, 1})));
    EXPECT_EQ(evaluate_at_n(stable_cohomology(2), 4), param_coefficient(braid_poincare(4), "t", 2));
    EXPECT_THROW(stable_cohomology(2, 3), TruncationError);
}

TEST(Braid, StableClassesEvaluateToEveryN) {
    for (int i = 0; i <= 3; ++i) {
        auto st = stable_cohomology(i);
        for (int n = std::max(1, i + 1); n <= 7; ++n)
            EXPECT_EQ(evaluate_at_n(st, n), param_coefficient(braid_poincare(n), "t", i)) << i << " n=" << n;
    }
}

TEST(Littlewood, Examples) {
    // <h_3[h_21], m_21> through the pairing <h_3, m_21[sigma_1]>
    EXPECT_EQ(littlewood_pair(h(Partition{3}), m(Partition{2, 1}), 3), Rational(1));
    const auto one = SymExpr<Rational>::constant(1, Basis::s);
    EXPECT_EQ(littlewood_pair(h(Partition{2}), one, 2), Rational(0));
    EXPECT_EQ(littlewood_pair(h(Partition{2}) + one * Rational(5), one, 2), Rational(5));
    EXPECT_THROW(littlewood_pair(h(Partition{3}), h(Partition{1}), 2), DomainError);
}

TEST(Littlewood, DualityWithInnerPlethysm) {
    for (int n = 1; n <= 7; ++n) {
        const auto pc = perm_char(n);
        for (const auto& mu : partitions_up_to(4)) {
            const auto g = h(mu);
            const auto ghat = inner_plethysm(g, pc);
            for (const auto& nu : partitions_of(n)) {
                EXPECT_EQ(scalar(ghat, h(nu)), littlewood_pair(g, h(nu), std::max(1, mu.size())))
                    << to_string(mu) << to_string(nu);
                EXPECT_EQ(scalar(ghat, s(nu)), littlewood_pair(g, s(nu), std::max(1, mu.size())))
                    << to_string(mu) << to_string(nu);
            }
        }
    }
}
