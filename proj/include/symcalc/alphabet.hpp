#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "param_poly.hpp"
#include "symfunc.hpp"

namespace symcalc {

/// An inhomogeneous expansion known exactly through degree `cap`.
template <Coefficient C = Rational>
struct TruncatedSeries {
    SymExpr<C> expr;
    int cap = 0;

    TruncatedSeries() = default;
    TruncatedSeries(SymExpr<C> e, int c) : expr(e.truncated(c)), cap(c) {
        if (c < 0) throw DomainError("series cap must be nonnegative");
    }

    SymExpr<C> component(int n) const {
        if (n > cap) throw TruncationError("degree " + std::to_string(n) + " beyond series cap " + std::to_string(cap));
        return expr.component(n);
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        int c = std::min(a.cap, b.cap);
        return {(a.expr + b.expr).truncated(c), c};
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        int c = std::min(a.cap, b.cap);
        return {(a.expr - b.expr).truncated(c), c};
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        int c = std::min(a.cap, b.cap);
        return {multiply(a.expr, b.expr, c), c};
    }
};

/// p_k o g: p_nu -> p_{k nu}, coefficients under the Frobenius action.
template <Coefficient C>
SymExpr<C> adams_outer(const SymExpr<C>& g, int k, std::optional<int> cap = std::nullopt) {
    if (k < 1) throw DomainError("p_k plethysm needs k >= 1");
    SymExpr<C> out(Basis::p);
    const auto gp = to_p(g);
    for (const auto& [nu, c] : gp.terms()) {
        if (cap && k * nu.size() > *cap) continue;
        out.add_term(scale_parts(nu, k), frobenius(c, k));
    }
    return out;
}

/// f o g, truncated at cap when given; the result is in the basis of f.
template <Coefficient C>
SymExpr<C> outer_plethysm(const SymExpr<C>& f, const SymExpr<C>& g, std::optional<int> cap = std::nullopt) {
    std::map<int, SymExpr<C>> pk;
    std::map<Partition, SymExpr<C>> prefix;  // p_{mu} o g for the parts seen so far
    prefix.emplace(Partition{}, SymExpr<C>::constant(C(Rational(1))));
    auto plet_p = [&](const Partition& mu) -> const SymExpr<C>& {
        std::vector<int> parts;
        const SymExpr<C>* cur = &prefix.at(Partition{});
        for (int k : mu) {
            parts.push_back(k);
            Partition key(parts);
            auto it = prefix.find(key);
            if (it == prefix.end()) {
                auto pit = pk.find(k);
                if (pit == pk.end()) pit = pk.emplace(k, adams_outer(g, k, cap)).first;
                it = prefix.emplace(key, multiply(*cur, pit->second, cap)).first;
            }
            cur = &it->second;
        }
        return *cur;
    };
    SymExpr<C> out(Basis::p);
    const auto fp = to_p(f);
    for (const auto& [mu, c] : fp.terms()) {
        SymExpr<C> term = plet_p(mu);
        term *= c;
        out += term;
    }
    return convert(out, f.basis());
}

template <Coefficient C>
TruncatedSeries<C> outer_plethysm(const SymExpr<C>& f, const TruncatedSeries<C>& g) {
    return {outer_plethysm(f, g.expr, g.cap), g.cap};
}

/// f(X + c): p_k -> p_k + c.
template <Coefficient C>
SymExpr<C> shift_alphabet(const SymExpr<C>& f, const Rational& c) {
    auto x_plus_c = p<C>(Partition{1}) + SymExpr<C>::constant(C(c));
    return outer_plethysm(f, x_plus_c);
}

enum class ScaleMode { times_one_minus_q, over_one_minus_q };

/// f[(1-q)X] or f[X/(1-q)] with the q-series truncated at degree qcap.
inline SymExpr<ParamPoly> scale_alphabet(const SymExpr<ParamPoly>& f, ScaleMode mode, int qcap,
                                         const std::string& q = "q") {
    if (qcap < 0) throw DomainError("qcap must be nonnegative");
    ParamPoly factor;
    factor.set_cap(q, qcap);
    if (mode == ScaleMode::times_one_minus_q) {
        factor += ParamPoly(1);
        factor -= ParamPoly::var(q);
    } else {
        for (int j = 0; j <= qcap; ++j) factor += ParamPoly::var(q, j);
    }
    auto alphabet = sym<ParamPoly>(Basis::p, Partition{1}, factor);
    return outer_plethysm(f, alphabet);
}

enum class SeriesKind { sigma, lambda };

/// sum_r h_r (sigma) or sum_r sign^r e_r (lambda), through degree cap.
template <Coefficient C = Rational>
TruncatedSeries<C> sigma_series(SeriesKind kind, int sign, int cap) {
    if (cap < 0) throw DomainError("series cap must be nonnegative");
    Basis b = kind == SeriesKind::sigma ? Basis::h : Basis::e;
    SymExpr<C> out(b);
    for (int r = 0; r <= cap; ++r) {
        int coeff = (kind == SeriesKind::lambda && sign < 0 && r % 2) ? -1 : 1;
        out.add_term(r == 0 ? Partition{} : Partition{r}, C(Rational(coeff)));
    }
    return {out, cap};
}

inline int mobius(int n) {
    int result = 1;
    for (int d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        n /= d;
        if (n % d == 0) return 0;
        result = -result;
    }
    return n > 1 ? -result : result;
}

/// ell_n = (1/n) sum_{d|n} mobius(d) p_d^{n/d}.
template <Coefficient C = Rational>
SymExpr<C> lie_character(int n) {
    if (n < 1) throw DomainError("lie_character needs n >= 1");
    SymExpr<C> out(Basis::p);
    for (int d = 1; d <= n; ++d) {
        if (n % d || mobius(d) == 0) continue;
        out.add_term(Partition(std::vector<int>(n / d, d)), C(Rational(mobius(d), n)));
    }
    return out;
}

/// The series M with sigma_1 o M = 1 + p_1 through degree cap, built degree by
/// degree: the degree-d part of sigma_1 o (M_{<d} + M_d) is that of
/// sigma_1 o M_{<d} plus M_d.
template <Coefficient C = Rational>
TruncatedSeries<C> invert_sigma(int cap) {
    if (cap < 1) throw DomainError("invert_sigma needs cap >= 1");
    SymExpr<C> M = p<C>(Partition{1});
    auto sigma = sigma_series<C>(SeriesKind::sigma, 1, cap).expr;
    for (int d = 2; d <= cap; ++d) {
        auto composed = outer_plethysm(sigma.truncated(d), M, d);
        M -= to_p(composed).component(d);
    }
    return {M, cap};
}

/// prod_{i>=1} (1 + p_i)^{exponents[i-1]}, through X-degree cap.
inline TruncatedSeries<ParamPoly> binomial_exp_product(const std::vector<ParamPoly>& exponents, int cap) {
    if (cap < 0) throw DomainError("series cap must be nonnegative");
    auto result = SymExpr<ParamPoly>::constant(ParamPoly(1));
    for (std::size_t idx = 0; idx < exponents.size(); ++idx) {
        const int i = static_cast<int>(idx) + 1;
        if (i > cap || exponents[idx].is_zero()) continue;
        SymExpr<ParamPoly> factor(Basis::p);
        for (int k = 0; k * i <= cap; ++k)
            factor.add_term(Partition(std::vector<int>(k, i)), binomial_series_coeff(exponents[idx], k));
        result = multiply(result, factor, cap);
    }
    return {result, cap};
}

}  // namespace symcalc
