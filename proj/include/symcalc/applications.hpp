#pragma once

#include <string>
#include <vector>

#include "alphabet.hpp"
#include "inner_plethysm.hpp"
#include "stable.hpp"

namespace symcalc {

/// <f, g[sigma_1]> with sigma_1 truncated at cap; equals <f^[sigma_1 h_1], g>.
template <Coefficient C>
C littlewood_pair(const SymExpr<C>& f, const SymExpr<C>& g, int cap) {
    if (!f.is_zero() && cap < f.degree()) throw DomainError("littlewood_pair: cap below the degree of f");
    auto sig = coerce<C>(sigma_series(SeriesKind::sigma, 1, cap).expr);
    return scalar(f, outer_plethysm(g, sig, cap));
}

/// sum_mu <s_lam, s_mu[h_k]> s_mu (Schur input) or sum_mu <h_lam, m_mu[h_k]> h_mu (h input).
inline SymExpr<Rational> gay_restriction(const Partition& lam, int k, Basis input = Basis::s) {
    if (k <= 0) throw DomainError("gay_restriction needs k >= 1");
    if (input != Basis::s && input != Basis::h) throw DomainError("gay_restriction takes an s or h index");
    SymExpr<Rational> out(input);
    if (lam.size() % k) return out;
    const auto hk = h(Partition{k});
    for (const auto& mu : partitions_of(lam.size() / k)) {
        if (input == Basis::s) out.add_term(mu, scalar(s(lam), outer_plethysm(s(mu), hk)));
        else out.add_term(mu, scalar(h(lam), outer_plethysm(m(mu), hk)));
    }
    return out;
}

inline std::string weight_param(int i) { return "t" + std::to_string(i); }

/// t_0 + t_1 h_1 + ... + t_w h_w (t_0 omitted when with_t0 is false).
inline SymExpr<ParamPoly> weight_alphabet(int max_weight, bool with_t0) {
    SymExpr<ParamPoly> a(Basis::h);
    for (int i = with_t0 ? 0 : 1; i <= max_weight; ++i)
        a.add_term(i == 0 ? Partition{} : Partition{i}, ParamPoly::var(weight_param(i)));
    return a;
}

/// sum_{mu |- n} <f, b_mu[t_0 + t_1 h_1 + ...]> b*_mu, where (b, b*) is (s, s) for
/// f = s_lam and (m, h) for f = h_lam. The coefficient of t^nu is the restriction
/// of the orbit sum of weight spaces of type nu.
inline SymExpr<ParamPoly> weight_orbit_decomposition(Basis input, const Partition& lam, int n, int max_weight) {
    if (input != Basis::s && input != Basis::h) throw DomainError("weight_orbit_decomposition takes s or h input");
    if (n < 1) throw DomainError("weight_orbit_decomposition needs n >= 1");
    if (max_weight < 0) throw DomainError("max_weight must be nonnegative");
    const auto alphabet = weight_alphabet(max_weight, true);
    const auto f = lift(input == Basis::s ? s(lam) : h(lam));
    SymExpr<ParamPoly> out(input);
    for (const auto& mu : partitions_of(n)) {
        auto b = lift(input == Basis::s ? s(mu) : m(mu));
        out.add_term(mu, scalar(f, outer_plethysm(b, alphabet, lam.size())));
    }
    return out;
}

/// sum_nu <h_lam, m_nu[t_1 h_1 + t_2 h_2 + ...]> <<nu>>, valid for every n.
inline StableChar<ParamPoly> stable_weight_decomposition(const Partition& lam) {
    const auto alphabet = weight_alphabet(lam.size(), false);
    const auto f = lift(h(lam));
    SymExpr<ParamPoly> out(Basis::h);
    for (const auto& nu : partitions_up_to(lam.size()))
        out.add_term(nu, scalar(f, outer_plethysm(lift(m(nu)), alphabet, lam.size())));
    return StableChar<ParamPoly>(out);
}

/// sum_{lam |- n} <h_lam, m_lam[1 + t_1 h_1 + t_2 h_2 + ...]>; at t_i = 1 this counts endofunction patterns.
inline ParamPoly endofunction_signature(int n) {
    if (n < 1) throw DomainError("endofunction_signature needs n >= 1");
    auto alphabet = weight_alphabet(n, false);
    alphabet.add_term(Partition{}, ParamPoly(1));
    ParamPoly total;
    for (const auto& lam : partitions_of(n))
        total += scalar(lift(h(lam)), outer_plethysm(lift(m(lam)), alphabet, n));
    return total;
}

/// ell_i(t) = (1/i) sum_{d|i} mobius(d) t^{i/d}.
inline ParamPoly necklace_poly(int i, const std::string& t = "t") {
    ParamPoly out;
    for (int d = 1; d <= i; ++d)
        if (i % d == 0 && mobius(d) != 0) out += ParamPoly::var(t, i / d) * Rational(mobius(d), i);
    return out;
}

/// ch_t H^*(P_n) = sum_i t^i ch H^i(P_n), in the Schur basis with coefficients in t.
/// Obtained from the degree-n part F_n of prod_i (1 + p_i)^{ell_i(t)} as (-1)^n t^n F_n(-1/t).
inline SymExpr<ParamPoly> braid_poincare(int n, const std::string& t = "t") {
    if (n < 1) throw DomainError("braid_poincare needs n >= 1");
    std::vector<ParamPoly> exps;
    for (int i = 1; i <= n; ++i) {
        auto e = necklace_poly(i, t);
        e.set_cap(t, n);
        exps.push_back(e);
    }
    auto Fn = convert(binomial_exp_product(exps, n).expr.component(n), Basis::s);
    SymExpr<ParamPoly> out(Basis::s);
    for (const auto& [lam, c] : Fn.terms()) {
        ParamPoly v;
        for (const auto& [mono, r] : c.terms()) {
            int j = mono.exponent(t);
            Rational coeff = ((n + j) % 2) ? -r : r;
            v += ParamPoly::var(t, n - j) * coeff;
        }
        out.add_term(lam, v);
    }
    return out;
}

/// Coefficient of name^k in every coefficient of f.
inline SymExpr<Rational> param_coefficient(const SymExpr<ParamPoly>& f, const std::string& name, int k) {
    SymExpr<Rational> out(f.basis());
    for (const auto& [lam, c] : f.terms()) {
        auto part = c.coefficient(name, k);
        if (!part.is_constant()) throw DomainError("param_coefficient: other parameters remain");
        out.add_term(lam, part.constant_term());
    }
    return out;
}

/// The stable class of H^i(P_n): (-1)^i [t^i] of prod_{k>=2} sum_r (-1)^r t^{(k-1)r} e_r[ell_k(-X)],
/// where ell_k(-X) sends p_j to -p_j. Only k <= 2i contributes to t^i through X-degree 2i.
inline StableChar<Rational> stable_cohomology(int i, std::optional<int> cap = std::nullopt) {
    if (i < 0) throw DomainError("stable_cohomology needs i >= 0");
    const int xcap = cap.value_or(2 * i);
    if (xcap < 2 * i) throw TruncationError("stable_cohomology: cap must be at least 2i");
    const std::string t = "t";
    auto result = SymExpr<ParamPoly>::constant(ParamPoly(1));
    for (int k = 2; k <= 2 * i; ++k) {
        SymExpr<Rational> neg(Basis::p);
        for (const auto& [mu, c] : lie_character(k).terms()) neg.add_term(mu, mu.length() % 2 ? -c : c);
        SymExpr<ParamPoly> factor(Basis::p);
        for (int r = 0; r * (k - 1) <= i && r * k <= xcap; ++r) {
            auto er = to_p(outer_plethysm(r == 0 ? SymExpr<Rational>::constant(1) : e(Partition{r}), neg, xcap));
            ParamPoly w = ParamPoly::var(t, (k - 1) * r) * Rational(r % 2 ? -1 : 1);
            w.set_cap(t, i);
            factor += lift(er) * w;
        }
        result = multiply(result, factor, xcap);
    }
    auto coeff = param_coefficient(convert(result, Basis::s), t, i);
    if (i % 2) coeff *= Rational(-1);
    return StableChar<Rational>(coeff);
}

}  // namespace symcalc
