#pragma once

#include <optional>
#include <utility>

#include "partition.hpp"
#include "rational.hpp"
#include "symexpr.hpp"
#include "transition.hpp"

namespace symcalc {

/// Re-expresses f in the target basis through the power sums.
template <Coefficient C>
SymExpr<C> convert(const SymExpr<C>& f, Basis target) {
    if (f.basis() == target) return f;
    auto& tc = cache();
    SymExpr<C> in_p(Basis::p);
    if (f.basis() == Basis::p) in_p = f;
    else
        for (const auto& [lam, c] : f.terms()) {
            auto M = tc.to_p(f.basis(), lam.size());
            const auto& row = M->rows[M->position.at(lam)];
            for (std::size_t k = 0; k < row.size(); ++k)
                if (!row[k].is_zero()) in_p.add_term(M->index[k], c * row[k]);
        }
    if (target == Basis::p) return in_p;
    SymExpr<C> out(target);
    for (const auto& [mu, c] : in_p.terms()) {
        auto M = tc.from_p(target, mu.size());
        const auto& row = M->rows[M->position.at(mu)];
        for (std::size_t k = 0; k < row.size(); ++k)
            if (!row[k].is_zero()) out.add_term(M->index[k], c * row[k]);
    }
    return out;
}

template <Coefficient C>
SymExpr<C> to_p(const SymExpr<C>& f) {
    return convert(f, Basis::p);
}

/// Sum in the basis of f.
template <Coefficient C>
SymExpr<C> operator+(SymExpr<C> f, const SymExpr<C>& g) {
    if (f.is_zero() && f.basis() != g.basis()) return g;
    return f += convert(g, f.basis());
}

template <Coefficient C>
SymExpr<C> operator-(SymExpr<C> f, const SymExpr<C>& g) {
    if (f.is_zero() && f.basis() != g.basis()) return -g;
    return f -= convert(g, f.basis());
}

template <Coefficient C>
SymExpr<C> operator*(SymExpr<C> f, const C& c) {
    return f *= c;
}

template <Coefficient C>
SymExpr<C> operator*(const C& c, SymExpr<C> f) {
    return f *= c;
}

inline SymExpr<ParamPoly> operator*(SymExpr<ParamPoly> f, const Rational& c) { return f *= ParamPoly(c); }
inline SymExpr<ParamPoly> operator*(const Rational& c, SymExpr<ParamPoly> f) { return f *= ParamPoly(c); }

namespace detail {

/// Product of expansions in a multiplicative basis (e, h or p); terms of
/// degree above cap are dropped when a cap is given.
template <Coefficient C>
SymExpr<C> merge_product(const SymExpr<C>& f, const SymExpr<C>& g, std::optional<int> cap) {
    SymExpr<C> out(f.basis());
    for (const auto& [a, ca] : f.terms()) {
        if (cap && a.size() > *cap) break;
        for (const auto& [b, cb] : g.terms()) {
            if (cap && a.size() + b.size() > *cap) break;
            out.add_term(merge(a, b), ca * cb);
        }
    }
    return out;
}

inline bool multiplicative(Basis b) { return b == Basis::e || b == Basis::h || b == Basis::p; }

}  // namespace detail

/// Ring product, returned in the basis of f.
template <Coefficient C>
SymExpr<C> multiply(const SymExpr<C>& f, const SymExpr<C>& g, std::optional<int> cap = std::nullopt) {
    if (detail::multiplicative(f.basis())) return detail::merge_product(f, convert(g, f.basis()), cap);
    auto prod = detail::merge_product(to_p(f), to_p(g), cap);
    return convert(prod, f.basis());
}

template <Coefficient C>
SymExpr<C> operator*(const SymExpr<C>& f, const SymExpr<C>& g) {
    return multiply(f, g);
}

template <Coefficient C>
SymExpr<C> power(const SymExpr<C>& f, int k, std::optional<int> cap = std::nullopt) {
    if (k < 0) throw DomainError("negative power of a symmetric function");
    SymExpr<C> r = SymExpr<C>::constant(C(Rational(1)), f.basis());
    for (int i = 0; i < k; ++i) r = multiply(r, f, cap);
    return r;
}

/// Hall scalar product.
template <Coefficient C>
C scalar(const SymExpr<C>& f, const SymExpr<C>& g) {
    C total(Rational(0));
    if (f.basis() == Basis::s && g.basis() == Basis::s) {
        for (const auto& [lam, c] : f.terms()) total = total + c * g.coeff(lam);
        return total;
    }
    if ((f.basis() == Basis::h && g.basis() == Basis::m) || (f.basis() == Basis::m && g.basis() == Basis::h)) {
        for (const auto& [lam, c] : f.terms()) total = total + c * g.coeff(lam);
        return total;
    }
    auto a = to_p(f), b = to_p(g);
    for (const auto& [mu, c] : a.terms()) {
        auto it = b.terms().find(mu);
        if (it != b.terms().end()) total = total + c * it->second * Rational(z_value(mu));
    }
    return total;
}

/// Internal (Kronecker) product; terms of different degrees annihilate.
template <Coefficient C>
SymExpr<C> internal(const SymExpr<C>& f, const SymExpr<C>& g) {
    auto a = to_p(f), b = to_p(g);
    SymExpr<C> out(Basis::p);
    for (const auto& [mu, c] : a.terms()) {
        auto it = b.terms().find(mu);
        if (it != b.terms().end()) out.add_term(mu, c * it->second * Rational(z_value(mu)));
    }
    return convert(out, f.basis());
}

/// D_{p_alpha} p_nu = coeff * p_{nu - alpha}, or nothing when alpha is not a sub-multiset of nu.
inline std::optional<std::pair<Partition, Integer>> p_derivative(const Partition& alpha, const Partition& nu) {
    auto ma = alpha.multiplicities(), mn = nu.multiplicities();
    if (ma.size() > mn.size()) return std::nullopt;
    Integer coeff = 1;
    std::vector<int> rest;
    for (std::size_t i = 1; i < mn.size(); ++i) {
        int a = i < ma.size() ? ma[i] : 0;
        if (a > mn[i]) return std::nullopt;
        for (int j = 0; j < a; ++j) coeff *= Integer(static_cast<long>(i)) * (mn[i] - j);
        rest.insert(rest.end(), mn[i] - a, static_cast<int>(i));
    }
    return std::make_pair(Partition::from_unsorted(std::move(rest)), coeff);
}

/// Foulkes derivative D_f g, adjoint to multiplication by f; result in the basis of g.
template <Coefficient C>
SymExpr<C> foulkes_derivative(const SymExpr<C>& f, const SymExpr<C>& g) {
    auto a = to_p(f), b = to_p(g);
    SymExpr<C> out(Basis::p);
    for (const auto& [alpha, ca] : a.terms())
        for (const auto& [nu, cb] : b.terms()) {
            if (nu.size() < alpha.size()) continue;
            if (auto d = p_derivative(alpha, nu)) out.add_term(d->first, ca * cb * Rational(d->second));
        }
    return convert(out, g.basis());
}

/// chi^lam_mu.
inline Integer mn_character(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size()) throw DomainError("mn_character: |lambda| != |mu|");
    return to_integer(cache().characters(lam.size())->at(lam, mu));
}

/// c^lam_{mu nu} = <s_mu s_nu, s_lam>.
inline Integer lr_coefficient(const Partition& mu, const Partition& nu, const Partition& lam) {
    if (mu.size() + nu.size() != lam.size() || !contains(lam, mu) || !contains(lam, nu)) return 0;
    auto skew = foulkes_derivative(s(mu), s(lam));
    return to_integer(skew.coeff(nu));
}

/// s_{lam/mu} in the Schur basis.
inline SymExpr<Rational> skew_schur(const Partition& lam, const Partition& mu) {
    if (!contains(lam, mu)) return SymExpr<Rational>(Basis::s);
    return foulkes_derivative(s(mu), s(lam));
}

}  // namespace symcalc
