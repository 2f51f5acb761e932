#pragma once

#include <map>

#include "alphabet.hpp"
#include "symfunc.hpp"

namespace symcalc {

/// Class function on S_n, keyed by cycle type.
template <Coefficient C = Rational>
struct ClassFunction {
    int n = 0;
    std::map<Partition, C> values;

    /// Character values mu -> <f, p_mu> of a homogeneous f of degree n.
    static ClassFunction from_frobenius(const SymExpr<C>& f, int n) {
        ClassFunction cf;
        cf.n = n;
        auto fp = to_p(f);
        for (const auto& mu : partitions_of(n)) cf.values[mu] = fp.coeff(mu) * Rational(z_value(mu));
        for (const auto& [mu, c] : fp.terms())
            if (mu.size() != n) throw DomainError("class function: term of degree " + std::to_string(mu.size()) + " in degree " + std::to_string(n));
        return cf;
    }

    const C& operator()(const Partition& mu) const { return values.at(mu); }

    /// Frobenius characteristic, in basis b.
    SymExpr<C> characteristic(Basis b = Basis::s) const {
        SymExpr<C> out(Basis::p);
        for (const auto& [mu, c] : values) out.add_term(mu, c * Rational(Integer(1), z_value(mu)));
        return convert(out, b);
    }
};

namespace detail {

template <Coefficient C>
int homogeneous_degree(const SymExpr<C>& f, const char* who) {
    if (f.is_zero()) throw DomainError(std::string(who) + ": zero input has no degree");
    if (!f.is_homogeneous()) throw DomainError(std::string(who) + ": input must be homogeneous");
    return f.degree();
}

}  // namespace detail

/// Adams operation: the character mu -> chi_f(power_cycle_type(mu, k)).
template <Coefficient C>
SymExpr<C> adams(const SymExpr<C>& f, int k) {
    if (k < 1) throw DomainError("adams needs k >= 1");
    if (f.is_zero()) return f;
    int n = detail::homogeneous_degree(f, "adams");
    auto chi = ClassFunction<C>::from_frobenius(f, n);
    ClassFunction<C> out;
    out.n = n;
    for (const auto& [mu, c] : chi.values) out.values[mu] = chi(power_cycle_type(mu, k));
    return out.characteristic(f.basis());
}

/// Inner plethysm g^[f]: sum_mu c_mu (p^_{mu_1}[f] * p^_{mu_2}[f] * ...) for g = sum c_mu p_mu,
/// evaluated pointwise on class functions; the result is in the basis of f.
template <Coefficient C>
SymExpr<C> inner_plethysm(const SymExpr<C>& g, const SymExpr<C>& f) {
    int n = detail::homogeneous_degree(f, "inner_plethysm");
    auto chi = ClassFunction<C>::from_frobenius(f, n);
    auto gp = to_p(g);
    ClassFunction<C> out;
    out.n = n;
    for (const auto& nu : partitions_of(n)) {
        C total(Rational(0));
        for (const auto& [mu, c] : gp.terms()) {
            C prod = c;
            for (int k : mu) prod = prod * chi(power_cycle_type(nu, k));
            total = total + prod;
        }
        out.values[nu] = total;
    }
    return out.characteristic(f.basis());
}

/// f evaluated on the eigenvalues of a permutation matrix of cycle type mu.
template <Coefficient C>
C eigenvalue_eval(const SymExpr<C>& f, const Partition& mu) {
    auto m = mu.multiplicities();
    auto p_r = [&](int r) {
        long v = 0;
        for (int d = 1; d <= r && d < static_cast<int>(m.size()); ++d)
            if (r % d == 0) v += static_cast<long>(d) * m[d];
        return Rational(v);
    };
    C total(Rational(0));
    const auto fp = to_p(f);
    for (const auto& [nu, c] : fp.terms()) {
        Rational v = 1;
        for (int r : nu) v *= p_r(r);
        total = total + c * v;
    }
    return total;
}

/// h_{n-1,1}, the characteristic of the permutation representation on n points.
inline SymExpr<Rational> perm_char(int n) {
    if (n < 1) throw DomainError("perm_char needs n >= 1");
    return h(n == 1 ? Partition{1} : Partition{n - 1, 1});
}

/// h_n[X/(1-q)] through q-degree qcap: the graded characteristic of the polynomial ring.
inline SymExpr<ParamPoly> graded_poly_char(int n, int qcap, const std::string& q = "q") {
    if (n < 1) throw DomainError("graded_poly_char needs n >= 1");
    return convert(scale_alphabet(lift(h(Partition{n})), ScaleMode::over_one_minus_q, qcap, q), Basis::s);
}

}  // namespace symcalc
