#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "param_poly.hpp"
#include "partition.hpp"
#include "rational.hpp"

namespace symcalc {

enum class Basis { m, e, h, p, s };

inline char basis_letter(Basis b) {
    switch (b) {
    case Basis::m: return 'm';
    case Basis::e: return 'e';
    case Basis::h: return 'h';
    case Basis::p: return 'p';
    case Basis::s: return 's';
    }
    return '?';
}

inline std::optional<Basis> basis_from_letter(std::string_view name) {
    if (name == "m") return Basis::m;
    if (name == "e") return Basis::e;
    if (name == "h") return Basis::h;
    if (name == "p") return Basis::p;
    if (name == "s") return Basis::s;
    return std::nullopt;
}

/// Sparse expansion of a (possibly inhomogeneous) symmetric function on one of
/// the classical bases. Zero coefficients are never stored.
template <Coefficient C = Rational>
class SymExpr {
public:
    using Terms = std::map<Partition, C>;
    using coefficient_type = C;

    explicit SymExpr(Basis basis = Basis::p) : basis_(basis) {}

    static SymExpr term(Basis basis, const Partition& lam, const C& c = C(Rational(1))) {
        SymExpr f(basis);
        f.add_term(lam, c);
        return f;
    }

    static SymExpr constant(const C& c, Basis basis = Basis::p) { return term(basis, Partition{}, c); }

    Basis basis() const { return basis_; }
    const Terms& terms() const& { return terms_; }
    // by value on temporaries, so `for (... : f().terms())` does not dangle
    Terms terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Partition& lam, const C& c) {
        if (symcalc::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(lam, c);
        if (!inserted) {
            it->second = it->second + c;
            if (symcalc::is_zero(it->second)) terms_.erase(it);
        }
    }

    C coeff(const Partition& lam) const {
        auto it = terms_.find(lam);
        return it == terms_.end() ? C(Rational(0)) : it->second;
    }

    C constant_term() const { return coeff(Partition{}); }

    /// Largest degree of a term, -1 for zero.
    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.size(); }
    int min_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.size(); }
    bool is_homogeneous() const { return !terms_.empty() && degree() == min_degree(); }

    SymExpr component(int n) const {
        SymExpr r(basis_);
        for (const auto& [lam, c] : terms_)
            if (lam.size() == n) r.terms_.emplace(lam, c);
        return r;
    }

    SymExpr truncated(int cap) const {
        SymExpr r(basis_);
        for (const auto& [lam, c] : terms_)
            if (lam.size() <= cap) r.terms_.emplace(lam, c);
        return r;
    }

    /// Adds g, which must be expressed in the same basis.
    SymExpr& operator+=(const SymExpr& g) {
        check_basis(g);
        for (const auto& [lam, c] : g.terms_) add_term(lam, c);
        return *this;
    }
    SymExpr& operator-=(const SymExpr& g) {
        check_basis(g);
        for (const auto& [lam, c] : g.terms_) add_term(lam, -c);
        return *this;
    }
    SymExpr& operator*=(const C& c) {
        if (symcalc::is_zero(c)) {
            terms_.clear();
            return *this;
        }
        Terms out;
        for (auto& [lam, v] : terms_) {
            C w = v * c;
            if (!symcalc::is_zero(w)) out.emplace(lam, std::move(w));
        }
        terms_ = std::move(out);
        return *this;
    }

    friend SymExpr operator-(SymExpr f) { return f *= C(Rational(-1)); }

    friend bool operator==(const SymExpr& a, const SymExpr& b) {
        return a.basis_ == b.basis_ && a.terms_ == b.terms_;
    }

    template <class F>
    auto map_coefficients(F fn) const {
        using D = std::decay_t<decltype(fn(std::declval<const C&>()))>;
        SymExpr<D> r(basis_);
        for (const auto& [lam, c] : terms_) r.add_term(lam, fn(c));
        return r;
    }

    /// Same expansion with the basis tag replaced (no conversion).
    SymExpr relabeled(Basis b) const {
        SymExpr r(b);
        r.terms_ = terms_;
        return r;
    }

private:
    void check_basis(const SymExpr& g) const {
        if (g.basis_ != basis_ && !g.is_zero())
            throw DomainError(std::string("basis mismatch: ") + basis_letter(basis_) + " vs " +
                              basis_letter(g.basis_));
    }

    Basis basis_;
    Terms terms_;
};

/// Rational expansion viewed over the parameter ring.
inline SymExpr<ParamPoly> lift(const SymExpr<Rational>& f) {
    return f.map_coefficients([](const Rational& c) { return ParamPoly(c); });
}

template <Coefficient C = Rational>
SymExpr<C> sym(Basis b, const Partition& lam, const C& c = C(Rational(1))) {
    return SymExpr<C>::term(b, lam, c);
}

template <Coefficient C = Rational> SymExpr<C> s(const Partition& lam) { return sym<C>(Basis::s, lam); }
template <Coefficient C = Rational> SymExpr<C> h(const Partition& lam) { return sym<C>(Basis::h, lam); }
template <Coefficient C = Rational> SymExpr<C> e(const Partition& lam) { return sym<C>(Basis::e, lam); }
template <Coefficient C = Rational> SymExpr<C> p(const Partition& lam) { return sym<C>(Basis::p, lam); }
template <Coefficient C = Rational> SymExpr<C> m(const Partition& lam) { return sym<C>(Basis::m, lam); }

}  // namespace symcalc
