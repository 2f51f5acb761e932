#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "alphabet.hpp"
#include "inner_plethysm.hpp"
#include "memo.hpp"
#include "symfunc.hpp"

namespace symcalc {

/// The series sigma_1 * reduced. Equality is equality of the reduced parts.
template <Coefficient C = Rational>
struct StableChar {
    SymExpr<C> reduced{Basis::s};

    StableChar() = default;
    explicit StableChar(SymExpr<C> r) : reduced(std::move(r)) {}

    friend bool operator==(const StableChar& a, const StableChar& b) {
        return to_p(a.reduced) == to_p(b.reduced);
    }
    friend StableChar operator+(const StableChar& a, const StableChar& b) { return StableChar(a.reduced + b.reduced); }
    friend StableChar operator-(const StableChar& a, const StableChar& b) { return StableChar(a.reduced - b.reduced); }
    friend StableChar operator-(const StableChar& a) { return StableChar(-a.reduced); }
    friend StableChar operator*(const StableChar& a, const C& c) { return StableChar(a.reduced * c); }
};

template <Coefficient C>
SymExpr<C> coerce(const SymExpr<Rational>& f) {
    if constexpr (std::is_same_v<C, Rational>) return f;
    else return f.map_coefficients([](const Rational& r) { return C(r); });
}

namespace detail {

struct StableMemo {
    Memo<Partition, SymExpr<Rational>> angle;
    Memo<Partition, SymExpr<Rational>> tilde_h;
    Memo<Partition, SymExpr<Rational>> tilde_s;
    Memo<Partition, SymExpr<Rational>> tilde_x;
    Memo<std::pair<Partition, int>, SymExpr<Rational>> m_of_s;  // m_nu[sigma_1 - 1] through a cap

    static StableMemo& instance() {
        static StableMemo memo;
        return memo;
    }
};

}  // namespace detail

/// sigma_1 - 1 in the h basis, through degree cap.
inline SymExpr<Rational> sigma_minus_one(int cap) {
    auto sig = sigma_series(SeriesKind::sigma, 1, cap).expr;
    sig.add_term(Partition{}, Rational(-1));
    return sig;
}

/// <lam> = sigma_1 s_lam(X-1).
inline StableChar<Rational> angle(const Partition& lam) {
    return StableChar<Rational>(detail::StableMemo::instance().angle.get(
        lam, [&] { return convert(shift_alphabet(s(lam), Rational(-1)), Basis::s); }));
}

/// <<mu>> = sigma_1 h_mu.
inline StableChar<Rational> dangle(const Partition& mu) { return StableChar<Rational>(h(mu)); }

struct SignedSchur {
    int sign;
    Partition shape;
};

/// s_alpha for an arbitrary integer vector, rewritten as +-s_lam or zero.
inline std::optional<SignedSchur> straighten_schur(const IntVector& alpha) {
    const int k = static_cast<int>(alpha.size());
    std::vector<int> v(alpha.size());
    for (int i = 0; i < k; ++i) {
        v[i] = alpha[i] + (k - 1 - i);
        if (v[i] < 0) return std::nullopt;
    }
    int sign = 1;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j + 1 < k - i; ++j)
            if (v[j] < v[j + 1]) {
                std::swap(v[j], v[j + 1]);
                sign = -sign;
            }
    for (int i = 0; i + 1 < k; ++i)
        if (v[i] == v[i + 1]) return std::nullopt;
    std::vector<int> parts;
    for (int i = 0; i < k; ++i)
        if (int part = v[i] - (k - 1 - i); part > 0) parts.push_back(part);
    return SignedSchur{sign, Partition(std::move(parts))};
}

/// Coefficients on the family {<nu>}, by elimination from the top degree down.
/// Returned as a Schur-tagged expansion whose key nu stands for <nu>.
template <Coefficient C>
SymExpr<C> to_angle_basis(const StableChar<C>& sc) {
    auto r = convert(sc.reduced, Basis::s);
    SymExpr<C> out(Basis::s);
    while (!r.is_zero()) {
        auto top = r.component(r.degree());
        for (const auto& [nu, c] : top.terms()) {
            out.add_term(nu, c);
            r -= coerce<C>(angle(nu).reduced) * c;
        }
    }
    return out;
}

/// Same coefficients read off from reduced(X+1); an independent route.
template <Coefficient C>
SymExpr<C> to_angle_basis_by_shift(const StableChar<C>& sc) {
    return convert(shift_alphabet(sc.reduced, Rational(1)), Basis::s);
}

/// Degree-n component of sigma_1 * reduced, in the Schur basis.
template <Coefficient C>
SymExpr<C> evaluate_at_n(const StableChar<C>& sc, int n) {
    if (n < 0) throw DomainError("evaluate_at_n needs n >= 0");
    SymExpr<C> out(Basis::s);
    for (const auto& [nu, c] : to_angle_basis(sc).terms()) {
        IntVector alpha{n - nu.size()};
        alpha.insert(alpha.end(), nu.begin(), nu.end());
        if (auto st = straighten_schur(alpha)) out.add_term(st->shape, st->sign > 0 ? c : -c);
    }
    return out;
}

/// sum_k h_{n-k} * reduced_k; the direct route for evaluate_at_n.
template <Coefficient C>
SymExpr<C> evaluate_at_n_direct(const StableChar<C>& sc, int n) {
    SymExpr<C> out(Basis::s);
    auto r = convert(sc.reduced, Basis::s);
    for (int k = 0; k <= n && k <= r.degree(); ++k) {
        auto part = r.component(k);
        if (part.is_zero()) continue;
        auto hn = n - k == 0 ? SymExpr<C>::constant(C(Rational(1)), Basis::s) : coerce<C>(s(Partition{n - k}));
        out += multiply(hn, part);
    }
    return out;
}

namespace detail {

template <Coefficient C>
SymExpr<C> p_derivative_expr(const Partition& alpha, const SymExpr<C>& fp) {
    SymExpr<C> out(Basis::p);
    for (const auto& [nu, c] : fp.terms()) {
        if (nu.size() < alpha.size()) continue;
        if (auto d = p_derivative(alpha, nu)) out.add_term(d->first, c * Rational(d->second));
    }
    return out;
}

}  // namespace detail

/// Stable Kronecker product: reduced = sum_alpha (1/z_alpha) D_{p_alpha}a D_{p_alpha}b p_alpha.
template <Coefficient C>
StableChar<C> stable_kron(const StableChar<C>& a, const StableChar<C>& b) {
    auto ap = to_p(a.reduced), bp = to_p(b.reduced);
    SymExpr<C> out(Basis::p);
    if (ap.is_zero() || bp.is_zero()) return StableChar<C>(convert(out, a.reduced.basis()));
    const int dmax = std::min(ap.degree(), bp.degree());
    for (const auto& alpha : partitions_up_to(dmax)) {
        auto da = detail::p_derivative_expr(alpha, ap);
        if (da.is_zero()) continue;
        auto db = detail::p_derivative_expr(alpha, bp);
        if (db.is_zero()) continue;
        auto prod = multiply(da, db);
        const Rational w(Integer(1), z_value(alpha));
        for (const auto& [nu, c] : prod.terms()) out.add_term(merge(nu, alpha), c * w);
    }
    return StableChar<C>(convert(out, a.reduced.basis()));
}

/// Reduced Kronecker coefficients: <lam> * <mu> = sum_nu g_nu <nu>.
inline std::map<Partition, Integer> reduced_kron(const Partition& lam, const Partition& mu) {
    std::map<Partition, Integer> out;
    for (const auto& [nu, c] : to_angle_basis(stable_kron(angle(lam), angle(mu))).terms())
        out.emplace(nu, to_integer(c));
    return out;
}

/// Polynomial in cycle multiplicities m_1, m_2, ... stored on the basis prod_i C(m_i, n_i(nu)).
struct CharPolynomial {
    std::map<Partition, Integer> terms;

    /// Value at the multiplicities of mu.
    Integer evaluate(const Partition& mu) const {
        auto m = mu.multiplicities();
        Integer total = 0;
        for (const auto& [nu, c] : terms) {
            Integer v = c;
            auto n = nu.multiplicities();
            for (std::size_t i = 1; i < n.size() && v != 0; ++i) {
                if (n[i] == 0) continue;
                v *= binomial(Integer(i < m.size() ? m[i] : 0), n[i]);
            }
            total += v;
        }
        return total;
    }

    friend bool operator==(const CharPolynomial&, const CharPolynomial&) = default;
};

/// Xi^lam, with Xi^lam(m_1(mu), m_2(mu), ...) = chi^{(n-|lam|, lam)}_mu in the stable range.
inline CharPolynomial character_polynomial(const Partition& lam) {
    CharPolynomial cp;
    for (const auto& [nu, c] : to_p(angle(lam).reduced).terms()) {
        Integer v = to_integer(c * Rational(z_value(nu)));
        if (v != 0) cp.terms.emplace(nu, v);
    }
    return cp;
}

/// m_nu[sigma_1 - 1] in the m basis, through degree cap.
inline SymExpr<Rational> monomial_of_s(const Partition& nu, int cap) {
    return detail::StableMemo::instance().m_of_s.get({nu, cap}, [&] {
        return outer_plethysm(m(nu), sigma_minus_one(cap), cap);
    });
}

/// c_lam^mu = <h_lam, m_mu[sigma_1 - 1]>.
inline Rational c_coefficient(const Partition& lam, const Partition& mu) {
    if (mu.size() > lam.size()) return 0;
    return monomial_of_s(mu, lam.size()).coeff(lam);
}

/// h~_mu, from h_lam = sum_nu c_lam^nu h~_nu; in the h basis.
inline SymExpr<Rational> tilde_h(const Partition& mu) {
    return detail::StableMemo::instance().tilde_h.get(mu, [&] {
        SymExpr<Rational> out = h(mu);
        for (const auto& nu : partitions_up_to(mu.size() - 1)) {
            Rational c = c_coefficient(mu, nu);
            if (!c.is_zero()) out -= tilde_h(nu) * c;
        }
        return out;
    });
}

/// s~_lam = sum_mu [h_mu] s_lam(X-1) h~_mu; in the Schur basis.
inline SymExpr<Rational> tilde_s(const Partition& lam) {
    return detail::StableMemo::instance().tilde_s.get(lam, [&] {
        SymExpr<Rational> out(Basis::h);
        for (const auto& [mu, c] : convert(angle(lam).reduced, Basis::h).terms()) out += tilde_h(mu) * c;
        return convert(out, Basis::s);
    });
}

/// x~_lam = sum_mu [s_mu] s_lam(X+1) s~_mu, so that sigma_1 s_lam = x~_lam^[sigma_1 h_1].
inline SymExpr<Rational> tilde_x(const Partition& lam) {
    return detail::StableMemo::instance().tilde_x.get(lam, [&] {
        SymExpr<Rational> out(Basis::s);
        for (const auto& [mu, c] : convert(shift_alphabet(s(lam), Rational(1)), Basis::s).terms())
            out += tilde_s(mu) * c;
        return out;
    });
}

/// ell_1 + ... + ell_cap.
inline SymExpr<Rational> lie_sum(int cap) {
    SymExpr<Rational> out(Basis::p);
    for (int n = 1; n <= cap; ++n) out += lie_character(n);
    return out;
}

/// s~_lam from b_lam^mu = (-1)^{|lam|+|mu|} <s_{lam'}(X+1), s_{mu'}[ell_1 + ell_2 + ...]>.
inline SymExpr<Rational> tilde_s_assaf_speyer(const Partition& lam) {
    const int n = lam.size();
    auto left = shift_alphabet(s(conjugate(lam)), Rational(1));
    auto ell = lie_sum(std::max(n, 1));
    SymExpr<Rational> out(Basis::s);
    for (const auto& mu : partitions_up_to(n)) {
        Rational b = scalar(left, outer_plethysm(s(conjugate(mu)), ell, n));
        if ((n + mu.size()) % 2) b = -b;
        out.add_term(mu, b);
    }
    return out;
}

/// x~_lam with the coefficient of s_{mu'} equal to (-1)^{|lam|+|mu|} <s_{lam'}, s_mu[ell_1 + ell_2 + ...]>.
inline SymExpr<Rational> tilde_x_assaf_speyer(const Partition& lam) {
    const int n = lam.size();
    auto ell = lie_sum(std::max(n, 1));
    SymExpr<Rational> out(Basis::s);
    for (const auto& mu : partitions_up_to(n)) {
        Rational c = scalar(s(conjugate(lam)), outer_plethysm(s(mu), ell, n));
        if ((n + mu.size()) % 2) c = -c;
        out.add_term(conjugate(mu), c);
    }
    return out;
}

/// [[f]] = f^[sigma_1 h_1], with reduced part sum_nu <f, m_nu[sigma_1 - 1]> h_nu.
template <Coefficient C>
StableChar<C> stable_bracket(const SymExpr<C>& f) {
    SymExpr<C> out(Basis::h);
    if (f.is_zero()) return StableChar<C>(out);
    const int d = f.degree();
    auto fh = convert(f, Basis::h);
    for (const auto& nu : partitions_up_to(d)) {
        auto mS = monomial_of_s(nu, d);
        C total(Rational(0));
        for (const auto& [lam, c] : fh.terms()) {
            Rational w = mS.coeff(lam);
            if (!w.is_zero()) total = total + c * w;
        }
        out.add_term(nu, total);
    }
    return StableChar<C>(out);
}

/// The symmetric function F with x = F^[sigma_1 h_1]: sum_mu [h_mu](x.reduced) h~_mu.
template <Coefficient C>
SymExpr<C> stable_preimage(const StableChar<C>& x) {
    SymExpr<C> out(Basis::h);
    for (const auto& [mu, c] : convert(x.reduced, Basis::h).terms()) out += coerce<C>(tilde_h(mu)) * c;
    return out;
}

/// g^[x] on stable characters: [[g o F]] where x = F^[sigma_1 h_1].
template <Coefficient C>
StableChar<C> stable_inner_plethysm(const SymExpr<C>& g, const StableChar<C>& x) {
    return stable_bracket(outer_plethysm(convert(g, Basis::h), stable_preimage(x)));
}

enum class TransitionKind { a, b, c, d };

/// Rows and columns indexed by all partitions of size <= cap, canonical order.
struct TransitionMatrix {
    TransitionKind kind;
    std::vector<Partition> index;
    std::map<Partition, int> position;
    std::vector<std::vector<Rational>> rows;

    const Rational& at(const Partition& lam, const Partition& mu) const {
        return rows[position.at(lam)][position.at(mu)];
    }
};

/// sigma_1[sigma_1 - 1] s_mu[sigma_1 - 1] in the Schur basis through degree cap; the dual of s~_mu.
inline SymExpr<Rational> tilde_s_dual(const Partition& mu, int cap) {
    auto S = sigma_minus_one(cap);
    auto sig = sigma_series(SeriesKind::sigma, 1, cap).expr;
    auto left = outer_plethysm(sig, S, cap);
    auto right = outer_plethysm(s(mu), S, cap);
    return convert(multiply(left, right, cap), Basis::s);
}

/// m_mu[sigma_1 - 1] through degree cap; the dual of h~_mu.
inline SymExpr<Rational> tilde_h_dual(const Partition& mu, int cap) { return monomial_of_s(mu, cap); }

/// a: s_lam = sum a_lam^mu s~_mu; b: s~_lam = sum b_lam^mu s_mu;
/// c: h_lam = sum c_lam^mu h~_mu; d: h~_lam = sum d_lam^mu h_mu.
inline TransitionMatrix transition(TransitionKind kind, int cap) {
    if (cap < 0) throw DomainError("transition needs cap >= 0");
    if (cap > 8) throw DomainError("transition: degree cap above 8 is not supported");
    TransitionMatrix t{kind, partitions_up_to(cap), {}, {}};
    const std::size_t d = t.index.size();
    for (std::size_t i = 0; i < d; ++i) t.position.emplace(t.index[i], static_cast<int>(i));
    t.rows.assign(d, std::vector<Rational>(d));
    std::optional<SymExpr<Rational>> M;
    if (kind == TransitionKind::d) M = invert_sigma(std::max(cap, 1)).expr;
    for (std::size_t k = 0; k < d; ++k) {
        const Partition& mu = t.index[k];
        switch (kind) {
        case TransitionKind::a: {
            auto col = tilde_s_dual(mu, cap);
            for (std::size_t i = 0; i < d; ++i) t.rows[i][k] = col.coeff(t.index[i]);
            break;
        }
        case TransitionKind::b: {
            auto row = tilde_s(mu);
            for (std::size_t i = 0; i < d; ++i) t.rows[k][i] = row.coeff(t.index[i]);
            break;
        }
        case TransitionKind::c: {
            auto col = monomial_of_s(mu, cap);
            for (std::size_t i = 0; i < d; ++i) t.rows[i][k] = col.coeff(t.index[i]);
            break;
        }
        case TransitionKind::d: {
            auto col = outer_plethysm(m(mu), *M, cap);
            for (std::size_t i = 0; i < d; ++i) t.rows[i][k] = col.coeff(t.index[i]);
            break;
        }
        }
    }
    return t;
}

namespace detail {

inline void vector_partitions(const std::vector<std::vector<int>>& vectors, std::size_t idx,
                              std::vector<int>& rest, std::vector<int>& mults, const Partition& target,
                              Integer& count) {
    bool done = std::all_of(rest.begin(), rest.end(), [](int x) { return x == 0; });
    if (done) {
        if (Partition::from_unsorted(mults) == target) ++count;
        return;
    }
    if (idx == vectors.size()) return;
    const auto& v = vectors[idx];
    // multiplicity 0, 1, 2, ... of this column
    vector_partitions(vectors, idx + 1, rest, mults, target, count);
    int k = 0;
    while (true) {
        bool fits = true;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (rest[i] < v[i]) fits = false;
        if (!fits) break;
        for (std::size_t i = 0; i < v.size(); ++i) rest[i] -= v[i];
        ++k;
        mults.push_back(k);
        vector_partitions(vectors, idx + 1, rest, mults, target, count);
        mults.pop_back();
    }
    for (std::size_t i = 0; i < v.size(); ++i) rest[i] += k * v[i];
}

}  // namespace detail

/// Number of multisets of nonzero column vectors with row sums lam whose
/// multiplicities form the partition mu.
inline Integer vector_partition_count(const Partition& lam, const Partition& mu) {
    if (lam.empty()) return mu.empty() ? 1 : 0;
    std::vector<std::vector<int>> vectors;
    std::vector<int> v(lam.length(), 0);
    while (true) {
        int i = 0;
        while (i < lam.length() && v[i] == lam[i]) v[i++] = 0;
        if (i == lam.length()) break;
        ++v[i];
        vectors.push_back(v);
    }
    std::vector<int> rest(lam.parts()), mults;
    Integer count = 0;
    detail::vector_partitions(vectors, 0, rest, mults, mu, count);
    return count;
}

/// f^{mu nu}_lam = sum over alpha with lam/alpha a horizontal strip of c^alpha_{mu nu}.
inline std::map<std::pair<Partition, Partition>, Integer> stable_coproduct_tilde_s(const Partition& lam) {
    std::map<std::pair<Partition, Partition>, Integer> out;
    for (const auto& alpha : partitions_up_to(lam.size())) {
        if (!is_horizontal_strip(lam, alpha)) continue;
        for (const auto& mu : partitions_up_to(alpha.size())) {
            if (!contains(alpha, mu)) continue;
            for (const auto& [nu, c] : skew_schur(alpha, mu).terms()) out[{mu, nu}] += to_integer(c);
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

/// l^nu_{lam mu}: <<lam>> * <mu> = sum_nu l^nu_{lam mu} <nu>.
inline std::map<Partition, Integer> mixed_product(const Partition& lam, const Partition& mu) {
    std::map<Partition, Integer> out;
    for (const auto& [nu, c] : to_angle_basis(stable_kron(dangle(lam), angle(mu))).terms())
        out.emplace(nu, to_integer(c));
    return out;
}

}  // namespace symcalc
