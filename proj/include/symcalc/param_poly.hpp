#pragma once

#include <algorithm>
#include <cctype>
#include <concepts>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "rational.hpp"

namespace symcalc {

/// Orders parameter names so that embedded integers compare numerically (t2 < t10).
struct NaturalLess {
    bool operator()(const std::string& a, const std::string& b) const {
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (std::isdigit(static_cast<unsigned char>(a[i])) &&
                std::isdigit(static_cast<unsigned char>(b[j]))) {
                std::size_t i2 = i, j2 = j;
                while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
                while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
                auto na = std::stoull(a.substr(i, i2 - i));
                auto nb = std::stoull(b.substr(j, j2 - j));
                if (na != nb) return na < nb;
                i = i2;
                j = j2;
            } else {
                if (a[i] != b[j]) return a[i] < b[j];
                ++i;
                ++j;
            }
        }
        return (a.size() - i) < (b.size() - j);
    }
};

/// A monomial in named parameters; factors sorted by name, exponents positive.
class Monomial {
public:
    using Factor = std::pair<std::string, int>;

    Monomial() = default;

    static Monomial var(std::string name, int exp = 1) {
        Monomial m;
        if (exp < 0) throw DomainError("negative parameter exponent");
        if (exp > 0) m.factors_.emplace_back(std::move(name), exp);
        return m;
    }

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }

    int exponent(const std::string& name) const {
        for (const auto& [n, e] : factors_)
            if (n == name) return e;
        return 0;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& f : factors_) d += f.second;
        return d;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        NaturalLess less;
        auto a = factors_.begin(), b = o.factors_.begin();
        while (a != factors_.end() || b != o.factors_.end()) {
            if (b == o.factors_.end() || (a != factors_.end() && less(a->first, b->first))) {
                r.factors_.push_back(*a++);
            } else if (a == factors_.end() || less(b->first, a->first)) {
                r.factors_.push_back(*b++);
            } else {
                r.factors_.emplace_back(a->first, a->second + b->second);
                ++a;
                ++b;
            }
        }
        return r;
    }

    /// Every exponent multiplied by k.
    Monomial raised(int k) const {
        Monomial r = *this;
        for (auto& f : r.factors_) f.second *= k;
        return r;
    }

    /// The monomial with `name` removed.
    Monomial without(const std::string& name) const {
        Monomial r;
        for (const auto& f : factors_)
            if (f.first != name) r.factors_.push_back(f);
        return r;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    /// Total degree, then names/exponents lexicographically.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        NaturalLess less;
        for (std::size_t i = 0; i < a.factors_.size() && i < b.factors_.size(); ++i) {
            const auto& fa = a.factors_[i];
            const auto& fb = b.factors_[i];
            if (fa.first != fb.first) return less(fa.first, fb.first);
            if (fa.second != fb.second) return fa.second > fb.second;
        }
        return a.factors_.size() < b.factors_.size();
    }

private:
    std::vector<Factor> factors_;
};

/// Polynomial in declared formal parameters with rational coefficients.
///
/// An optional per-parameter degree cap turns the ring into a truncated
/// power series ring: terms whose exponent exceeds the cap are dropped after
/// every operation. Caps only shrink: combining two polynomials keeps the
/// smaller cap.
class ParamPoly {
public:
    using Terms = std::map<Monomial, Rational>;

    ParamPoly() = default;
    ParamPoly(const Rational& c) {  // NOLINT: constants convert implicitly
        if (!c.is_zero()) terms_.emplace(Monomial{}, c);
    }
    ParamPoly(int c) : ParamPoly(Rational(c)) {}  // NOLINT

    static ParamPoly var(const std::string& name, int exp = 1) {
        ParamPoly p;
        p.terms_.emplace(Monomial::var(name, exp), Rational(1));
        p.params_.insert(name);
        return p;
    }

    const Terms& terms() const& { return terms_; }
    Terms terms() && { return std::move(terms_); }
    const std::map<std::string, int, NaturalLess>& caps() const { return caps_; }

    /// Declared parameters together with every parameter occurring in a term.
    std::vector<std::string> params() const {
        std::set<std::string, NaturalLess> all(params_.begin(), params_.end());
        for (const auto& [m, c] : terms_)
            for (const auto& f : m.factors()) all.insert(f.first);
        return {all.begin(), all.end()};
    }

    ParamPoly& declare(const std::string& name) {
        params_.insert(name);
        return *this;
    }

    ParamPoly& set_cap(const std::string& name, int cap) {
        if (cap < 0) throw DomainError("parameter cap must be nonnegative");
        params_.insert(name);
        auto it = caps_.find(name);
        if (it == caps_.end() || cap < it->second) caps_[name] = cap;
        truncate();
        return *this;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

    Rational constant_term() const {
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int degree(const std::string& name) const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(name));
        return d;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c.is_zero() || exceeds_cap(m)) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    ParamPoly& operator+=(const ParamPoly& o) {
        merge_meta(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        truncate();
        return *this;
    }
    ParamPoly& operator-=(const ParamPoly& o) {
        merge_meta(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        truncate();
        return *this;
    }
    ParamPoly& operator*=(const Rational& r) {
        if (r.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= r;
        return *this;
    }
    ParamPoly& operator*=(const ParamPoly& o) {
        *this = *this * o;
        return *this;
    }

    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator-(ParamPoly a) { return a *= Rational(-1); }
    friend ParamPoly operator*(ParamPoly a, const Rational& r) { return a *= r; }
    friend ParamPoly operator*(const Rational& r, ParamPoly a) { return a *= r; }

    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
        ParamPoly r;
        r.merge_meta(a);
        r.merge_meta(b);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }

    /// Coefficient of name^k, as a polynomial in the remaining parameters.
    ParamPoly coefficient(const std::string& name, int k) const {
        ParamPoly r;
        r.params_ = params_;
        r.caps_ = caps_;
        for (const auto& [m, c] : terms_)
            if (m.exponent(name) == k) r.add_term(m.without(name), c);
        return r;
    }

    ParamPoly substitute(const std::string& name, const Rational& value) const {
        ParamPoly r;
        r.params_ = params_;
        r.params_.erase(name);
        r.caps_ = caps_;
        r.caps_.erase(name);
        for (const auto& [m, c] : terms_) {
            Rational v = c;
            for (int e = m.exponent(name); e > 0; --e) v *= value;
            r.add_term(m.without(name), v);
        }
        return r;
    }

    /// Substitutes name -> poly (poly is typically another parameter or a constant).
    ParamPoly substitute(const std::string& name, const ParamPoly& value) const {
        ParamPoly r;
        for (const auto& [m, c] : terms_) {
            ParamPoly term;
            term.add_term(m.without(name), c);
            for (int e = m.exponent(name); e > 0; --e) term = term * value;
            r += term;
        }
        for (const auto& p : params_)
            if (p != name) r.params_.insert(p);
        return r;
    }

    Rational evaluate(const std::map<std::string, Rational>& values) const {
        Rational total = 0;
        for (const auto& [m, c] : terms_) {
            Rational v = c;
            for (const auto& [name, e] : m.factors()) {
                auto it = values.find(name);
                if (it == values.end()) throw DomainError("no value for parameter " + name);
                for (int i = 0; i < e; ++i) v *= it->second;
            }
            total += v;
        }
        return total;
    }

    /// True when some term was or would be dropped by raising exponents by k.
    bool frobenius_overflows(int k) const {
        for (const auto& [m, c] : terms_)
            if (exceeds_cap(m.raised(k))) return true;
        return false;
    }

    ParamPoly raised(int k) const {
        ParamPoly r;
        r.params_ = params_;
        r.caps_ = caps_;
        for (const auto& [m, c] : terms_) r.add_term(m.raised(k), c);
        return r;
    }

private:
    bool exceeds_cap(const Monomial& m) const {
        for (const auto& [name, e] : m.factors()) {
            auto it = caps_.find(name);
            if (it != caps_.end() && e > it->second) return true;
        }
        return false;
    }

    void truncate() {
        if (caps_.empty()) return;
        std::erase_if(terms_, [&](const auto& kv) { return exceeds_cap(kv.first); });
    }

    void merge_meta(const ParamPoly& o) {
        params_.insert(o.params_.begin(), o.params_.end());
        for (const auto& [name, cap] : o.caps_) {
            auto it = caps_.find(name);
            if (it == caps_.end() || cap < it->second) caps_[name] = cap;
        }
    }

    Terms terms_;
    std::set<std::string, NaturalLess> params_;
    std::map<std::string, int, NaturalLess> caps_;
};

inline bool is_zero(const ParamPoly& p) { return p.is_zero(); }

enum class CapPolicy { truncate, strict };

/// Substitutes every parameter v by v^k, the action of p_k on parameters.
/// Under CapPolicy::strict a term pushed past a cap raises TruncationError.
inline ParamPoly frobenius_params(const ParamPoly& a, int k, CapPolicy policy = CapPolicy::truncate) {
    if (k < 1) throw DomainError("frobenius_params needs k >= 1");
    if (policy == CapPolicy::strict && a.frobenius_overflows(k))
        throw TruncationError("frobenius_params: exponent exceeds parameter cap");
    return a.raised(k);
}

inline ParamPoly frobenius(const ParamPoly& a, int k) { return frobenius_params(a, k); }

/// a(a-1)...(a-k+1)/k!, the coefficient of u^k in (1+u)^a.
inline ParamPoly binomial_series_coeff(const ParamPoly& a, int k) {
    if (k < 0) throw DomainError("binomial_series_coeff needs k >= 0");
    ParamPoly r(1);
    for (int i = 0; i < k; ++i) r = r * (a - ParamPoly(i));
    return r * Rational(Integer(1), factorial(k));
}

inline nlohmann::json param_poly_to_json(const ParamPoly& p) {
    auto out = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::json exps = nlohmann::json::object();
        for (const auto& [name, e] : m.factors()) exps[name] = e;
        out.push_back({{"exps", exps}, {"coeff", rational_to_json(c)}});
    }
    return out;
}

inline ParamPoly param_poly_from_json(const nlohmann::json& j) {
    ParamPoly r;
    for (const auto& term : j) {
        Monomial m;
        for (const auto& [name, e] : term.at("exps").items()) m = m * Monomial::var(name, e.get<int>());
        ParamPoly t(rational_from_json(term.at("coeff")));
        ParamPoly mono;
        mono.add_term(m, Rational(1));
        r += t * mono;
    }
    return r;
}

/// Requirements on a coefficient ring for symmetric-function expansions.
template <class C>
concept Coefficient = std::regular<C> && requires(C a, C b, Rational r, int k) {
    { a + b } -> std::convertible_to<C>;
    { a - b } -> std::convertible_to<C>;
    { a * b } -> std::convertible_to<C>;
    { a * r } -> std::convertible_to<C>;
    { -a } -> std::convertible_to<C>;
    { is_zero(a) } -> std::convertible_to<bool>;
    { frobenius(a, k) } -> std::convertible_to<C>;
    C(r);
};

static_assert(Coefficient<Rational>);
static_assert(Coefficient<ParamPoly>);

}  // namespace symcalc
