#pragma once

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "param_poly.hpp"
#include "stable.hpp"
#include "symexpr.hpp"

namespace symcalc {

// ---- text ------------------------------------------------------------------

inline std::string render_monomial(const Monomial& m) {
    std::string out;
    for (const auto& [name, e] : m.factors()) {
        if (!out.empty()) out += "*";
        out += name;
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

/// Sum of coefficient-times-atom terms; `atom` is empty for the unit.
/// Writes "a + b - c", omitting unit coefficients.
class TermWriter {
public:
    void add(const Rational& c, const std::string& atom) {
        if (c.is_zero()) return;
        bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        std::string body;
        if (atom.empty()) body = a.str();
        else if (a == 1) body = atom;
        else body = a.str() + "*" + atom;
        push(neg, body);
    }

    /// A parenthesised coefficient, used when it is not a plain number.
    void add_group(const std::string& coeff, const std::string& atom) {
        push(false, atom.empty() ? "(" + coeff + ")" : "(" + coeff + ")*" + atom);
    }

    std::string str() const { return out_.empty() ? "0" : out_; }

private:
    void push(bool neg, const std::string& body) {
        if (out_.empty()) out_ = neg ? "-" + body : body;
        else out_ += (neg ? " - " : " + ") + body;
    }
    std::string out_;
};

inline std::string render(const Rational& r) { return r.str(); }

inline std::string render(const ParamPoly& p) {
    TermWriter w;
    for (const auto& [m, c] : p.terms()) w.add(c, render_monomial(m));
    return w.str();
}

inline std::string atom_text(const std::string& name, const Partition& lam) {
    std::string parts = to_string(lam);
    return name + parts;
}

/// Terms keyed by partition; the empty partition of the plain bases renders as the unit.
template <Coefficient C>
std::string render_terms(const std::map<Partition, C>& terms, const std::string& name, bool empty_is_unit) {
    TermWriter w;
    for (const auto& [lam, c] : terms) {
        std::string atom = (empty_is_unit && lam.empty()) ? "" : atom_text(name, lam);
        if constexpr (std::is_same_v<C, Rational>) w.add(c, atom);
        else {
            if (c.is_constant()) w.add(c.constant_term(), atom);
            else w.add_group(render(c), atom);
        }
    }
    return w.str();
}

template <Coefficient C>
std::string render(const SymExpr<C>& f) {
    return render_terms(f.terms(), std::string(1, basis_letter(f.basis())), true);
}

/// Default presentation of a stable character: A[..] (the <nu> family); with
/// basis h the P[..] family; any other basis as stab(reduced).
template <Coefficient C>
std::string render(const StableChar<C>& x, std::optional<Basis> basis = std::nullopt) {
    if (!basis || *basis == Basis::s) return render_terms(to_angle_basis(x).terms(), "A", false);
    if (*basis == Basis::h) return render_terms(convert(x.reduced, Basis::h).terms(), "P", false);
    return "stab(" + render(convert(x.reduced, *basis)) + ")";
}

inline std::string render(const CharPolynomial& cp) {
    TermWriter w;
    for (const auto& [nu, c] : cp.terms) {
        std::string atom;
        auto n = nu.multiplicities();
        for (std::size_t i = 1; i < n.size(); ++i) {
            if (n[i] == 0) continue;
            if (!atom.empty()) atom += "*";
            std::string var = "m" + std::to_string(i);
            atom += n[i] == 1 ? var : "C(" + var + "," + std::to_string(n[i]) + ")";
        }
        w.add(Rational(c), atom);
    }
    return w.str();
}

// ---- LaTeX -----------------------------------------------------------------

inline std::string latex_subscript(const Partition& lam) {
    std::string out;
    bool wide = false;
    for (int x : lam) wide = wide || x > 9;
    for (int i = 0; i < lam.length(); ++i) {
        if (wide && i) out += ",";
        out += std::to_string(lam[i]);
    }
    return out.empty() ? "0" : out;
}

inline std::string latex_rational(const Rational& r) {
    if (is_integral(r)) return r.str();
    return "\\frac{" + numerator_of(r).str() + "}{" + denominator_of(r).str() + "}";
}

inline std::string latex_monomial(const Monomial& m) {
    std::string out;
    for (const auto& [name, e] : m.factors()) {
        std::string base = name;
        if (name.size() > 1 && std::isalpha(static_cast<unsigned char>(name[0])) &&
            std::all_of(name.begin() + 1, name.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
            base = name.substr(0, 1) + "_{" + name.substr(1) + "}";
        out += (out.empty() ? "" : " ") + base;
        if (e != 1) out += "^{" + std::to_string(e) + "}";
    }
    return out;
}

class LatexWriter {
public:
    void add(const Rational& c, const std::string& atom) {
        if (c.is_zero()) return;
        bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        std::string body = atom.empty() ? latex_rational(a) : (a == 1 ? atom : latex_rational(a) + atom);
        push(neg, body);
    }
    void add_group(const std::string& coeff, const std::string& atom) {
        push(false, "\\left(" + coeff + "\\right)" + atom);
    }
    std::string str() const { return out_.empty() ? "0" : out_; }

private:
    void push(bool neg, const std::string& body) {
        if (out_.empty()) out_ = neg ? "-" + body : body;
        else out_ += (neg ? " - " : " + ") + body;
    }
    std::string out_;
};

inline std::string render_latex(const ParamPoly& p) {
    LatexWriter w;
    for (const auto& [m, c] : p.terms()) w.add(c, latex_monomial(m));
    return w.str();
}

inline std::string latex_atom(const std::string& name, const Partition& lam) {
    if (name == "A") return "\\langle " + latex_subscript(lam) + "\\rangle";
    if (name == "P") return "\\langle\\langle " + latex_subscript(lam) + "\\rangle\\rangle";
    if (name == "ts") return "\\tilde s_{" + latex_subscript(lam) + "}";
    if (name == "th") return "\\tilde h_{" + latex_subscript(lam) + "}";
    if (name == "tx") return "\\tilde x_{" + latex_subscript(lam) + "}";
    return name + "_{" + latex_subscript(lam) + "}";
}

template <Coefficient C>
std::string render_latex_terms(const std::map<Partition, C>& terms, const std::string& name, bool empty_is_unit) {
    LatexWriter w;
    for (const auto& [lam, c] : terms) {
        std::string atom = (empty_is_unit && lam.empty()) ? "" : latex_atom(name, lam);
        if constexpr (std::is_same_v<C, Rational>) w.add(c, atom);
        else {
            if (c.is_constant()) w.add(c.constant_term(), atom);
            else w.add_group(render_latex(c), atom);
        }
    }
    return w.str();
}

template <Coefficient C>
std::string render_latex(const SymExpr<C>& f) {
    return render_latex_terms(f.terms(), std::string(1, basis_letter(f.basis())), true);
}

template <Coefficient C>
std::string render_latex(const StableChar<C>& x, std::optional<Basis> basis = std::nullopt) {
    if (!basis || *basis == Basis::s) return render_latex_terms(to_angle_basis(x).terms(), "A", false);
    if (*basis == Basis::h) return render_latex_terms(convert(x.reduced, Basis::h).terms(), "P", false);
    return "\\sigma_1\\cdot\\left(" + render_latex(convert(x.reduced, *basis)) + "\\right)";
}

inline std::string render_latex(const CharPolynomial& cp) {
    LatexWriter w;
    for (const auto& [nu, c] : cp.terms) {
        std::string atom;
        auto n = nu.multiplicities();
        for (std::size_t i = 1; i < n.size(); ++i) {
            if (n[i] == 0) continue;
            std::string var = "m_{" + std::to_string(i) + "}";
            atom += n[i] == 1 ? var : "{" + var + "\\choose " + std::to_string(n[i]) + "}";
        }
        w.add(Rational(c), atom);
    }
    return w.str();
}

// ---- JSON ------------------------------------------------------------------

inline nlohmann::json coeff_to_json(const Rational& r) { return rational_to_json(r); }
inline nlohmann::json coeff_to_json(const ParamPoly& p) { return param_poly_to_json(p); }

template <Coefficient C>
nlohmann::json to_json_value(const SymExpr<C>& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [lam, c] : f.terms()) terms.push_back({{"part", lam}, {"coeff", coeff_to_json(c)}});
    return {{"basis", std::string(1, basis_letter(f.basis()))}, {"terms", terms}};
}

inline SymExpr<Rational> sym_expr_from_json(const nlohmann::json& j) {
    auto b = basis_from_letter(j.at("basis").get<std::string>());
    if (!b) throw DomainError("unknown basis in JSON");
    SymExpr<Rational> f(*b);
    for (const auto& t : j.at("terms")) f.add_term(t.at("part").get<Partition>(), rational_from_json(t.at("coeff")));
    return f;
}

template <Coefficient C>
nlohmann::json to_json_value(const StableChar<C>& x) {
    return {{"reduced", to_json_value(x.reduced)}};
}

inline nlohmann::json to_json_value(const CharPolynomial& cp) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [nu, c] : cp.terms) {
        nlohmann::json coeff;
        if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
            coeff = c.convert_to<long long>();
        else coeff = c.str();
        out.push_back({{"nu", nu}, {"coeff", coeff}});
    }
    return out;
}

}  // namespace symcalc
