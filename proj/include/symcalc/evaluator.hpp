#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "applications.hpp"
#include "expression.hpp"
#include "render.hpp"
#include "stable.hpp"

namespace symcalc {

using Sym = SymExpr<ParamPoly>;
using Stable = StableChar<ParamPoly>;

/// Result of evaluating an expression: a coefficient, a symmetric function,
/// a stable character or a character polynomial.
using Value = std::variant<ParamPoly, Sym, Stable, CharPolynomial>;

inline const char* value_type_name(const Value& v) {
    switch (v.index()) {
    case 0: return "scalar";
    case 1: return "symfunc";
    case 2: return "stable";
    default: return "charpoly";
    }
}

struct EvalOptions {
    std::optional<Basis> basis;
    std::optional<int> cap;  // truncation degree for sigma() and invsigma()
};

class Evaluator {
public:
    static constexpr int default_cap = 6;

    explicit Evaluator(EvalOptions opts = {}) : opts_(opts) {}

    Value eval(const Expr& e) {
        switch (e.kind) {
        case Expr::Kind::number:
            return ParamPoly(Rational(e.number));
        case Expr::Kind::param:
            return ParamPoly::var(e.name);
        case Expr::Kind::atom:
            return atom(e);
        case Expr::Kind::partition:
            fail(e, "a bare partition is only valid as an argument of charpoly");
        case Expr::Kind::neg:
            return negate(e, eval(*e.args[0]));
        case Expr::Kind::binary:
            return binary(e);
        case Expr::Kind::call:
            return call(e);
        }
        fail(e, "unknown node");
    }

    /// Caps used while evaluating, by name; reported in output metadata.
    const std::map<std::string, int>& caps_used() const { return caps_; }

private:
    [[noreturn]] static void fail(const Expr& e, const std::string& msg) {
        throw EvaluationError(msg + " (at position " + std::to_string(e.pos) + ")");
    }

    int cap(const std::string& what) {
        int c = opts_.cap.value_or(default_cap);
        caps_[what] = c;
        return c;
    }

    Value atom(const Expr& e) {
        const auto& lam = e.part;
        if (auto b = basis_from_letter(e.name)) return lift(sym(*b, lam));
        if (e.name == "A") return Stable(lift(angle(lam).reduced));
        if (e.name == "P") return Stable(lift(dangle(lam).reduced));
        if (e.name == "ts") return lift(tilde_s(lam));
        if (e.name == "th") return lift(tilde_h(lam));
        if (e.name == "tx") return lift(tilde_x(lam));
        fail(e, "unknown atom " + e.name);
    }

    static Sym as_sym(const Value& v) {
        if (auto* c = std::get_if<ParamPoly>(&v)) return Sym::constant(*c, Basis::s);
        return std::get<Sym>(v);
    }

    Value negate(const Expr& e, const Value& v) {
        switch (v.index()) {
        case 0: return -std::get<ParamPoly>(v);
        case 1: return -std::get<Sym>(v);
        case 2: return -std::get<Stable>(v);
        default: {
            auto cp = std::get<CharPolynomial>(v);
            for (auto& [nu, c] : cp.terms) c = -c;
            return cp;
        }
        }
        fail(e, "cannot negate");
    }

    static Rational constant_of(const Expr& e, const Value& v, const char* what) {
        auto* c = std::get_if<ParamPoly>(&v);
        if (!c || !c->is_constant()) fail(e, std::string(what) + " must be a number");
        return c->constant_term();
    }

    static int integer_of(const Expr& e, const Value& v, const char* what) {
        Rational r = constant_of(e, v, what);
        if (!is_integral(r) || abs(r) > 1000000) fail(e, std::string(what) + " must be a small integer");
        return numerator_of(r).convert_to<int>();
    }

    Value add(const Expr& e, const Value& a, const Value& b, bool subtract) {
        const int sign = subtract ? -1 : 1;
        if (a.index() == 0 && b.index() == 0) {
            return subtract ? std::get<ParamPoly>(a) - std::get<ParamPoly>(b)
                            : std::get<ParamPoly>(a) + std::get<ParamPoly>(b);
        }
        if (a.index() <= 1 && b.index() <= 1) {
            auto x = as_sym(a), y = as_sym(b);
            return subtract ? x - y : x + y;
        }
        if (a.index() == 2 && b.index() == 2)
            return subtract ? std::get<Stable>(a) - std::get<Stable>(b) : std::get<Stable>(a) + std::get<Stable>(b);
        if (a.index() == 3 && b.index() == 3) {
            auto cp = std::get<CharPolynomial>(a);
            for (const auto& [nu, c] : std::get<CharPolynomial>(b).terms) cp.terms[nu] += sign * c;
            std::erase_if(cp.terms, [](const auto& kv) { return kv.second == 0; });
            return cp;
        }
        fail(e, std::string("cannot add ") + value_type_name(a) + " and " + value_type_name(b));
    }

    Value scale(const Value& v, const ParamPoly& c) {
        switch (v.index()) {
        case 0: return std::get<ParamPoly>(v) * c;
        case 1: return std::get<Sym>(v) * c;
        case 2: return std::get<Stable>(v) * c;
        default: break;
        }
        if (!c.is_constant() || !is_integral(c.constant_term()))
            throw EvaluationError("character polynomials take integer multiples only");
        auto cp = std::get<CharPolynomial>(v);
        for (auto& [nu, x] : cp.terms) x *= numerator_of(c.constant_term());
        std::erase_if(cp.terms, [](const auto& kv) { return kv.second == 0; });
        return cp;
    }

    Value binary(const Expr& e) {
        const std::string& op = e.name;
        if (op == "^") {
            Value base = eval(*e.args[0]);
            int k = integer_of(e, eval(*e.args[1]), "exponent");
            if (k < 0) fail(e, "negative exponent");
            if (auto* c = std::get_if<ParamPoly>(&base)) {
                ParamPoly r(1);
                for (int i = 0; i < k; ++i) r = r * *c;
                return r;
            }
            if (auto* f = std::get_if<Sym>(&base)) return power(*f, k);
            fail(e, std::string("cannot raise ") + value_type_name(base) + " to a power");
        }
        Value a = eval(*e.args[0]);
        Value b = eval(*e.args[1]);
        if (op == "+" || op == "-") return add(e, a, b, op == "-");
        if (op == "/") {
            Rational d = constant_of(e, b, "divisor");
            if (d.is_zero()) fail(e, "division by zero");
            return scale(a, ParamPoly(1 / d));
        }
        if (op == "*") {
            if (auto* c = std::get_if<ParamPoly>(&b)) return scale(a, *c);
            if (auto* c = std::get_if<ParamPoly>(&a)) return scale(b, *c);
            if (a.index() == 1 && b.index() == 1) return std::get<Sym>(a) * std::get<Sym>(b);
            fail(e, std::string("'*' is not defined on ") + value_type_name(a) + " and " + value_type_name(b) +
                        " (use '#' for stable Kronecker products)");
        }
        if (op == "#") {
            if (a.index() == 1 && b.index() == 1) return internal(std::get<Sym>(a), std::get<Sym>(b));
            if (a.index() == 2 && b.index() == 2) return stable_kron(std::get<Stable>(a), std::get<Stable>(b));
            fail(e, std::string("'#' is not defined on ") + value_type_name(a) + " and " + value_type_name(b));
        }
        if (op == "o") {
            if (a.index() == 1 && b.index() <= 1) return outer_plethysm(std::get<Sym>(a), as_sym(b));
            fail(e, std::string("'o' is not defined on ") + value_type_name(a) + " and " + value_type_name(b));
        }
        fail(e, "unknown operator " + op);
    }

    void arity(const Expr& e, std::size_t n) {
        if (e.args.size() != n)
            fail(e, e.name + " takes " + std::to_string(n) + " argument" + (n == 1 ? "" : "s"));
    }

    Sym sym_arg(const Expr& e, std::size_t i) {
        Value v = eval(*e.args[i]);
        if (v.index() > 1) fail(*e.args[i], e.name + ": argument " + std::to_string(i + 1) + " must be a symmetric function");
        return as_sym(v);
    }

    Value call(const Expr& e) {
        const std::string& f = e.name;
        if (f == "ihat") {
            arity(e, 2);
            Sym g = sym_arg(e, 0);
            Value x = eval(*e.args[1]);
            if (auto* st = std::get_if<Stable>(&x)) return stable_inner_plethysm(g, *st);
            if (x.index() > 1) fail(e, "ihat: second argument must be a symmetric function or stable character");
            return inner_plethysm(g, as_sym(x));
        }
        if (f == "D") {
            arity(e, 2);
            return foulkes_derivative(sym_arg(e, 0), sym_arg(e, 1));
        }
        if (f == "sp") {
            arity(e, 2);
            return scalar(sym_arg(e, 0), sym_arg(e, 1));
        }
        if (f == "shift") {
            arity(e, 2);
            Sym g = sym_arg(e, 0);
            return shift_alphabet(g, constant_of(*e.args[1], eval(*e.args[1]), "shift"));
        }
        if (f == "eval_n") {
            arity(e, 2);
            Value x = eval(*e.args[0]);
            auto* st = std::get_if<Stable>(&x);
            if (!st) fail(e, "eval_n: first argument must be a stable character");
            int n = integer_of(*e.args[1], eval(*e.args[1]), "n");
            if (n < 0) fail(e, "eval_n: n must be nonnegative");
            return evaluate_at_n(*st, n);
        }
        if (f == "charpoly") {
            arity(e, 1);
            if (e.args[0]->kind != Expr::Kind::partition) fail(e, "charpoly takes a partition, e.g. charpoly([2,2])");
            return character_polynomial(e.args[0]->part);
        }
        if (f == "stab") {
            arity(e, 1);
            return Stable(sym_arg(e, 0));
        }
        if (f == "lie") {
            arity(e, 1);
            int n = integer_of(*e.args[0], eval(*e.args[0]), "lie index");
            if (n < 1) fail(e, "lie: index must be positive");
            return lift(lie_character(n));
        }
        if (f == "sigma") {
            arity(e, 0);
            return lift(sigma_series(SeriesKind::sigma, 1, cap("sigma")).expr);
        }
        if (f == "invsigma") {
            arity(e, 0);
            return lift(invert_sigma(std::max(1, cap("invsigma"))).expr);
        }
        fail(e, "unknown function " + f);
    }

    EvalOptions opts_;
    std::map<std::string, int> caps_;
};

enum class OutputFormat { text, json, latex };

/// Renders a value in the requested basis: Schur by default for symmetric
/// functions, the <nu> expansion by default for stable characters.
inline std::string render_value(const Value& v, std::optional<Basis> basis, OutputFormat fmt) {
    if (fmt == OutputFormat::latex) {
        switch (v.index()) {
        case 0: return render_latex(std::get<ParamPoly>(v));
        case 1: return render_latex(convert(std::get<Sym>(v), basis.value_or(Basis::s)));
        case 2: return render_latex(std::get<Stable>(v), basis);
        default: return render_latex(std::get<CharPolynomial>(v));
        }
    }
    switch (v.index()) {
    case 0: return render(std::get<ParamPoly>(v));
    case 1: return render(convert(std::get<Sym>(v), basis.value_or(Basis::s)));
    case 2: return render(std::get<Stable>(v), basis);
    default: return render(std::get<CharPolynomial>(v));
    }
}

inline nlohmann::json value_to_json(const Value& v, std::optional<Basis> basis) {
    switch (v.index()) {
    case 0: return param_poly_to_json(std::get<ParamPoly>(v));
    case 1: return to_json_value(convert(std::get<Sym>(v), basis.value_or(Basis::s)));
    case 2: {
        const auto& st = std::get<Stable>(v);
        nlohmann::json out = {{"reduced", to_json_value(convert(st.reduced, basis.value_or(Basis::s)))}};
        nlohmann::json angles = nlohmann::json::array();
        for (const auto& [nu, c] : to_angle_basis(st).terms())
            angles.push_back({{"part", nu}, {"coeff", param_poly_to_json(c)}});
        out["angle"] = angles;
        return out;
    }
    default: return to_json_value(std::get<CharPolynomial>(v));
    }
}

}  // namespace symcalc
