#pragma once

#include <cctype>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"
#include "rational.hpp"

namespace symcalc {

/// Abstract syntax tree of the expression language.
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '#' | '/') unary)*
///   unary   := '-' unary | pleth
///   pleth   := power ('o' power)*
///   power   := primary ('^' INT)?
///   primary := INT | NAME '[' parts ']' | NAME '(' args ')' | NAME | '[' parts ']' | '(' expr ')'
///
/// '*' is the outer product, '#' the internal (or stable Kronecker) product
/// and 'o' outer plethysm. Atom names: s h e p m A P ts th tx. Any other bare
/// name is a formal parameter.
struct Expr {
    enum class Kind { number, param, atom, partition, neg, binary, call };

    Kind kind;
    std::size_t pos = 0;
    Integer number;                       // number
    std::string name;                     // param, atom, call; binary operator symbol
    Partition part;                       // atom, partition
    std::vector<std::shared_ptr<const Expr>> args;  // neg: 1, binary: 2, call: n

    friend bool operator==(const Expr& a, const Expr& b) {
        if (a.kind != b.kind || a.number != b.number || a.name != b.name || a.part != b.part ||
            a.args.size() != b.args.size())
            return false;
        for (std::size_t i = 0; i < a.args.size(); ++i)
            if (!(*a.args[i] == *b.args[i])) return false;
        return true;
    }
};

using ExprPtr = std::shared_ptr<const Expr>;

inline bool is_atom_name(const std::string& n) {
    static const char* names[] = {"s", "h", "e", "p", "m", "A", "P", "ts", "th", "tx"};
    for (const char* x : names)
        if (n == x) return true;
    return false;
}

inline const std::vector<std::string>& function_names() {
    static const std::vector<std::string> names = {"ihat", "D",     "sp",    "shift", "eval_n",
                                                   "charpoly", "stab", "lie", "sigma", "invsigma"};
    return names;
}

class Parser {
public:
    explicit Parser(std::string text) : text_(std::move(text)) {}

    ExprPtr parse() {
        auto e = expr();
        skip_ws();
        if (i_ != text_.size()) fail("unexpected '" + std::string(1, text_[i_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, i_); }

    void skip_ws() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
    }

    bool peek(char c) {
        skip_ws();
        return i_ < text_.size() && text_[i_] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++i_;
        return true;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
    static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

    /// True when the next token is the plethysm operator 'o' (a lone identifier "o").
    bool peek_pleth() {
        skip_ws();
        if (i_ >= text_.size() || text_[i_] != 'o') return false;
        return i_ + 1 >= text_.size() || !ident_char(text_[i_ + 1]);
    }

    static ExprPtr make(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

    ExprPtr binary(const std::string& op, ExprPtr a, ExprPtr b, std::size_t pos) {
        Expr e{Expr::Kind::binary};
        e.pos = pos;
        e.name = op;
        e.args = {std::move(a), std::move(b)};
        return make(std::move(e));
    }

    ExprPtr expr() {
        auto lhs = term();
        while (true) {
            skip_ws();
            std::size_t pos = i_;
            if (accept('+')) lhs = binary("+", lhs, term(), pos);
            else if (accept('-')) lhs = binary("-", lhs, term(), pos);
            else return lhs;
        }
    }

    ExprPtr term() {
        auto lhs = unary();
        while (true) {
            skip_ws();
            std::size_t pos = i_;
            if (accept('*')) lhs = binary("*", lhs, unary(), pos);
            else if (accept('#')) lhs = binary("#", lhs, unary(), pos);
            else if (accept('/')) lhs = binary("/", lhs, unary(), pos);
            else return lhs;
        }
    }

    ExprPtr unary() {
        skip_ws();
        std::size_t pos = i_;
        if (accept('-')) {
            Expr e{Expr::Kind::neg};
            e.pos = pos;
            e.args = {unary()};
            return make(std::move(e));
        }
        return pleth();
    }

    ExprPtr pleth() {
        auto lhs = power();
        while (peek_pleth()) {
            std::size_t pos = i_;
            ++i_;
            lhs = binary("o", lhs, power(), pos);
        }
        return lhs;
    }

    ExprPtr power() {
        auto base = primary();
        skip_ws();
        std::size_t pos = i_;
        if (accept('^')) {
            skip_ws();
            std::size_t npos = i_;
            auto digits = read_digits();
            if (digits.empty()) fail("expected an exponent");
            Expr n{Expr::Kind::number};
            n.pos = npos;
            n.number = Integer(digits);
            return binary("^", base, make(std::move(n)), pos);
        }
        return base;
    }

    std::string read_digits() {
        std::string d;
        while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) d += text_[i_++];
        return d;
    }

    Partition partition_body() {
        // after '['
        std::vector<int> parts;
        skip_ws();
        if (accept(']')) return Partition{};
        while (true) {
            skip_ws();
            std::size_t pos = i_;
            auto d = read_digits();
            if (d.empty()) fail("expected a partition part");
            if (d.size() > 6) throw ParseError("partition part too large", pos);
            parts.push_back(std::stoi(d));
            if (accept(']')) break;
            expect(',');
        }
        try {
            return Partition(std::move(parts));
        } catch (const DomainError& ex) {
            fail(ex.what());
        }
    }

    ExprPtr primary() {
        skip_ws();
        std::size_t pos = i_;
        if (i_ >= text_.size()) fail("unexpected end of input");
        char c = text_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Expr e{Expr::Kind::number};
            e.pos = pos;
            e.number = Integer(read_digits());
            return make(std::move(e));
        }
        if (accept('(')) {
            auto e = expr();
            expect(')');
            return e;
        }
        if (accept('[')) {
            Expr e{Expr::Kind::partition};
            e.pos = pos;
            e.part = partition_body();
            return make(std::move(e));
        }
        if (ident_start(c)) {
            std::string name;
            while (i_ < text_.size() && ident_char(text_[i_])) name += text_[i_++];
            if (name == "o") {
                i_ = pos;
                fail("expected an operand before 'o'");
            }
            if (is_atom_name(name) && peek('[')) {
                ++i_;
                Expr e{Expr::Kind::atom};
                e.pos = pos;
                e.name = name;
                e.part = partition_body();
                return make(std::move(e));
            }
            if (peek('(')) {
                ++i_;
                Expr e{Expr::Kind::call};
                e.pos = pos;
                e.name = name;
                bool known = false;
                for (const auto& f : function_names()) known = known || f == name;
                if (!known) throw ParseError("unknown function '" + name + "'", pos);
                if (!accept(')')) {
                    while (true) {
                        e.args.push_back(expr());
                        if (accept(')')) break;
                        expect(',');
                    }
                }
                return make(std::move(e));
            }
            if (is_atom_name(name)) throw ParseError("atom '" + name + "' needs a partition, e.g. " + name + "[2,1]", pos);
            Expr e{Expr::Kind::param};
            e.pos = pos;
            e.name = name;
            return make(std::move(e));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string text_;
    std::size_t i_ = 0;
};

inline ExprPtr parse_expression(const std::string& text) { return Parser(text).parse(); }

namespace detail {

inline int precedence(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::binary:
        if (e.name == "+" || e.name == "-") return 1;
        if (e.name == "*" || e.name == "#" || e.name == "/") return 2;
        if (e.name == "o") return 4;
        return 5;  // ^
    case Expr::Kind::neg:
        return 3;
    default:
        return 6;
    }
}

}  // namespace detail

/// Prints an AST back to the surface syntax, with the minimal parentheses
/// needed for parse(print(e)) == e.
inline std::string print_expression(const Expr& e) {
    auto wrap = [](const Expr& child, bool need) {
        std::string s = print_expression(child);
        return need ? "(" + s + ")" : s;
    };
    switch (e.kind) {
    case Expr::Kind::number:
        return e.number.str();
    case Expr::Kind::param:
        return e.name;
    case Expr::Kind::atom:
        return e.name + to_string(e.part);
    case Expr::Kind::partition:
        return to_string(e.part);
    case Expr::Kind::neg:
        return "-" + wrap(*e.args[0], detail::precedence(*e.args[0]) < 3);
    case Expr::Kind::call: {
        std::string out = e.name + "(";
        for (std::size_t i = 0; i < e.args.size(); ++i) out += (i ? ", " : "") + print_expression(*e.args[i]);
        return out + ")";
    }
    case Expr::Kind::binary: {
        int p = detail::precedence(e);
        const Expr& a = *e.args[0];
        const Expr& b = *e.args[1];
        // left-associative levels: the right operand needs parentheses at equal precedence
        bool left_paren = detail::precedence(a) < p || (e.name == "^" && detail::precedence(a) <= p);
        bool right_paren = detail::precedence(b) <= p;
        if (e.name == "^") right_paren = false;
        std::string op = e.name == "o" ? " o " : (e.name == "^" ? "^" : " " + e.name + " ");
        return wrap(a, left_paren) + op + wrap(b, right_paren);
    }
    }
    return "";
}

}  // namespace symcalc
