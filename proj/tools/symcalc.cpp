#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "symcalc/symcalc.hpp"

using namespace symcalc;
using nlohmann::json;

namespace {

constexpr int exit_parse = 2;
constexpr int exit_eval = 3;
constexpr int exit_io = 4;

const char* grammar_help = R"(Expression language:
  atoms      s[4,1] h[2] e[2] p[3] m[2,1]   symmetric functions
             A[1]  (stable <1>)   P[2] (stable <<2>>)   ts[2,2] th[1,1] tx[2]
  operators  +  -  *  (outer product)   #  (internal / stable Kronecker product)
             o  (outer plethysm)   ^k  (power)   / n  (division by a number)
  functions  ihat(g, f)   inner plethysm; f symmetric or stable
             D(f, g)      Foulkes derivative of g by f
             sp(f, g)     Hall scalar product
             shift(f, c)  f[X + c]
             eval_n(x, n) stable character x at S_n
             charpoly([2,2])  stab(f)  lie(n)  sigma()  invsigma()
  names other than atoms and functions are formal parameters, e.g. (1+t)*s[1].
Quote expressions in the shell: '*' and '#' are special there.)";

struct Common {
    std::string format = "text";
    std::optional<std::string> cache;
    std::optional<std::string> output;
};

OutputFormat format_of(const std::string& f) {
    if (f == "json") return OutputFormat::json;
    if (f == "latex") return OutputFormat::latex;
    return OutputFormat::text;
}

void emit(const Common& c, const std::string& text) {
    if (!c.output) {
        std::cout << text;
        return;
    }
    std::ofstream out(*c.output, std::ios::binary);
    if (!out) throw IOError("cannot open " + *c.output + " for writing");
    out << text;
    if (!out) throw IOError("write failed for " + *c.output);
}

std::string render_scalar(const ParamPoly& p, OutputFormat fmt) {
    return fmt == OutputFormat::latex ? render_latex(p) : render(p);
}

std::string render_int_map(const std::map<Partition, Integer>& m, OutputFormat fmt) {
    std::map<Partition, Rational> terms;
    for (const auto& [nu, c] : m) terms.emplace(nu, Rational(c));
    return fmt == OutputFormat::latex ? render_latex_terms(terms, "A", false) : render_terms(terms, "A", false);
}

json int_map_json(const std::map<Partition, Integer>& m) {
    json out = json::array();
    for (const auto& [nu, c] : m) out.push_back({{"part", nu}, {"coeff", c.str()}});
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symcalc: exact symmetric-function and stable-character calculator"};
    app.footer(grammar_help);
    app.require_subcommand(1);

    Common common;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", common.format, "text, json or latex")
            ->check(CLI::IsMember({"text", "json", "latex"}));
        sub->add_option("--cache", common.cache, "directory for persistent tables (default: $SYMCALC_CACHE)");
        sub->add_option("-o,--output", common.output, "write the result to a file instead of stdout");
    };

    std::string expr_text;
    std::string basis_text;
    std::optional<int> cap;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate an expression");
    eval_cmd->add_option("expression", expr_text, "expression to evaluate")->required();
    eval_cmd->add_option("--basis", basis_text, "output basis: s, h, e, m or p")
        ->check(CLI::IsMember({"s", "h", "e", "m", "p"}));
    eval_cmd->add_option("--cap", cap, "truncation degree for series (default 6)")->check(CLI::Range(0, 30));
    add_common(eval_cmd);

    std::string section;
    int max_degree = 4;
    std::optional<int> trunc;
    auto* tables_cmd = app.add_subcommand("tables", "print one of the reference tables");
    tables_cmd->add_option("--section", section, "section id")->required()->check(CLI::IsMember(table_sections()));
    tables_cmd->add_option("--max-degree", max_degree, "largest row degree")->check(CLI::Range(1, 8));
    tables_cmd->add_option("--trunc", trunc, "truncation degree of dual bases (default max-degree + 1)")
        ->check(CLI::Range(1, 8));
    add_common(tables_cmd);

    int n = 0;
    auto* braid_cmd = app.add_subcommand("braid", "graded character of the pure braid group cohomology");
    braid_cmd->add_option("--n", n, "number of strands")->required()->check(CLI::Range(1, 10));
    add_common(braid_cmd);

    std::string lambda_text, mu_text;
    auto* kron_cmd = app.add_subcommand("reduced-kron", "reduced Kronecker product <lambda> * <mu>");
    kron_cmd->add_option("--lambda", lambda_text, "partition, e.g. 2,1")->required();
    kron_cmd->add_option("--mu", mu_text, "partition, e.g. 1,1")->required();
    add_common(kron_cmd);

    auto* charpoly_cmd = app.add_subcommand("charpoly", "character polynomial of <lambda>");
    charpoly_cmd->add_option("--lambda", lambda_text, "partition, e.g. 2,2")->required();
    add_common(charpoly_cmd);

    auto* endo_cmd = app.add_subcommand("endofunctions", "signature polynomial of endofunction patterns");
    endo_cmd->add_option("--n", n, "size of the set")->required()->check(CLI::Range(1, 9));
    add_common(endo_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_parse;
    }

    if (!common.cache)
        if (const char* env = std::getenv("SYMCALC_CACHE"); env && *env) common.cache = env;
    cache().set_directory(common.cache ? std::optional<std::filesystem::path>(*common.cache) : std::nullopt);

    const OutputFormat fmt = format_of(common.format);
    try {
        if (*eval_cmd) {
            auto ast = parse_expression(expr_text);
            std::optional<Basis> basis;
            if (!basis_text.empty()) basis = basis_from_letter(basis_text);
            Evaluator ev({basis, cap});
            Value v = ev.eval(*ast);
            if (fmt == OutputFormat::json) {
                json doc = {{"expression", print_expression(*ast)},
                            {"type", value_type_name(v)},
                            {"caps", ev.caps_used()},
                            {"result", value_to_json(v, basis)}};
                emit(common, doc.dump() + "\n");
            } else {
                for (const auto& [what, c] : ev.caps_used())
                    std::cerr << "symcalc: " << what << " truncated at degree " << c << "\n";
                emit(common, render_value(v, basis, fmt) + "\n");
            }
        } else if (*tables_cmd) {
            std::string body = render_table(section, max_degree, trunc);
            if (fmt == OutputFormat::json) {
                json lines = json::array();
                std::size_t start = 0;
                for (std::size_t i; (i = body.find('\n', start)) != std::string::npos; start = i + 1)
                    lines.push_back(body.substr(start, i - start));
                json doc = {{"section", section},
                            {"max_degree", max_degree},
                            {"caps", {{"trunc", trunc.value_or(max_degree + 1)}}},
                            {"rows", lines}};
                emit(common, doc.dump() + "\n");
            } else {
                emit(common, body);
            }
        } else if (*braid_cmd) {
            auto f = braid_poincare(n);
            if (fmt == OutputFormat::json)
                emit(common, json{{"n", n}, {"result", to_json_value(f)}}.dump() + "\n");
            else emit(common, (fmt == OutputFormat::latex ? render_latex(f) : render(f)) + "\n");
        } else if (*kron_cmd) {
            auto r = reduced_kron(parse_partition(lambda_text), parse_partition(mu_text));
            if (fmt == OutputFormat::json) emit(common, json{{"result", int_map_json(r)}}.dump() + "\n");
            else emit(common, render_int_map(r, fmt) + "\n");
        } else if (*charpoly_cmd) {
            auto cp = character_polynomial(parse_partition(lambda_text));
            if (fmt == OutputFormat::json) emit(common, json{{"result", to_json_value(cp)}}.dump() + "\n");
            else emit(common, (fmt == OutputFormat::latex ? render_latex(cp) : render(cp)) + "\n");
        } else if (*endo_cmd) {
            auto sig = endofunction_signature(n);
            Rational total = 0;
            for (const auto& [m, c] : sig.terms()) total += c;
            if (fmt == OutputFormat::json)
                emit(common, json{{"n", n}, {"signature", param_poly_to_json(sig)}, {"total", total.str()}}.dump() + "\n");
            else emit(common, render_scalar(sig, fmt) + "\ntotal " + total.str() + "\n");
        }
    } catch (const ParseError& e) {
        std::cerr << "symcalc: parse error: " << e.what() << "\n";
        if (!expr_text.empty() && e.position <= expr_text.size())
            std::cerr << "  " << expr_text << "\n  " << std::string(e.position, ' ') << "^\n";
        return exit_parse;
    } catch (const IOError& e) {
        std::cerr << "symcalc: io error: " << e.what() << "\n";
        return exit_io;
    } catch (const std::exception& e) {
        std::cerr << "symcalc: error: " << e.what() << "\n";
        return exit_eval;
    }
    return 0;
}
