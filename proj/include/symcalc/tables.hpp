#pragma once

#include <optional>
#include <string>
#include <vector>

#include "render.hpp"
#include "stable.hpp"

namespace symcalc {

inline const std::vector<std::string>& table_sections() {
    static const std::vector<std::string> ids = {"inner-plethysm", "perm-chars",  "tilde-s-dual",
                                                 "schur-on-tilde-s", "tilde-h-dual", "h-on-tilde-h"};
    return ids;
}

namespace detail {

inline std::vector<Partition> table_rows(int max_degree) {
    std::vector<Partition> rows;
    for (int n = 1; n <= max_degree; ++n)
        for (auto& lam : partitions_of(n)) rows.push_back(std::move(lam));
    return rows;
}

inline std::string render_column(const TransitionMatrix& t, const Partition& lam, const std::string& name) {
    std::map<Partition, Rational> terms;
    for (const auto& mu : t.index) {
        const Rational& c = t.at(lam, mu);
        if (!c.is_zero()) terms.emplace(mu, c);
    }
    return render_terms(terms, name, false);
}

}  // namespace detail

/// One line per partition of size 1..max_degree. The dual-basis sections are
/// truncated at degree trunc (default max_degree + 1).
inline std::string render_table(const std::string& section, int max_degree, std::optional<int> trunc = std::nullopt) {
    if (max_degree < 1) throw DomainError("tables: max_degree must be at least 1");
    const int cap = trunc.value_or(max_degree + 1);
    if (cap < max_degree) throw DomainError("tables: truncation below max_degree");
    const auto rows = detail::table_rows(max_degree);
    std::string out;
    auto line = [&](const std::string& l) { out += l + "\n"; };

    if (section == "inner-plethysm") {
        for (const auto& mu : rows)
            line("[[" + atom_text("h", mu) + "]] = <<" +
                 render_terms(stable_bracket(h(mu)).reduced.terms(), "h", false) + ">>");
    } else if (section == "perm-chars") {
        for (const auto& mu : rows)
            line("<<" + atom_text("h", mu) + ">> = [[" +
                 render_terms(stable_preimage(dangle(mu)).terms(), "h", false) + "]]");
    } else if (section == "tilde-s-dual") {
        for (const auto& mu : rows)
            line(atom_text("ts", mu) + "^* = " + render_terms(tilde_s_dual(mu, cap).terms(), "s", false));
    } else if (section == "schur-on-tilde-s") {
        auto t = transition(TransitionKind::a, max_degree);
        for (const auto& lam : rows) line(atom_text("s", lam) + " = " + detail::render_column(t, lam, "ts"));
    } else if (section == "tilde-h-dual") {
        for (const auto& mu : rows)
            line(atom_text("th", mu) + "^* = " + render_terms(tilde_h_dual(mu, cap).terms(), "m", false));
    } else if (section == "h-on-tilde-h") {
        auto t = transition(TransitionKind::c, max_degree);
        for (const auto& lam : rows) line(atom_text("h", lam) + " = " + detail::render_column(t, lam, "th"));
    } else {
        throw DomainError("unknown table section '" + section + "'");
    }
    return out;
}

}  // namespace symcalc
