#include "hopflab/report.hpp"

#include <cmath>
#include <cstdio>

namespace hopflab {

double round15(double x) {
    if (!std::isfinite(x) || x == 0) return x;
    return std::stod(format15(x));
}

std::string format15(double x) {
    if (std::isnan(x)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x == 0 ? 0.0 : x);  // folds -0 into 0
    return buf;
}

namespace {

json number(double x) {
    if (!std::isfinite(x)) return nullptr;
    return round15(x);
}

}  // namespace

json to_json(const AxiomReport& r, std::size_t max_witnesses) {
    json axioms = json::array();
    for (const auto& a : r.results) {
        json w = json::array();
        for (std::size_t k = 0; k < a.witnesses.size() && k < max_witnesses; ++k)
            w.push_back({{"side", a.witnesses[k].side},
                         {"element", a.witnesses[k].element.str()},
                         {"residual", a.witnesses[k].residual.str()}});
        axioms.push_back({{"axiom", axiom_name(a.axiom)},
                          {"pass", a.pass},
                          {"witness_count", a.witnesses.size()},
                          {"witnesses", w}});
    }
    return {{"degree", r.degree}, {"all_pass", r.all_pass()}, {"axioms", axioms}};
}

json to_json(const std::vector<CriticalPair>& pairs, const Presentation& pres) {
    json out = json::array();
    for (const auto& p : pairs)
        out.push_back({{"overlap", pres.word_str(p.overlap)},
                       {"rule_a", p.rule_a},
                       {"rule_b", p.rule_b},
                       {"residual", pres.terms_str(p.residual)}});
    return out;
}

json to_json(const std::vector<StarDefect>& defects, const Presentation& pres) {
    json out = json::array();
    for (const auto& d : defects)
        out.push_back({{"relation", pres.terms_str(pres.relation(d.rule))}, {"residual", pres.terms_str(d.residual)}});
    return out;
}

json to_json(const PairingCompatReport& r) {
    json d = json::array();
    for (const auto& x : r.defects)
        d.push_back({{"kind", x.kind}, {"left", x.left}, {"right", x.right}, {"lhs", x.lhs.str()}, {"rhs", x.rhs.str()}});
    return {{"degree", r.degree}, {"checked", r.checked}, {"compatible", r.compatible()}, {"defects", d}};
}

json to_json(const ResidualReport& r) {
    json out = json::array();
    for (const auto& x : r.relations)
        out.push_back({{"relation", x.relation},
                       {"interior", number(x.interior)},
                       {"edge", number(x.edge)},
                       {"interior_exact_zero", x.interior_exact_zero},
                       {"edge_exact_zero", x.edge_exact_zero}});
    return out;
}

json to_json(const ConvergenceStudy& s) {
    json rows = json::array();
    for (std::size_t k = 0; k < s.h.size(); ++k)
        rows.push_back({{"h", number(s.h[k])},
                        {"residual", number(s.residual[k])},
                        {"order", k == 0 ? json(nullptr) : number(s.order[k - 1])}});
    return {{"steps", rows}, {"fitted_order", number(s.fitted_order)}};
}

json to_json(const QuadraticSurd& x) { return {{"exact", x.str()}, {"value", number(x.to_double())}}; }

std::string csv_table(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows) {
    std::string out;
    for (std::size_t k = 0; k < header.size(); ++k) out += (k ? "," : "") + header[k];
    out += "\n";
    for (const auto& row : rows) {
        for (std::size_t k = 0; k < row.size(); ++k) out += (k ? "," : "") + format15(row[k]);
        out += "\n";
    }
    return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace hopflab
