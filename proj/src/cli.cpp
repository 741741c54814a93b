#include "hopflab/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hopflab/errors.hpp"
#include "hopflab/models.hpp"
#include "hopflab/report.hpp"
#include "hopflab/two_particle.hpp"

namespace hopflab {

namespace {

using Bindings = std::map<std::string, mpq_class>;

mpq_class parse_rational(const std::string& text, const std::string& what) {
    try {
        mpq_class q(text);
        q.canonicalize();
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
        return q;
    } catch (const std::invalid_argument&) {
        throw UsageError(what + " must be a rational number such as 3 or -1/2, got '" + text + "'");
    }
}

double parse_real(const std::string& text, const std::string& what) {
    if (text.find('/') != std::string::npos) return parse_rational(text, what).get_d();
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size() || !std::isfinite(v)) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw UsageError(what + " must be a number, got '" + text + "'");
    }
}

Bindings parse_bindings(const std::vector<std::string>& items) {
    Bindings out;
    for (const auto& item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("binding must look like name=value, got '" + item + "'");
        out[item.substr(0, eq)] = parse_rational(item.substr(eq + 1), "binding '" + item.substr(0, eq) + "'");
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << content;
}

// A path to an .alg file or the name of a catalog model.
AlgebraDocument load_algebra(const std::string& target, const Bindings& bindings) {
    if (std::filesystem::is_regular_file(target)) {
        AlgebraDocument d = parse_algebra(read_file(target));
        if (bindings.empty()) return d;
        for (const auto& [name, v] : bindings)
            if (!d.pres->has_param(name)) throw UsageError("'" + d.pres->name() + "' has no parameter '" + name + "'");
        AlgebraDocument out;
        out.pres = d.pres->bind(bindings);
        if (d.hopf) out.hopf = d.hopf->bind(out.pres, bindings);
        return out;
    }
    if (has_model(target)) return build_model(target, bindings).document();
    throw UsageError("'" + target + "' is neither a readable file nor a catalog model");
}

void emit_json(const json& j, bool to_stdout, const std::string& path, std::ostream& out) {
    if (to_stdout) out << dump(j);
    if (!path.empty()) write_file(path, dump(j));
}

const char* verdict(bool pass) { return pass ? "pass" : "FAIL"; }

// ---------------------------------------------------------------- check

struct CheckOptions {
    std::string target;
    int degree = 3;
    bool json = false;
    std::string out;
    std::vector<std::string> bind;
    std::size_t max_witnesses = 10;
};

int cmd_check(const CheckOptions& o, std::ostream& out) {
    const AlgebraDocument doc = load_algebra(o.target, parse_bindings(o.bind));
    const Presentation& P = *doc.pres;
    const auto cps = critical_pairs(P);
    const auto stars = star_closure_defects(P);
    std::optional<AxiomReport> axioms;
    if (doc.hopf) axioms = check_hopf(P, *doc.hopf, o.degree);
    else if (o.degree < 1) throw UsageError("degree must be at least 1");
    const bool pass = cps.empty() && stars.empty() && (!axioms || axioms->all_pass());

    json j = {{"model", P.name()},
              {"degree", o.degree},
              {"confluence", {{"pass", cps.empty()}, {"critical_pairs", to_json(cps, P)}}},
              {"star_closure", {{"pass", stars.empty()}, {"defects", to_json(stars, P)}}},
              {"hopf", axioms ? to_json(*axioms, o.max_witnesses) : json(nullptr)},
              {"all_pass", pass}};
    if (o.json) {
        emit_json(j, true, o.out, out);
    } else {
        emit_json(j, false, o.out, out);
        out << "model " << P.name() << " (degree " << o.degree << ")\n";
        if (axioms) {
            for (const auto& a : axioms->results) {
                out << "  " << axiom_name(a.axiom) << ": " << verdict(a.pass);
                if (!a.pass) out << " (" << a.witnesses.size() << " witnesses)";
                out << "\n";
                for (std::size_t k = 0; k < a.witnesses.size() && k < 3; ++k)
                    out << "    " << a.witnesses[k].side << " on " << a.witnesses[k].element.str() << ": "
                        << a.witnesses[k].residual.str() << "\n";
            }
        } else {
            out << "  no Hopf data\n";
        }
        out << "  confluence: " << verdict(cps.empty()) << "\n";
        for (const auto& c : cps) out << "    " << P.word_str(c.overlap) << ": " << P.terms_str(c.residual) << "\n";
        out << "  star-closure: " << verdict(stars.empty()) << "\n";
        for (const auto& s : stars)
            out << "    " << P.terms_str(P.relation(s.rule)) << ": " << P.terms_str(s.residual) << "\n";
        out << "result: " << verdict(pass) << "\n";
    }
    return pass ? exit_pass : exit_fail;
}

// ---------------------------------------------------------------- nf

struct NfOptions {
    std::string expr;
    std::string model;
    std::vector<std::string> bind;
    bool json = false;
};

int cmd_nf(const NfOptions& o, std::ostream& out) {
    const AlgebraDocument doc = load_algebra(o.model, parse_bindings(o.bind));
    const NCPoly nf = reduce(parse_element(doc.pres, o.expr));
    if (o.json)
        out << dump({{"model", doc.pres->name()}, {"input", o.expr}, {"normal_form", nf.str()}});
    else
        out << nf.str() << "\n";
    return exit_pass;
}

// ---------------------------------------------------------------- pair

struct PairOptions {
    std::string a;
    std::string b;
    std::string table = "xP-duality";
    std::string model_a;
    std::vector<std::string> bind;
    bool compat = false;
    int degree = 2;
    bool json = false;
    std::string out;
};

int cmd_pair(const PairOptions& o, std::ostream& out) {
    const PairingSetup s = build_pairing(o.table, parse_bindings(o.bind), o.model_a);
    if (o.compat) {
        const PairingCompatReport r = check_pairing_compat(s.hopf_a, s.hopf_b, s.table, o.degree);
        json j = to_json(r);
        j["table"] = s.table.name;
        j["model_a"] = s.table.model_a;
        j["model_b"] = s.table.model_b;
        if (o.json) {
            emit_json(j, true, o.out, out);
        } else {
            emit_json(j, false, o.out, out);
            out << s.table.model_a << " / " << s.table.model_b << " at degree " << o.degree << ": "
                << (r.compatible() ? "compatible" : "INCOMPATIBLE") << " (" << r.checked << " checks, "
                << r.defects.size() << " defects)\n";
            for (const auto& d : r.defects)
                out << "  " << d.kind << " " << d.left << " against " << d.right << ": " << d.lhs.str()
                    << " != " << d.rhs.str() << "\n";
        }
        return r.compatible() ? exit_pass : exit_fail;
    }
    if (o.a.empty() || o.b.empty()) throw UsageError("pair needs two elements, or --compat");
    const NCPoly a = parse_element(s.hopf_a.pres, o.a);
    const NCPoly b = parse_element(s.hopf_b.pres, o.b);
    const Scalar v = pair(a, b, s.table, s.hopf_a, s.hopf_b);
    if (o.json)
        emit_json({{"table", s.table.name}, {"a", o.a}, {"b", o.b}, {"value", v.str()}}, true, o.out, out);
    else
        out << v.str() << "\n";
    return exit_pass;
}

// ---------------------------------------------------------------- models

struct ModelsOptions {
    bool json = false;
    std::string export_dir;
};

int cmd_models(const ModelsOptions& o, std::ostream& out) {
    if (!o.export_dir.empty()) {
        std::filesystem::create_directories(o.export_dir);
        for (const auto& m : list_models())
            write_file((std::filesystem::path(o.export_dir) / (m.name + ".alg")).string(),
                       print_algebra(build_model(m.name).document()));
    }
    if (o.json) {
        json list = json::array();
        for (const auto& m : list_models())
            list.push_back({{"name", m.name},
                            {"anchor", m.anchor},
                            {"notes", m.notes},
                            {"params", m.params},
                            {"hopf", m.has_hopf},
                            {"known_failing", m.known_failing},
                            {"star_consistent", m.star_consistent},
                            {"pairings", m.pairings}});
        out << dump({{"models", list}, {"pairings", list_pairings()}});
        return exit_pass;
    }
    for (const auto& m : list_models()) {
        std::string params;
        for (const auto& p : m.params) params += (params.empty() ? "" : ",") + p;
        out << m.name << "(" << params << ")";
        if (m.has_hopf) out << " [hopf]";
        if (m.known_failing) out << " [known-failing]";
        if (!m.star_consistent) out << " [star-inconsistent]";
        out << "  " << m.anchor << "\n";
    }
    out << "pairing tables:";
    for (const auto& p : list_pairings()) out << " " << p;
    out << "\n";
    return exit_pass;
}

// ---------------------------------------------------------------- podles

struct PodlesOptions {
    std::string mu = "1/2";
    std::string c = "0";
    std::string sign = "plus";
    int dim = 8;
    std::string spectrum_csv;
    bool json = false;
    std::string out;
};

int cmd_podles(const PodlesOptions& o, std::ostream& out) {
    const MatrixRep rep = build_rep(parse_branch(o.sign), parse_rational(o.mu, "--mu"), parse_rational(o.c, "--c"), o.dim);
    const ResidualReport res = relation_residuals(rep);
    const std::vector<double> ev = spectrum(rep);
    const std::vector<QuadraticSurd> exact = spectrum_exact(rep);
    double err = 0;
    json spec = json::array();
    std::vector<std::vector<double>> rows;
    for (int k = 0; k < rep.dim; ++k) {
        err = std::max(err, std::abs(ev[k] - exact[k].to_double()));
        spec.push_back({{"k", k}, {"exact", exact[k].str()}, {"value", round15(ev[k])}});
        rows.push_back({static_cast<double>(k), ev[k]});
    }
    const QuadraticSurd c_edge = rep.ck[rep.dim];
    const double edge = res.at("B*Bs - (mu^2*A - mu^4*A^2 + c)").edge;
    const double edge_err = std::abs(edge - std::abs(c_edge.to_double()));
    const bool pass = res.interior_zero() && err <= 1e-12 && edge_err <= 1e-12 && rep.ck[0].is_zero();

    if (!o.spectrum_csv.empty()) write_file(o.spectrum_csv, csv_table({"k", "eigenvalue"}, rows));
    json j = {{"sign", branch_name(rep.sign)},
              {"mu", rep.mu.get_str()},
              {"c", rep.c.get_str()},
              {"dim", rep.dim},
              {"lambda", to_json(rep.lambda)},
              {"c_0", to_json(rep.ck[0])},
              {"c_N", to_json(c_edge)},
              {"residuals", to_json(res)},
              {"spectrum", spec},
              {"spectrum_max_error", round15(err)},
              {"edge_error", round15(edge_err)},
              {"pass", pass}};
    if (o.json) {
        emit_json(j, true, o.out, out);
    } else {
        emit_json(j, false, o.out, out);
        out << "podles " << branch_name(rep.sign) << " mu=" << rep.mu << " c=" << rep.c << " N=" << rep.dim
            << "  lambda = " << rep.lambda.str() << "\n";
        for (const auto& r : res.relations)
            out << "  " << r.relation << ": interior " << (r.interior_exact_zero ? "0 (exact)" : format15(r.interior))
                << ", edge " << format15(r.edge) << "\n";
        out << "  c(N) = " << c_edge.str() << " ~ " << format15(c_edge.to_double()) << "\n";
        out << "  spectrum max error " << format15(err) << "\n";
        out << "result: " << verdict(pass) << "\n";
    }
    return pass ? exit_pass : exit_fail;
}

// ---------------------------------------------------------------- twoparticle

struct TwoParticleOptions {
    std::string energies = "1,3";
    bool json = false;
    std::string out;
};

int cmd_twoparticle(const TwoParticleOptions& o, std::ostream& out) {
    std::vector<double> e;
    std::stringstream ss(o.energies);
    for (std::string item; std::getline(ss, item, ',');) e.push_back(parse_real(item, "--energies"));
    if (e.size() != 2) throw UsageError("--energies takes two values, for e_{-1/2} and e_{+1/2}");
    Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(2, 2);
    H(0, 0) = e[0];
    H(1, 1) = e[1];
    const TwoParticleSystem sys = compose_hamiltonian(H);
    const Eigen::VectorXcd v = singlet();
    const Eigen::VectorXcd Kv = sys.K.cast<std::complex<double>>() * v;
    const bool antisymmetric = Kv == -v;
    const double eigen = e[0] + e[1];
    const double h2_res = (sys.H2 * v - eigen * v).norm();
    const double entropy = entanglement_entropy(v, 2, 2);
    const Eigen::VectorXd schmidt = schmidt_coefficients(v, 2, 2);
    const bool pass = antisymmetric && h2_res <= 1e-12 && std::abs(entropy - std::log(2.0)) <= 1e-12;

    json state = json::array();
    for (Eigen::Index k = 0; k < v.size(); ++k) state.push_back({round15(v(k).real()), round15(v(k).imag())});
    json sc = json::array();
    for (Eigen::Index k = 0; k < schmidt.size(); ++k) sc.push_back(round15(schmidt(k)));
    json j = {{"energies", {round15(e[0]), round15(e[1])}},
              {"state", state},
              {"norm_squared", round15(v.squaredNorm())},
              {"flip_antisymmetric", antisymmetric},
              {"h2_eigenvalue", round15(eigen)},
              {"h2_residual", round15(h2_res)},
              {"entropy", round15(entropy)},
              {"schmidt", sc},
              {"pass", pass}};
    if (o.json) {
        emit_json(j, true, o.out, out);
    } else {
        emit_json(j, false, o.out, out);
        out << "singlet v = e(+1/2)(x)e(-1/2) - e(-1/2)(x)e(+1/2), <v,v> = " << format15(v.squaredNorm()) << "\n";
        out << "  Kv = -v: " << (antisymmetric ? "yes" : "no") << "\n";
        out << "  |H2 v - " << format15(eigen) << " v| = " << format15(h2_res) << "\n";
        out << "  entropy " << format15(entropy) << " (ln 2 = " << format15(std::log(2.0)) << ")\n";
        out << "result: " << verdict(pass) << "\n";
    }
    return pass ? exit_pass : exit_fail;
}

// ---------------------------------------------------------------- igl

struct IglOptions {
    std::string lambda = "-1";
    std::string kappa = "1";
    int grid = 256;
    int refine = 4;
    std::string xi_min = "1/16";
    std::string csv;
    bool json = false;
    std::string out;
};

int cmd_igl(const IglOptions& o, std::ostream& out) {
    const double lambda = parse_real(o.lambda, "--lambda"), kappa = parse_real(o.kappa, "--kappa");
    if (o.refine < 1) throw UsageError("--refine must be at least 1");
    const LogGrid base(parse_real(o.xi_min, "--xi-min"), default_grid().ratio, o.grid);
    const auto pairs = refinement_sequence(lambda, kappa, base, o.refine);
    const ConvergenceStudy s = convergence_order(pairs);
    const bool exact_zero = std::all_of(s.residual.begin(), s.residual.end(), [](double r) { return r == 0; });
    bool in_band = std::abs(s.fitted_order - 2) <= 0.2;
    for (double q : s.order) in_band = in_band && std::abs(q - 2) <= 0.2;
    const Eigen::VectorXd x1 = x1_spectrum(pairs.front());
    const bool positive = kappa * lambda < 0 ? x1.minCoeff() > 0 : true;
    const bool pass = (exact_zero || in_band) && positive;

    std::vector<std::vector<double>> rows;
    for (std::size_t k = 0; k < s.h.size(); ++k)
        rows.push_back({s.h[k], s.residual[k], k == 0 ? std::nan("") : s.order[k - 1]});
    if (!o.csv.empty()) write_file(o.csv, csv_table({"h", "residual", "order"}, rows));
    json j = {{"lambda", round15(lambda)},
              {"kappa", round15(kappa)},
              {"grid", {{"xi_min", round15(base.xi_min)}, {"ratio", round15(base.ratio)}, {"size", base.size}}},
              {"refinements", o.refine},
              {"convergence", to_json(s)},
              {"x1_min", round15(x1.minCoeff())},
              {"x1_max", round15(x1.maxCoeff())},
              {"x1_positive", x1.minCoeff() > 0},
              {"pass", pass}};
    if (o.json) {
        emit_json(j, true, o.out, out);
    } else {
        emit_json(j, false, o.out, out);
        out << "h,residual,order\n";
        for (const auto& r : rows) out << format15(r[0]) << "," << format15(r[1]) << "," << format15(r[2]) << "\n";
        out << "fitted order " << format15(s.fitted_order) << "\n";
        out << "result: " << verdict(pass) << "\n";
    }
    return pass ? exit_pass : exit_fail;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Normal forms, Hopf-axiom checks and representation experiments", "hopflab"};
    app.require_subcommand(1);

    CheckOptions check;
    auto* c = app.add_subcommand("check", "Verify confluence, star closure and the Hopf axioms");
    c->add_option("target", check.target, "Path to an .alg file or a catalog model name")->required();
    c->add_option("--degree", check.degree, "Largest word length checked")->capture_default_str();
    c->add_option("--bind", check.bind, "Parameter value, name=rational");
    c->add_option("--max-witnesses", check.max_witnesses, "Witnesses listed per axiom in JSON")->capture_default_str();
    c->add_flag("--json", check.json, "Print the JSON report");
    c->add_option("--out", check.out, "Write the JSON report to a file");

    NfOptions nf;
    auto* n = app.add_subcommand("nf", "Normal form of an expression");
    n->add_option("expr", nf.expr)->required();
    n->add_option("--model", nf.model, "Path to an .alg file or a catalog model name")->required();
    n->add_option("--bind", nf.bind);
    n->add_flag("--json", nf.json);

    PairOptions pr;
    auto* p = app.add_subcommand("pair", "Evaluate a duality pairing or audit its compatibility");
    p->add_option("a", pr.a);
    p->add_option("b", pr.b);
    p->add_option("--table", pr.table)->capture_default_str();
    p->add_option("--model-a", pr.model_a, "Replace the first algebra of the table");
    p->add_option("--bind", pr.bind);
    p->add_flag("--compat", pr.compat, "Check relation and commutator compatibility");
    p->add_option("--degree", pr.degree)->capture_default_str();
    p->add_flag("--json", pr.json);
    p->add_option("--out", pr.out);

    ModelsOptions mo;
    auto* m = app.add_subcommand("models", "List the model catalog");
    m->add_flag("--json", mo.json);
    m->add_option("--export", mo.export_dir, "Write every model as DIR/<name>.alg");

    PodlesOptions po;
    auto* pd = app.add_subcommand("podles", "Truncated Podles sphere representation");
    pd->add_option("--mu", po.mu)->capture_default_str();
    pd->add_option("--c", po.c)->capture_default_str();
    pd->add_option("--sign", po.sign)->capture_default_str();
    pd->add_option("--dim", po.dim)->capture_default_str();
    pd->add_option("--spectrum", po.spectrum_csv, "CSV of the spectrum of A");
    pd->add_flag("--json", po.json);
    pd->add_option("--out", po.out);

    TwoParticleOptions tp;
    auto* t = app.add_subcommand("twoparticle", "Two spin-1/2 particles and the singlet");
    t->add_option("--energies", tp.energies, "One-particle energies of e(-1/2), e(+1/2)")->capture_default_str();
    t->add_flag("--json", tp.json);
    t->add_option("--out", tp.out);

    IglOptions ig;
    auto* g = app.add_subcommand("igl", "Coordinate operators of IGL(1,R) and their convergence");
    g->add_option("--lambda", ig.lambda)->capture_default_str();
    g->add_option("--kappa", ig.kappa)->capture_default_str();
    g->add_option("--grid", ig.grid, "Nodes of the coarsest grid")->capture_default_str();
    g->add_option("--refine", ig.refine, "Number of refinements")->capture_default_str();
    g->add_option("--xi-min", ig.xi_min)->capture_default_str();
    g->add_option("--csv", ig.csv, "CSV of h, residual, order");
    g->add_flag("--json", ig.json);
    g->add_option("--out", ig.out);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_pass : exit_usage;
    }

    try {
        if (*c) return cmd_check(check, out);
        if (*n) return cmd_nf(nf, out);
        if (*p) return cmd_pair(pr, out);
        if (*m) return cmd_models(mo, out);
        if (*pd) return cmd_podles(po, out);
        if (*t) return cmd_twoparticle(tp, out);
        if (*g) return cmd_igl(ig, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return exit_usage;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return exit_usage;
    } catch (const DefinitionError& e) {
        err << "definition error: " << e.what() << "\n";
        return exit_usage;
    } catch (const EvaluationError& e) {
        err << "evaluation error: " << e.what() << "\n";
        return exit_fail;
    }
    return exit_usage;
}

}  // namespace hopflab
