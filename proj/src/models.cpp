#include "hopflab/models.hpp"

#include "hopflab/errors.hpp"

namespace hopflab {

namespace {

const char* const kMinkowski2d = R"(
algebra kminkowski2d {
  params: kappa;
  gens: x0, x1;
  rel: x0*x1 - x1*x0 - i*kappa*x1;
  coproduct: x0 -> x0 (x) 1 + 1 (x) x0;
  coproduct: x1 -> x1 (x) 1 + 1 (x) x1;
  counit: x0 -> 0;
  counit: x1 -> 0;
  antipode: x0 -> -x0;
  antipode: x1 -> -x1;
}
)";

// [x0, xj] = (i/kappa) xj, spatial coordinates commute.
const char* const kMinkowski4d = R"(
algebra kminkowski4d {
  params: kappa;
  gens: x0, x1, x2, x3;
  rel: x0*x1 - x1*x0 - i/kappa*x1;
  rel: x0*x2 - x2*x0 - i/kappa*x2;
  rel: x0*x3 - x3*x0 - i/kappa*x3;
  rel: x1*x2 - x2*x1;
  rel: x1*x3 - x3*x1;
  rel: x2*x3 - x3*x2;
  coproduct: x0 -> x0 (x) 1 + 1 (x) x0;
  coproduct: x1 -> x1 (x) 1 + 1 (x) x1;
  coproduct: x2 -> x2 (x) 1 + 1 (x) x2;
  coproduct: x3 -> x3 (x) 1 + 1 (x) x3;
  counit: x0 -> 0;
  counit: x1 -> 0;
  counit: x2 -> 0;
  counit: x3 -> 0;
  antipode: x0 -> -x0;
  antipode: x1 -> -x1;
  antipode: x2 -> -x2;
  antipode: x3 -> -x3;
}
)";

// Same algebra with the bracket written without the imaginary unit.
const char* const kMinkowski4dLiteral = R"(
algebra kminkowski4d-paper-bracket {
  params: kappa;
  gens: x0, x1, x2, x3;
  rel: x0*x1 - x1*x0 - 1/kappa*x1;
  rel: x0*x2 - x2*x0 - 1/kappa*x2;
  rel: x0*x3 - x3*x0 - 1/kappa*x3;
  rel: x1*x2 - x2*x1;
  rel: x1*x3 - x3*x1;
  rel: x2*x3 - x3*x2;
  coproduct: x0 -> x0 (x) 1 + 1 (x) x0;
  coproduct: x1 -> x1 (x) 1 + 1 (x) x1;
  coproduct: x2 -> x2 (x) 1 + 1 (x) x2;
  coproduct: x3 -> x3 (x) 1 + 1 (x) x3;
  counit: x0 -> 0;
  counit: x1 -> 0;
  counit: x2 -> 0;
  counit: x3 -> 0;
  antipode: x0 -> -x0;
  antipode: x1 -> -x1;
  antipode: x2 -> -x2;
  antipode: x3 -> -x3;
}
)";

// E stands for exp(-P0/kappa), adjoined with its inverse.
const char* const kTranslations4d = R"(
algebra ktranslations4d {
  params: kappa;
  gens: P0, P1, P2, P3, E [grouplike], Einv [grouplike];
  rel: P0*P1 - P1*P0;
  rel: P0*P2 - P2*P0;
  rel: P0*P3 - P3*P0;
  rel: P1*P2 - P2*P1;
  rel: P1*P3 - P3*P1;
  rel: P2*P3 - P3*P2;
  rel: E*P0 - P0*E;
  rel: E*P1 - P1*E;
  rel: E*P2 - P2*E;
  rel: E*P3 - P3*E;
  rel: Einv*P0 - P0*Einv;
  rel: Einv*P1 - P1*Einv;
  rel: Einv*P2 - P2*Einv;
  rel: Einv*P3 - P3*Einv;
  rel: E*Einv - 1;
  rel: Einv*E - 1;
  coproduct: P0 -> P0 (x) 1 + 1 (x) P0;
  coproduct: P1 -> P1 (x) E + 1 (x) P1;
  coproduct: P2 -> P2 (x) E + 1 (x) P2;
  coproduct: P3 -> P3 (x) E + 1 (x) P3;
  coproduct: E -> E (x) E;
  coproduct: Einv -> Einv (x) Einv;
  counit: P0 -> 0;
  counit: P1 -> 0;
  counit: P2 -> 0;
  counit: P3 -> 0;
  counit: E -> 1;
  counit: Einv -> 1;
  antipode: P0 -> -P0;
  antipode: P1 -> -P1*Einv;
  antipode: P2 -> -P2*Einv;
  antipode: P3 -> -P3*Einv;
  antipode: E -> Einv;
  antipode: Einv -> E;
}
)";

const char* const kTranslations4dLiteral = R"(
algebra ktranslations4d-paper-antipode {
  params: kappa;
  gens: P0, P1, P2, P3, E [grouplike], Einv [grouplike];
  rel: P0*P1 - P1*P0;
  rel: P0*P2 - P2*P0;
  rel: P0*P3 - P3*P0;
  rel: P1*P2 - P2*P1;
  rel: P1*P3 - P3*P1;
  rel: P2*P3 - P3*P2;
  rel: E*P0 - P0*E;
  rel: E*P1 - P1*E;
  rel: E*P2 - P2*E;
  rel: E*P3 - P3*E;
  rel: Einv*P0 - P0*Einv;
  rel: Einv*P1 - P1*Einv;
  rel: Einv*P2 - P2*Einv;
  rel: Einv*P3 - P3*Einv;
  rel: E*Einv - 1;
  rel: Einv*E - 1;
  coproduct: P0 -> P0 (x) 1 + 1 (x) P0;
  coproduct: P1 -> P1 (x) E + 1 (x) P1;
  coproduct: P2 -> P2 (x) E + 1 (x) P2;
  coproduct: P3 -> P3 (x) E + 1 (x) P3;
  coproduct: E -> E (x) E;
  coproduct: Einv -> Einv (x) Einv;
  counit: P0 -> 0;
  counit: P1 -> 0;
  counit: P2 -> 0;
  counit: P3 -> 0;
  counit: E -> 1;
  counit: Einv -> 1;
  antipode: P0 -> -P0;
  antipode: P1 -> -P1;
  antipode: P2 -> -P2;
  antipode: P3 -> -P3;
  antipode: E -> Einv;
  antipode: Einv -> E;
}
)";

// Functions on SO(1,1): M00 = cosh, M01 = sinh of the rapidity.
const char* const kSo11 = R"(
algebra so11fun {
  gens: M00, M01;
  rel: M01*M00 - M00*M01;
  rel: M00^2 - M01^2 - 1;
  coproduct: M00 -> M00 (x) M00 + M01 (x) M01;
  coproduct: M01 -> M00 (x) M01 + M01 (x) M00;
  counit: M00 -> 1;
  counit: M01 -> 0;
  antipode: M00 -> M00;
  antipode: M01 -> -M01;
}
)";

// Bicrossproduct of the 2D translations with functions on SO(1,1). The
// brackets of u with M01 are the unique completion keeping the
// pseudo-orthogonality constraint central.
const char* const kPoincare2d = R"(
algebra kpoincare2d {
  params: kappa;
  gens: M00, M01, u0, u1;
  rel: M01*M00 - M00*M01;
  rel: M00^2 - M01^2 - 1;
  rel: u0*u1 - u1*u0 - i*kappa*u1;
  rel: u0*M00 - M00*u0 - i*kappa*(M00^2 - 1);
  rel: u1*M00 - M00*u1 - i*kappa*(M01*M00 - M01);
  rel: u0*M01 - M01*u0 - i*kappa*M00*M01;
  rel: u1*M01 - M01*u1 - i*kappa*(M00^2 - M00);
  coproduct: M00 -> M00 (x) M00 + M01 (x) M01;
  coproduct: M01 -> M00 (x) M01 + M01 (x) M00;
  coproduct: u0 -> u0 (x) 1 + M00 (x) u0 + M01 (x) u1;
  coproduct: u1 -> u1 (x) 1 + M01 (x) u0 + M00 (x) u1;
  counit: M00 -> 1;
  counit: M01 -> 0;
  counit: u0 -> 0;
  counit: u1 -> 0;
  antipode: M00 -> M00;
  antipode: M01 -> -M01;
  antipode: u0 -> -M00*u0 + M01*u1;
  antipode: u1 -> M01*u0 - M00*u1;
}
)";

const char* const kPodles = R"(
algebra podles {
  params: mu, c;
  gens: A, B [star = Bs], Bs [star = B];
  rel: B*A - mu^2*A*B;
  rel: Bs*A - mu^-2*A*Bs;
  rel: Bs*B - A + A^2 - c;
  rel: B*Bs - mu^2*A + mu^4*A^2 - c;
}
)";

const char* const kCartesianSphere = R"(
algebra cartesian-sphere {
  params: c;
  gens: x1, x2, x3;
  rel: x2*x1 - x1*x2;
  rel: x3*x1 - x1*x3;
  rel: x3*x2 - x2*x3;
  rel: x1^2 + x2^2 + x3^2 - c - 1/4;
}
)";

// Pairing-only partners for the Lorentz pairing: matrix coefficients of the
// group (commuting, matrix coproduct) and the Lie algebra generators.
std::string lorentz_group_source() {
    std::string s = "algebra lorentz-group-functions {\n  gens: ";
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) s += (m + n ? ", L" : "L") + std::to_string(m) + std::to_string(n);
    s += ";\n";
    for (int a = 0; a < 16; ++a)
        for (int b = a + 1; b < 16; ++b) {
            const std::string ga = "L" + std::to_string(a / 4) + std::to_string(a % 4);
            const std::string gb = "L" + std::to_string(b / 4) + std::to_string(b % 4);
            s += "  rel: " + gb + "*" + ga + " - " + ga + "*" + gb + ";\n";
        }
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) {
            const std::string g = "L" + std::to_string(m) + std::to_string(n);
            s += "  coproduct: " + g + " -> ";
            for (int r = 0; r < 4; ++r)
                s += (r ? " + L" : "L") + std::to_string(m) + std::to_string(r) + " (x) L" + std::to_string(r) +
                     std::to_string(n);
            s += ";\n  counit: " + g + " -> " + (m == n ? "1" : "0") + ";\n";
        }
    return s + "}\n";
}

const char* const kLorentzAlgebra = R"(
algebra lorentz-algebra {
  gens: M01, M02, M03, M12, M13, M23;
  coproduct: M01 -> M01 (x) 1 + 1 (x) M01;
  coproduct: M02 -> M02 (x) 1 + 1 (x) M02;
  coproduct: M03 -> M03 (x) 1 + 1 (x) M03;
  coproduct: M12 -> M12 (x) 1 + 1 (x) M12;
  coproduct: M13 -> M13 (x) 1 + 1 (x) M13;
  coproduct: M23 -> M23 (x) 1 + 1 (x) M23;
  counit: M01 -> 0;
  counit: M02 -> 0;
  counit: M03 -> 0;
  counit: M12 -> 0;
  counit: M13 -> 0;
  counit: M23 -> 0;
}
)";

struct Preset {
    ModelInfo info;
    std::string source;
};

std::vector<Preset> make_presets() {
    std::vector<Preset> p;
    auto add = [&](std::string name, std::string anchor, std::string notes, std::string src, bool known_failing,
                   bool star_consistent, std::vector<std::string> pairings) {
        ModelInfo m;
        m.name = std::move(name);
        m.anchor = std::move(anchor);
        m.notes = std::move(notes);
        m.known_failing = known_failing;
        m.star_consistent = star_consistent;
        m.pairings = std::move(pairings);
        p.push_back({std::move(m), std::move(src)});
    };
    add("kminkowski2d", "2D kappa-Minkowski space, [x0, x1] = i kappa x1",
        "kappa multiplies the bracket directly; primitive coproduct", kMinkowski2d, false, true, {});
    add("kminkowski4d", "4D kappa-Minkowski space dual to the translation sector",
        "[x0, xj] = (i/kappa) xj; the imaginary unit makes the bracket star-consistent and the pairing compatible",
        kMinkowski4d, false, true, {"xP-duality"});
    add("kminkowski4d-paper-bracket", "4D kappa-Minkowski space with the bracket printed without i",
        "[x0, xj] = (1/kappa) xj; not star-consistent for self-adjoint xj and incompatible with the xP pairing",
        kMinkowski4dLiteral, false, false, {"xP-duality"});
    add("ktranslations4d", "kappa-Poincare translation sector with E = exp(-P0/kappa) adjoined",
        "S(Pi) = -Pi Einv, the antipode forced by Delta(Pi) = Pi (x) E + 1 (x) Pi", kTranslations4d, false, true,
        {"xP-duality"});
    add("ktranslations4d-paper-antipode", "translation sector with the antipode S(Pi) = -Pi",
        "known failing: the antipode law leaves Pi - Pi E", kTranslations4dLiteral, true, true, {});
    add("so11fun", "functions on SO(1,1) with matrix coproduct and S(M) = eta^-1 M^T eta",
        "M00 = M11, M01 = M10; constraint (M00)^2 - (M01)^2 = 1", kSo11, false, true, {});
    add("kpoincare2d", "2D kappa-Poincare group as a bicrossproduct",
        "brackets of u with M01 completed so that the SO(1,1) constraint stays central", kPoincare2d, false, true, {});
    add("podles", "Podles sphere in the A, B, B* presentation",
        "A self-adjoint, B* = Bs; relations fixed by the irreducible representations", kPodles, false, true, {});
    add("cartesian-sphere", "commutative sphere x1^2 + x2^2 + x3^2 = c + 1/4",
        "classical limit of podles at mu = 1 via A = 1/2 + x3, B = x1 + i x2", kCartesianSphere, false, true, {});
    return p;
}

const std::vector<Preset>& presets() {
    static const std::vector<Preset> p = [] {
        auto v = make_presets();
        for (auto& e : v) {
            AlgebraDocument d = parse_algebra(e.source);
            e.info.params = d.pres->params();
            e.info.has_hopf = d.hopf.has_value();
        }
        return v;
    }();
    return p;
}

const Preset& find_preset(const std::string& name) {
    for (const auto& p : presets())
        if (p.info.name == name) return p;
    throw UsageError("unknown model '" + name + "'");
}

void check_domain(const std::string& model, const std::string& param, const mpq_class& v) {
    if ((param == "kappa" || param == "mu") && v == 0) throw DomainError(param + " must be nonzero");
    if (param == "c" && model == "podles" && v < 0) throw DomainError("podles requires c >= 0");
    if (param == "c" && model == "cartesian-sphere" && v <= mpq_class(-1, 4))
        throw DomainError("cartesian-sphere requires c > -1/4");
}

AlgebraDocument bind_document(const AlgebraDocument& d, const std::map<std::string, mpq_class>& values) {
    if (values.empty()) return d;
    AlgebraDocument out;
    out.pres = d.pres->bind(values);
    if (d.hopf) out.hopf = d.hopf->bind(out.pres, values);
    return out;
}

}  // namespace

const std::vector<ModelInfo>& list_models() {
    static const std::vector<ModelInfo> infos = [] {
        std::vector<ModelInfo> v;
        for (const auto& p : presets()) v.push_back(p.info);
        return v;
    }();
    return infos;
}

bool has_model(const std::string& name) {
    for (const auto& p : presets())
        if (p.info.name == name) return true;
    return false;
}

const std::string& model_source(const std::string& name) { return find_preset(name).source; }

ModelCatalogEntry build_model(const std::string& name, const std::map<std::string, mpq_class>& bindings) {
    const Preset& p = find_preset(name);
    for (const auto& [param, v] : bindings) {
        bool declared = false;
        for (const auto& q : p.info.params) declared = declared || q == param;
        if (!declared) throw UsageError("model '" + name + "' has no parameter '" + param + "'");
        check_domain(name, param, v);
    }
    const AlgebraDocument d = bind_document(parse_algebra(p.source), bindings);
    return {p.info, d.pres, d.hopf};
}

const std::vector<std::string>& list_pairings() {
    static const std::vector<std::string> names{"xP-duality", "lorentz-duality"};
    return names;
}

PairingSetup build_pairing(const std::string& name, const std::map<std::string, mpq_class>& bindings,
                           const std::string& model_a) {
    if (name == "xP-duality") {
        const std::string a_name = model_a.empty() ? "kminkowski4d" : model_a;
        std::map<std::string, mpq_class> kb;
        for (const auto& [k, v] : bindings) {
            if (k != "kappa") throw UsageError("xP-duality has no parameter '" + k + "'");
            kb[k] = v;
        }
        ModelCatalogEntry a = build_model(a_name, kb);
        ModelCatalogEntry b = build_model("ktranslations4d", kb);
        if (!a.hopf) throw UsageError("model '" + a_name + "' has no Hopf data");
        PairingTable t;
        t.name = name;
        t.model_a = a_name;
        t.model_b = b.info.name;
        const Scalar i = Scalar::imaginary_unit();
        for (int mu = 0; mu < 4; ++mu)
            t.entries[{"x" + std::to_string(mu), "P" + std::to_string(mu)}] = i;
        const Scalar kappa = kb.count("kappa") ? Scalar::rational(kb["kappa"]) : Scalar::param("kappa");
        // <x0, E> from E = 1 - P0/kappa + ..., higher powers pair to zero with a generator.
        t.entries[{"x0", "E"}] = -i / kappa;
        t.entries[{"x0", "Einv"}] = i / kappa;
        for (const auto& [k, v] : t.entries) {
            a.pres->index_of(k.first);
            b.pres->index_of(k.second);
        }
        return {t, *a.hopf, *b.hopf};
    }
    if (name == "lorentz-duality") {
        if (!bindings.empty()) throw UsageError("lorentz-duality has no parameters");
        if (!model_a.empty()) throw UsageError("lorentz-duality has a fixed first algebra");
        AlgebraDocument a = parse_algebra(lorentz_group_source());
        AlgebraDocument b = parse_algebra(kLorentzAlgebra);
        PairingTable t;
        t.name = name;
        t.model_a = a.pres->name();
        t.model_b = b.pres->name();
        const int g[4] = {1, -1, -1, -1};
        const Scalar i = Scalar::imaginary_unit();
        for (int m = 0; m < 4; ++m)
            for (int n = 0; n < 4; ++n)
                for (int al = 0; al < 4; ++al)
                    for (int be = al + 1; be < 4; ++be) {
                        // i (delta^m_al g_{n be} - delta^m_be g_{n al})
                        int v = 0;
                        if (m == al && n == be) v += g[n];
                        if (m == be && n == al) v -= g[n];
                        if (v == 0) continue;
                        t.entries[{"L" + std::to_string(m) + std::to_string(n),
                                   "M" + std::to_string(al) + std::to_string(be)}] = i * Scalar(v);
                    }
        return {t, *a.hopf, *b.hopf};
    }
    throw UsageError("unknown pairing table '" + name + "'");
}

std::vector<NCPoly> podles_classical_images(const mpq_class& c) {
    const ModelCatalogEntry pod = build_model("podles", {{"mu", 1}, {"c", c}});
    const ModelCatalogEntry sph = build_model("cartesian-sphere", {{"c", c}});
    const auto& S = sph.pres;
    const Scalar i = Scalar::imaginary_unit();
    const NCPoly x1 = NCPoly::generator(S, "x1"), x2 = NCPoly::generator(S, "x2"), x3 = NCPoly::generator(S, "x3");
    const std::vector<NCPoly> images{NCPoly::constant(S, Scalar::rational(mpq_class(1, 2))) + x3, x1 + i * x2,
                                     x1 - i * x2};
    std::vector<NCPoly> out;
    for (std::size_t r = 0; r < pod.pres->rules().size(); ++r)
        out.push_back(map_generators(NCPoly(pod.pres, pod.pres->relation(r)), S, images));
    return out;
}

std::vector<NCPoly> kpoincare_casimir_commutators(const std::map<std::string, mpq_class>& bindings) {
    const ModelCatalogEntry m = build_model("kpoincare2d", bindings);
    const auto& P = m.pres;
    const NCPoly M00 = NCPoly::generator(P, "M00"), M01 = NCPoly::generator(P, "M01");
    std::vector<NCPoly> out;
    for (const char* u : {"u0", "u1"}) {
        const NCPoly U = NCPoly::generator(P, u);
        // [u, M] read off the cross-relation: normal form of uM minus M u.
        const NCPoly d00 = reduce(U * M00) - M00 * U;
        const NCPoly d01 = reduce(U * M01) - M01 * U;
        out.push_back(reduce(d00 * M00 + M00 * d00 - d01 * M01 - M01 * d01));
    }
    return out;
}

}  // namespace hopflab
