#include "hopflab/dsl.hpp"

#include <cctype>
#include <map>
#include <set>

#include "hopflab/errors.hpp"

namespace hopflab {

namespace {

enum class Tok { ident, number, punct, tensor, arrow, end };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t k = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t j = 0; j < n; ++j, ++k) {
            if (src[k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (k < src.size()) {
        const char ch = src[k];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            advance(1);
            continue;
        }
        if (ch == '#') {
            while (k < src.size() && src[k] != '\n') advance(1);
            continue;
        }
        const int l = line, c = col;
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t j = k;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
            out.push_back({Tok::ident, std::string(src.substr(k, j - k)), l, c});
            advance(j - k);
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t j = k;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            out.push_back({Tok::number, std::string(src.substr(k, j - k)), l, c});
            advance(j - k);
        } else if (src.substr(k, 3) == "(x)") {
            out.push_back({Tok::tensor, "(x)", l, c});
            advance(3);
        } else if (src.substr(k, 2) == "->") {
            out.push_back({Tok::arrow, "->", l, c});
            advance(2);
        } else if (std::string_view("{}:;,[]=()+-*/^").find(ch) != std::string_view::npos) {
            out.push_back({Tok::punct, std::string(1, ch), l, c});
            advance(1);
        } else {
            throw ParseError(std::string("unexpected character '") + ch + "'", l, c);
        }
    }
    out.push_back({Tok::end, "<end of input>", line, col});
    return out;
}

// Expression value before a presentation exists: generator indices per leg.
struct Value {
    std::size_t rank = 1;
    TensorTerms terms;

    bool scalar_like() const {
        if (rank != 1) return false;
        for (const auto& [k, c] : terms)
            if (!k[0].empty()) return false;
        return true;
    }
    Scalar scalar() const {
        auto it = terms.find(TensorKey{Word{}});
        return it == terms.end() ? Scalar(0) : it->second;
    }
    static Value constant(const Scalar& s, std::size_t rank = 1) {
        Value v;
        v.rank = rank;
        add_term(v.terms, TensorKey(rank), s);
        return v;
    }
};

Value scale(Value v, const Scalar& s) {
    TensorTerms t;
    for (const auto& [k, c] : v.terms) add_term(t, k, c * s);
    v.terms = std::move(t);
    return v;
}

struct Symbols {
    std::vector<std::string> params;
    std::vector<Generator> gens;
    std::map<std::string, GenIndex> gen_index;

    bool is_param(const std::string& s) const {
        for (const auto& p : params)
            if (p == s) return true;
        return false;
    }
};

class Parser {
public:
    explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

    Symbols symbols;

    const Token& peek() const { return toks_[pos_]; }
    bool at_end() const { return peek().kind == Tok::end; }

    bool accept(const std::string& text) {
        const Token& t = peek();
        if ((t.kind == Tok::punct || t.kind == Tok::ident || t.kind == Tok::arrow || t.kind == Tok::tensor) &&
            t.text == text) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(const std::string& text) {
        if (!accept(text)) error("unexpected '" + peek().text + "'", {text});
    }

    [[noreturn]] void error(const std::string& msg, std::vector<std::string> expected = {}) const {
        throw ParseError(msg, peek().line, peek().column, std::move(expected));
    }

    [[noreturn]] void error_at(const Token& t, const std::string& msg) const { throw ParseError(msg, t.line, t.column); }

    std::string ident(const std::string& what) {
        const Token& t = peek();
        if (t.kind != Tok::ident) error("expected " + what + ", found '" + t.text + "'", {"<identifier>"});
        ++pos_;
        return t.text;
    }

    // Model names may contain '-' between identifier/number pieces written without spaces.
    std::string model_name() {
        std::string name = ident("algebra name");
        while (peek().kind == Tok::punct && peek().text == "-") {
            const Token& dash = peek();
            const Token& next = toks_[pos_ + 1];
            const Token& prev = toks_[pos_ - 1];
            if (dash.line != prev.line || dash.column != prev.column + static_cast<int>(prev.text.size())) break;
            if (next.kind != Tok::ident && next.kind != Tok::number) break;
            if (next.line != dash.line || next.column != dash.column + 1) break;
            name += "-" + next.text;
            pos_ += 2;
        }
        return name;
    }

    // expr := tterm (('+'|'-') tterm)*
    Value expr() {
        Value v = tterm();
        while (true) {
            const Token op = peek();
            if (accept("+")) {
                v = add(v, tterm(), op, 1);
            } else if (accept("-")) {
                v = add(v, tterm(), op, -1);
            } else {
                return v;
            }
        }
    }

private:
    Value add(Value a, const Value& b, const Token& op, int sign) {
        if (a.rank != b.rank) error_at(op, "cannot add tensors of different rank");
        for (const auto& [k, c] : b.terms) add_term(a.terms, k, sign > 0 ? c : -c);
        return a;
    }

    // tterm := product ('(x)' product)*
    Value tterm() {
        Value v = product();
        while (peek().kind == Tok::tensor) {
            ++pos_;
            Value r = product();
            Value out;
            out.rank = v.rank + r.rank;
            for (const auto& [ka, ca] : v.terms)
                for (const auto& [kb, cb] : r.terms) {
                    TensorKey k = ka;
                    k.insert(k.end(), kb.begin(), kb.end());
                    add_term(out.terms, k, ca * cb);
                }
            v = std::move(out);
        }
        return v;
    }

    Value multiply(const Value& a, const Value& b, const Token& op) {
        if (a.scalar_like()) return scale(b, a.scalar());
        if (b.scalar_like()) return scale(a, b.scalar());
        if (a.rank != b.rank) error_at(op, "cannot multiply tensors of different rank");
        Value out;
        out.rank = a.rank;
        for (const auto& [ka, ca] : a.terms)
            for (const auto& [kb, cb] : b.terms) {
                TensorKey k(ka.size());
                for (std::size_t l = 0; l < ka.size(); ++l) k[l] = concat(ka[l], kb[l]);
                add_term(out.terms, k, ca * cb);
            }
        return out;
    }

    // product := unary (('*'|'/') unary)*
    Value product() {
        Value v = unary();
        while (true) {
            const Token op = peek();
            if (accept("*")) {
                v = multiply(v, unary(), op);
            } else if (accept("/")) {
                Value d = unary();
                if (!d.scalar_like()) error_at(op, "divisor must be a scalar");
                if (d.scalar().is_zero()) error_at(op, "division by zero");
                v = scale(v, d.scalar().inverse());
            } else {
                return v;
            }
        }
    }

    Value unary() {
        if (accept("-")) return scale(unary(), Scalar(-1));
        if (accept("+")) return unary();
        return power();
    }

    Value power() {
        Value base = atom();
        const Token op = peek();
        if (!accept("^")) return base;
        bool negative = accept("-");
        const Token& t = peek();
        if (t.kind != Tok::number) error("expected integer exponent", {"<integer>"});
        ++pos_;
        const long n = std::stol(t.text);
        if (negative) {
            if (!base.scalar_like()) error_at(op, "negative powers are allowed on scalars only");
            base = Value::constant(base.scalar().inverse());
        }
        Value out = Value::constant(Scalar(1), base.rank);
        for (long k = 0; k < n; ++k) out = multiply(out, base, op);
        return out;
    }

    Value atom() {
        const Token t = peek();
        if (t.kind == Tok::number) {
            ++pos_;
            return Value::constant(Scalar::rational(mpq_class(t.text)));
        }
        if (t.kind == Tok::ident) {
            ++pos_;
            if (t.text == "i") return Value::constant(Scalar::imaginary_unit());
            if (symbols.is_param(t.text)) return Value::constant(Scalar::param(t.text));
            auto it = symbols.gen_index.find(t.text);
            if (it == symbols.gen_index.end()) error_at(t, "undeclared symbol '" + t.text + "'");
            Value v;
            add_term(v.terms, TensorKey{Word{it->second}}, Scalar(1));
            return v;
        }
        if (accept("(")) {
            Value v = expr();
            expect(")");
            return v;
        }
        error("unexpected '" + t.text + "'", {"<number>", "<identifier>", "i", "(", "-"});
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

Terms to_terms(const Value& v) {
    Terms t;
    for (const auto& [k, c] : v.terms) add_term(t, k[0], c);
    return t;
}

struct PendingMap {
    Token at;
    std::string gen;
    Value value;
};

void declare_param(Parser& p, const Token& t, const std::string& name) {
    if (name == "i") p.error_at(t, "'i' is reserved for the imaginary unit");
    if (p.symbols.is_param(name) || p.symbols.gen_index.count(name))
        p.error_at(t, "duplicate symbol '" + name + "'");
    p.symbols.params.push_back(name);
}

void declare_generator(Parser& p, const Token& t, Generator g) {
    if (g.name == "i") p.error_at(t, "'i' is reserved for the imaginary unit");
    if (p.symbols.gen_index.count(g.name)) p.error_at(t, "duplicate generator '" + g.name + "'");
    if (p.symbols.is_param(g.name)) p.error_at(t, "'" + g.name + "' is already a parameter");
    p.symbols.gen_index[g.name] = static_cast<GenIndex>(p.symbols.gens.size());
    p.symbols.gens.push_back(std::move(g));
}

}  // namespace

AlgebraDocument parse_algebra(std::string_view text) {
    Parser p(text);
    p.expect("algebra");
    const std::string name = p.model_name();
    p.expect("{");

    std::vector<std::pair<Token, Value>> relations;
    std::vector<PendingMap> coproducts, counits, antipodes;
    bool gens_seen = false;

    while (!p.accept("}")) {
        const Token head = p.peek();
        if (head.kind != Tok::ident)
            p.error("unexpected '" + head.text + "'", {"params", "gens", "rel", "coproduct", "counit", "antipode", "}"});
        const std::string key = head.text;
        if (key == "params") {
            p.accept("params");
            p.expect(":");
            do {
                const Token t = p.peek();
                declare_param(p, t, p.ident("parameter name"));
            } while (p.accept(","));
            if (!p.accept(";")) p.error("unexpected '" + p.peek().text + "'", {",", ";"});
        } else if (key == "gens") {
            p.accept("gens");
            p.expect(":");
            std::vector<std::pair<Token, std::string>> star_refs;
            do {
                const Token t = p.peek();
                Generator g;
                g.name = p.ident("generator name");
                if (p.accept("[")) {
                    do {
                        const Token at = p.peek();
                        const std::string attr = p.ident("generator attribute");
                        if (attr == "star") {
                            p.expect("=");
                            g.star = p.ident("star partner");
                            star_refs.emplace_back(at, g.star);
                        } else if (attr == "grouplike") {
                            g.grouplike = true;
                        } else {
                            p.error_at(at, "unknown generator attribute '" + attr + "'");
                        }
                    } while (p.accept(","));
                    if (!p.accept("]")) p.error("unexpected '" + p.peek().text + "'", {",", "]"});
                }
                declare_generator(p, t, std::move(g));
            } while (p.accept(","));
            if (!p.accept(";")) p.error("unexpected '" + p.peek().text + "'", {",", "[", ";"});
            for (const auto& [t, ref] : star_refs)
                if (!p.symbols.gen_index.count(ref)) p.error_at(t, "undeclared star partner '" + ref + "'");
            gens_seen = true;
        } else if (key == "rel") {
            p.accept("rel");
            p.expect(":");
            const Token at = p.peek();
            Value v = p.expr();
            if (v.rank != 1) p.error_at(at, "relation must be an algebra element, not a tensor");
            if (v.terms.empty()) p.error_at(at, "relation is identically zero");
            relations.emplace_back(at, std::move(v));
            p.expect(";");
        } else if (key == "coproduct" || key == "counit" || key == "antipode") {
            p.accept(key);
            p.expect(":");
            const Token at = p.peek();
            const std::string gen = p.ident("generator name");
            if (!p.symbols.gen_index.count(gen)) p.error_at(at, "undeclared generator '" + gen + "'");
            p.expect("->");
            const Token vt = p.peek();
            Value v = p.expr();
            p.expect(";");
            auto& bucket = key == "coproduct" ? coproducts : key == "counit" ? counits : antipodes;
            for (const auto& prev : bucket)
                if (prev.gen == gen) p.error_at(at, "duplicate " + key + " for '" + gen + "'");
            if (key == "coproduct" && v.rank != 2) p.error_at(vt, "coproduct must have two legs");
            if (key == "counit" && !v.scalar_like()) p.error_at(vt, "counit must be a scalar");
            if (key == "antipode" && v.rank != 1) p.error_at(vt, "antipode must be an algebra element");
            bucket.push_back({at, gen, std::move(v)});
        } else {
            p.error("unknown section '" + key + "'", {"params", "gens", "rel", "coproduct", "counit", "antipode", "}"});
        }
    }
    if (!p.at_end()) p.error("trailing input after algebra block", {"<end of input>"});
    if (!gens_seen) throw ParseError("algebra '" + name + "' declares no generators", 1, 1, {"gens"});

    std::vector<Terms> rels;
    for (const auto& [t, v] : relations) rels.push_back(to_terms(v));

    AlgebraDocument doc;
    try {
        doc.pres = Presentation::create(name, p.symbols.params, p.symbols.gens, rels);
    } catch (const DefinitionError& e) {
        const Token& t = relations.empty() ? p.peek() : relations.front().first;
        throw ParseError(e.what(), t.line, t.column);
    }
    if (!coproducts.empty() || !counits.empty() || !antipodes.empty()) {
        HopfData h(doc.pres);
        for (const auto& m : coproducts)
            h.set_coproduct(m.gen, TensorPoly({doc.pres, doc.pres}, m.value.terms));
        for (const auto& m : counits) h.set_counit(m.gen, m.value.scalar());
        for (const auto& m : antipodes) h.set_antipode(m.gen, NCPoly(doc.pres, to_terms(m.value)));
        try {
            h.validate();
        } catch (const DefinitionError& e) {
            throw ParseError(e.what(), coproducts.empty() ? 1 : coproducts.front().at.line,
                             coproducts.empty() ? 1 : coproducts.front().at.column);
        }
        doc.hopf = std::move(h);
    }
    return doc;
}

std::string print_algebra(const AlgebraDocument& doc) {
    const Presentation& P = *doc.pres;
    std::string out = "algebra " + P.name() + " {\n";
    if (!P.params().empty()) {
        out += "  params: ";
        for (std::size_t k = 0; k < P.params().size(); ++k) out += (k ? ", " : "") + P.params()[k];
        out += ";\n";
    }
    out += "  gens: ";
    for (std::size_t k = 0; k < P.size(); ++k) {
        const auto& g = P.generators()[k];
        out += (k ? ", " : "") + g.name;
        std::vector<std::string> attrs;
        if (!g.star.empty() && g.star != g.name) attrs.push_back("star = " + g.star);
        if (g.grouplike) attrs.push_back("grouplike");
        if (!attrs.empty()) {
            out += " [";
            for (std::size_t a = 0; a < attrs.size(); ++a) out += (a ? ", " : "") + attrs[a];
            out += "]";
        }
    }
    out += ";\n";
    for (std::size_t r = 0; r < P.rules().size(); ++r) out += "  rel: " + P.terms_str(P.relation(r)) + ";\n";
    if (doc.hopf) {
        const HopfData& h = *doc.hopf;
        const std::vector<PresentationPtr> legs{doc.pres, doc.pres};
        for (std::size_t g = 0; g < P.size(); ++g)
            if (h.coproduct[g])
                out += "  coproduct: " + P.generators()[g].name + " -> " + TensorPoly(legs, *h.coproduct[g]).str() +
                       ";\n";
        for (std::size_t g = 0; g < P.size(); ++g)
            if (h.counit[g]) out += "  counit: " + P.generators()[g].name + " -> " + h.counit[g]->str() + ";\n";
        for (std::size_t g = 0; g < P.size(); ++g)
            if (h.antipode[g])
                out += "  antipode: " + P.generators()[g].name + " -> " + P.terms_str(*h.antipode[g]) + ";\n";
    }
    out += "}\n";
    return out;
}

namespace {

Value parse_expression(const PresentationPtr& pres, const std::vector<std::string>& params, std::string_view text) {
    Parser p(text);
    p.symbols.params = params;
    if (pres) {
        p.symbols.gens = pres->generators();
        for (std::size_t k = 0; k < pres->size(); ++k)
            p.symbols.gen_index[pres->generators()[k].name] = static_cast<GenIndex>(k);
    }
    Value v = p.expr();
    if (!p.at_end()) p.error("unexpected '" + p.peek().text + "'", {"+", "-", "*", "/", "(x)", "<end of input>"});
    return v;
}

}  // namespace

NCPoly parse_element(const PresentationPtr& pres, std::string_view text) {
    Value v = parse_expression(pres, pres->params(), text);
    if (v.rank != 1) throw ParseError("expected an algebra element, got a tensor", 1, 1);
    return NCPoly(pres, to_terms(v));
}

TensorPoly parse_tensor(const PresentationPtr& pres, std::string_view text) {
    Value v = parse_expression(pres, pres->params(), text);
    return TensorPoly(std::vector<PresentationPtr>(v.rank, pres), v.terms);
}

Scalar parse_scalar(std::string_view text, const std::vector<std::string>& params) {
    Value v = parse_expression(nullptr, params, text);
    if (!v.scalar_like()) throw ParseError("expected a scalar", 1, 1);
    return v.scalar();
}

}  // namespace hopflab
