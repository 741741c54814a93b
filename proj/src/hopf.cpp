#include "hopflab/hopf.hpp"

#include "hopflab/errors.hpp"

namespace hopflab {

void add_term(TensorTerms& terms, const TensorKey& key, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

namespace {

// Expand the per-leg normal forms of key into `out`, scaled by c.
void add_reduced(TensorTerms& out, const TensorKey& key, const Scalar& c,
                 const std::vector<PresentationPtr>& legs) {
    TensorTerms acc;
    acc.emplace(TensorKey{}, c);
    for (std::size_t l = 0; l < key.size(); ++l) {
        const Terms nf = legs[l]->normal_form(key[l]);
        TensorTerms next;
        for (const auto& [k, v] : acc) {
            for (const auto& [w, cw] : nf) {
                TensorKey nk = k;
                nk.push_back(w);
                add_term(next, nk, v * cw);
            }
        }
        acc = std::move(next);
    }
    for (const auto& [k, v] : acc) add_term(out, k, v);
}

TensorTerms leg_product(const TensorTerms& a, const TensorTerms& b, const std::vector<PresentationPtr>& legs) {
    TensorTerms out;
    for (const auto& [ka, ca] : a) {
        for (const auto& [kb, cb] : b) {
            TensorKey k(ka.size());
            for (std::size_t l = 0; l < ka.size(); ++l) k[l] = concat(ka[l], kb[l]);
            add_reduced(out, k, ca * cb, legs);
        }
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------- TensorPoly

TensorPoly::TensorPoly(std::vector<PresentationPtr> legs, TensorTerms terms)
    : legs_(std::move(legs)), terms_(std::move(terms)) {
    for (const auto& [k, c] : terms_)
        if (k.size() != legs_.size()) throw UsageError("tensor term has the wrong number of legs");
}

TensorPoly TensorPoly::scalar(const Scalar& s) {
    TensorTerms t;
    add_term(t, TensorKey{}, s);
    return TensorPoly({}, std::move(t));
}

TensorPoly TensorPoly::from(const NCPoly& p) {
    if (!p.presentation()) throw UsageError("polynomial is not bound to a presentation");
    TensorTerms t;
    for (const auto& [w, c] : p.terms()) add_term(t, TensorKey{w}, c);
    return TensorPoly({p.presentation()}, std::move(t));
}

TensorPoly TensorPoly::reduced() const {
    TensorTerms out;
    for (const auto& [k, c] : terms_) add_reduced(out, k, c, legs_);
    return TensorPoly(legs_, std::move(out));
}

void TensorPoly::check_legs(const TensorPoly& o) const {
    if (legs_.size() != o.legs_.size()) throw UsageError("tensor rank mismatch");
    for (std::size_t l = 0; l < legs_.size(); ++l)
        if (legs_[l] != o.legs_[l]) throw UsageError("tensor legs belong to different presentations");
}

TensorPoly TensorPoly::operator*(const TensorPoly& o) const {
    check_legs(o);
    return TensorPoly(legs_, leg_product(terms_, o.terms_, legs_));
}

TensorPoly TensorPoly::operator-() const {
    TensorPoly out = *this;
    for (auto& [k, c] : out.terms_) c = -c;
    return out;
}

TensorPoly& TensorPoly::operator+=(const TensorPoly& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty() && legs_.empty()) legs_ = o.legs_;
    check_legs(o);
    for (const auto& [k, c] : o.terms_) add_term(terms_, k, c);
    return *this;
}

TensorPoly& TensorPoly::operator-=(const TensorPoly& o) { return *this += -o; }

std::string TensorPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [k, c] = *it;
        const bool neg = c.negative_leading();
        const Scalar mag = neg ? -c : c;
        std::string body;
        const bool unit = mag == Scalar(1);
        for (std::size_t l = 0; l < k.size(); ++l) {
            std::string leg = legs_[l]->word_str(k[l]);
            if (l == 0 && !unit) leg = k[0].empty() ? mag.factor_str() : mag.factor_str() + "*" + leg;
            body += (l ? " (x) " : "") + leg;
        }
        if (k.empty()) body = mag.factor_str();
        out += out.empty() ? (neg ? "-" : "") + body : (neg ? " - " : " + ") + body;
    }
    return out;
}

TensorPoly tensor(const TensorPoly& a, const TensorPoly& b) {
    std::vector<PresentationPtr> legs = a.legs();
    legs.insert(legs.end(), b.legs().begin(), b.legs().end());
    TensorTerms out;
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            TensorKey k = ka;
            k.insert(k.end(), kb.begin(), kb.end());
            add_term(out, k, ca * cb);
        }
    }
    return TensorPoly(std::move(legs), std::move(out));
}

TensorPoly tensor(const NCPoly& a, const NCPoly& b) { return tensor(TensorPoly::from(a), TensorPoly::from(b)); }

// ---------------------------------------------------------------- HopfData

HopfData::HopfData(PresentationPtr p) : pres(std::move(p)) {
    const std::size_t n = pres ? pres->size() : 0;
    coproduct.resize(n);
    counit.resize(n);
    antipode.resize(n);
}

void HopfData::set_coproduct(const std::string& gen, const TensorPoly& value) {
    if (value.rank() != 2) throw DefinitionError("coproduct of " + gen + " must have two legs");
    for (const auto& leg : value.legs())
        if (leg != pres) throw DefinitionError("coproduct of " + gen + " uses a foreign presentation");
    coproduct[pres->index_of(gen)] = value.terms();
}

void HopfData::set_counit(const std::string& gen, const Scalar& value) { counit[pres->index_of(gen)] = value; }

void HopfData::set_antipode(const std::string& gen, const NCPoly& value) {
    if (value.presentation() && value.presentation() != pres)
        throw DefinitionError("antipode of " + gen + " uses a foreign presentation");
    antipode[pres->index_of(gen)] = value.terms();
}

bool HopfData::complete() const {
    for (std::size_t g = 0; g < coproduct.size(); ++g)
        if (!coproduct[g] || !counit[g] || !antipode[g]) return false;
    return true;
}

void HopfData::validate() const {
    for (std::size_t g = 0; g < pres->size(); ++g) {
        if (!pres->generators()[g].grouplike) continue;
        const auto& name = pres->generators()[g].name;
        const Word w{static_cast<GenIndex>(g)};
        if (coproduct[g]) {
            TensorTerms expect;
            add_term(expect, TensorKey{w, w}, Scalar(1));
            if (*coproduct[g] != expect) throw DefinitionError("group-like " + name + " needs coproduct g (x) g");
        }
        if (counit[g] && *counit[g] != Scalar(1)) throw DefinitionError("group-like " + name + " needs counit 1");
    }
}

HopfData HopfData::bind(PresentationPtr bound, const std::map<std::string, mpq_class>& values) const {
    auto sub = [&](Scalar s) {
        for (const auto& [name, v] : values) s = s.substitute(name, GaussRat(v));
        return s;
    };
    HopfData out(bound);
    for (std::size_t g = 0; g < pres->size(); ++g) {
        if (coproduct[g]) {
            TensorTerms t;
            for (const auto& [k, c] : *coproduct[g]) add_term(t, k, sub(c));
            out.coproduct[g] = std::move(t);
        }
        if (counit[g]) out.counit[g] = sub(*counit[g]);
        if (antipode[g]) {
            Terms t;
            for (const auto& [w, c] : *antipode[g]) add_term(t, w, sub(c));
            out.antipode[g] = std::move(t);
        }
    }
    return out;
}

// ---------------------------------------------------------------- evaluation

namespace {

class Structure {
public:
    explicit Structure(const HopfData& h) : hopf_(h), pres_(*h.pres), legs2_{h.pres, h.pres} {}

    const TensorTerms& delta(const Word& w) {
        auto it = delta_memo_.find(w);
        if (it != delta_memo_.end()) return it->second;
        TensorTerms value;
        if (w.empty()) {
            value.emplace(TensorKey{Word{}, Word{}}, Scalar(1));
        } else {
            const Word head(w.begin(), w.end() - 1);
            value = leg_product(delta(head), generator_delta(w.back()), legs2_);
        }
        return delta_memo_.emplace(w, std::move(value)).first->second;
    }

    Scalar eps(const Word& w) const {
        Scalar out(1);
        for (auto g : w) {
            const auto& e = hopf_.counit.at(g);
            if (!e) throw DefinitionError("no counit for generator " + name(g));
            out *= *e;
            if (out.is_zero()) break;
        }
        return out;
    }

    Scalar eps(const Terms& t) const {
        Scalar out;
        for (const auto& [w, c] : t) out += c * eps(w);
        return out;
    }

    const Terms& s(const Word& w) {
        auto it = s_memo_.find(w);
        if (it != s_memo_.end()) return it->second;
        Terms value;
        if (w.empty()) {
            add_term(value, Word{}, Scalar(1));
        } else {
            // S(w g) = S(g) S(w)
            const Word head(w.begin(), w.end() - 1);
            const auto& sg = hopf_.antipode.at(w.back());
            if (!sg) throw DefinitionError("no antipode for generator " + name(w.back()));
            const Terms& sh = s(head);
            Terms prod;
            for (const auto& [wa, ca] : *sg)
                for (const auto& [wb, cb] : sh) add_term(prod, concat(wa, wb), ca * cb);
            value = pres_.reduce(prod);
        }
        return s_memo_.emplace(w, std::move(value)).first->second;
    }

    TensorTerms delta(const Terms& t) {
        TensorTerms out;
        for (const auto& [w, c] : t)
            for (const auto& [k, v] : delta(w)) add_term(out, k, c * v);
        return out;
    }

    Terms s(const Terms& t) {
        Terms out;
        for (const auto& [w, c] : t) add_scaled(out, s(w), c);
        return out;
    }

    const std::vector<PresentationPtr>& legs2() const { return legs2_; }
    const Presentation& pres() const { return pres_; }

private:
    const TensorTerms& generator_delta(GenIndex g) const {
        const auto& d = hopf_.coproduct.at(g);
        if (!d) throw DefinitionError("no coproduct for generator " + name(g));
        return *d;
    }

    std::string name(GenIndex g) const { return pres_.generators().at(g).name; }

    const HopfData& hopf_;
    const Presentation& pres_;
    std::vector<PresentationPtr> legs2_;
    std::map<Word, TensorTerms, DegLex> delta_memo_;
    std::map<Word, Terms, DegLex> s_memo_;
};

void require_hopf_pres(const NCPoly& p, const HopfData& hopf) {
    if (!hopf.pres) throw UsageError("Hopf data without presentation");
    if (p.presentation() && p.presentation() != hopf.pres)
        throw UsageError("element of " + p.presentation()->name() + " used with Hopf data of " + hopf.pres->name());
}

}  // namespace

TensorPoly coproduct(const NCPoly& p, const HopfData& hopf) {
    require_hopf_pres(p, hopf);
    Structure st(hopf);
    return TensorPoly(st.legs2(), st.delta(p.terms()));
}

Scalar counit(const NCPoly& p, const HopfData& hopf) {
    require_hopf_pres(p, hopf);
    return Structure(hopf).eps(p.terms());
}

NCPoly antipode(const NCPoly& p, const HopfData& hopf) {
    require_hopf_pres(p, hopf);
    Structure st(hopf);
    return NCPoly(hopf.pres, st.s(p.terms()));
}

// ---------------------------------------------------------------- axioms

std::string axiom_name(Axiom a) {
    switch (a) {
        case Axiom::coproduct_respects_relations: return "coproduct-respects-relations";
        case Axiom::counit_respects_relations: return "counit-respects-relations";
        case Axiom::antipode_respects_relations: return "antipode-respects-relations";
        case Axiom::coassociativity: return "coassociativity";
        case Axiom::counit_law: return "counit-law";
        case Axiom::antipode_law: return "antipode-law";
    }
    return "unknown";
}

const std::vector<Axiom>& all_axioms() {
    static const std::vector<Axiom> axioms{Axiom::coproduct_respects_relations, Axiom::counit_respects_relations,
                                           Axiom::antipode_respects_relations,  Axiom::coassociativity,
                                           Axiom::counit_law,                   Axiom::antipode_law};
    return axioms;
}

bool AxiomReport::all_pass() const {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

const AxiomResult& AxiomReport::at(Axiom a) const {
    for (const auto& r : results)
        if (r.axiom == a) return r;
    throw UsageError("axiom not in report: " + axiom_name(a));
}

std::vector<Axiom> AxiomReport::failed() const {
    std::vector<Axiom> out;
    for (const auto& r : results)
        if (!r.pass) out.push_back(r.axiom);
    return out;
}

AxiomReport check_hopf(const Presentation& pres, const HopfData& hopf, int degree) {
    if (degree < 1) throw UsageError("check_hopf needs degree >= 1");
    if (hopf.pres.get() != &pres) throw UsageError("Hopf data does not belong to presentation " + pres.name());
    if (!hopf.complete()) throw DefinitionError("incomplete Hopf data for " + pres.name());
    hopf.validate();

    Structure st(hopf);
    const PresentationPtr& P = hopf.pres;
    const std::vector<PresentationPtr> legs1{P}, legs3{P, P, P};

    AxiomReport report;
    report.degree = degree;
    for (Axiom a : all_axioms()) report.results.push_back({a, true, {}});
    auto fail = [&](Axiom a, std::string side, const Terms& element, TensorPoly residual) {
        for (auto& r : report.results) {
            if (r.axiom != a) continue;
            r.pass = false;
            r.witnesses.push_back({std::move(side), NCPoly(P, element), std::move(residual)});
        }
    };

    for (std::size_t k = 0; k < pres.rules().size(); ++k) {
        const Terms rel = pres.relation(k);
        TensorTerms d = st.delta(rel);
        if (!d.empty()) fail(Axiom::coproduct_respects_relations, "Delta", rel, TensorPoly(st.legs2(), d));
        Scalar e = st.eps(rel);
        if (!e.is_zero()) fail(Axiom::counit_respects_relations, "eps", rel, TensorPoly::scalar(e));
        Terms s = st.s(rel);
        if (!s.empty()) {
            TensorTerms t;
            for (const auto& [w, c] : s) add_term(t, TensorKey{w}, c);
            fail(Axiom::antipode_respects_relations, "S", rel, TensorPoly(legs1, t));
        }
    }

    for (const Word& w : normal_words(pres, degree)) {
        Terms element;
        add_term(element, w, Scalar(1));
        const TensorTerms dw = st.delta(w);

        TensorTerms left3, right3;
        TensorTerms eps_left, eps_right;
        Terms s_left, s_right;
        for (const auto& [k, c] : dw) {
            for (const auto& [k2, c2] : st.delta(k[0])) add_term(left3, TensorKey{k2[0], k2[1], k[1]}, c * c2);
            for (const auto& [k2, c2] : st.delta(k[1])) add_term(right3, TensorKey{k[0], k2[0], k2[1]}, c * c2);
            add_term(eps_left, TensorKey{k[1]}, c * st.eps(k[0]));
            add_term(eps_right, TensorKey{k[0]}, c * st.eps(k[1]));
            for (const auto& [sw, sc] : st.s(k[0])) add_term(s_left, concat(sw, k[1]), c * sc);
            for (const auto& [sw, sc] : st.s(k[1])) add_term(s_right, concat(k[0], sw), c * sc);
        }

        for (const auto& [k, c] : right3) add_term(left3, k, -c);
        if (!left3.empty())
            fail(Axiom::coassociativity, "(Delta(x)id)Delta - (id(x)Delta)Delta", element, TensorPoly(legs3, left3));

        add_term(eps_left, TensorKey{w}, Scalar(-1));
        add_term(eps_right, TensorKey{w}, Scalar(-1));
        if (!eps_left.empty()) fail(Axiom::counit_law, "(eps(x)id)Delta - id", element, TensorPoly(legs1, eps_left));
        if (!eps_right.empty())
            fail(Axiom::counit_law, "(id(x)eps)Delta - id", element, TensorPoly(legs1, eps_right));

        const Scalar ew = st.eps(w);
        auto antipode_residual = [&](const Terms& raw) {
            Terms r = pres.reduce(raw);
            add_term(r, Word{}, -ew);
            TensorTerms t;
            for (const auto& [rw, rc] : r) add_term(t, TensorKey{rw}, rc);
            return t;
        };
        TensorTerms al = antipode_residual(s_left);
        TensorTerms ar = antipode_residual(s_right);
        if (!al.empty()) fail(Axiom::antipode_law, "m(S(x)id)Delta - eps", element, TensorPoly(legs1, al));
        if (!ar.empty()) fail(Axiom::antipode_law, "m(id(x)S)Delta - eps", element, TensorPoly(legs1, ar));
    }
    return report;
}

// ---------------------------------------------------------------- pairing

Scalar PairingTable::lookup(const std::string& a, const std::string& b) const {
    auto it = entries.find({a, b});
    return it == entries.end() ? Scalar(0) : it->second;
}

namespace {

class Pairer {
public:
    Pairer(const PairingTable& table, const HopfData& a, const HopfData& b)
        : table_(table), a_(a), b_(b), sa_(a), sb_(b) {}

    Scalar words(const Word& wa, const Word& wb) {
        if (wa.empty()) return sb_.eps(wb);
        if (wb.empty()) return sa_.eps(wa);
        auto key = std::make_pair(wa, wb);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        if (++depth_ > kMaxDepth)
            throw EvaluationError("pairing of " + a_.pres->word_str(wa) + " with " + b_.pres->word_str(wb) +
                                  " exceeds the recursion bound");
        Scalar value;
        if (wa.size() == 1 && wb.size() == 1) {
            value = table_.lookup(a_.pres->generators()[wa[0]].name, b_.pres->generators()[wb[0]].name);
        } else if (wa.size() >= 2) {
            const Word head{wa[0]};
            const Word rest(wa.begin() + 1, wa.end());
            const TensorTerms d = sb_.delta(wb);
            for (const auto& [k, c] : d) {
                Scalar first = words(head, k[0]);
                if (first.is_zero()) continue;
                value += c * first * words(rest, k[1]);
            }
        } else {
            const Word head{wb[0]};
            const Word rest(wb.begin() + 1, wb.end());
            const TensorTerms d = sa_.delta(wa);
            for (const auto& [k, c] : d) {
                Scalar first = words(k[0], head);
                if (first.is_zero()) continue;
                value += c * first * words(k[1], rest);
            }
        }
        --depth_;
        memo_.emplace(std::move(key), value);
        return value;
    }

    Scalar polys(const Terms& a, const Terms& b) {
        Scalar out;
        for (const auto& [wa, ca] : a)
            for (const auto& [wb, cb] : b) out += ca * cb * words(wa, wb);
        return out;
    }

    Structure& a_structure() { return sa_; }
    Structure& b_structure() { return sb_; }

private:
    static constexpr int kMaxDepth = 256;

    const PairingTable& table_;
    const HopfData& a_;
    const HopfData& b_;
    Structure sa_;
    Structure sb_;
    std::map<std::pair<Word, Word>, Scalar> memo_;
    int depth_ = 0;
};

}  // namespace

Scalar pair(const NCPoly& a, const NCPoly& b, const PairingTable& table, const HopfData& hopf_a,
            const HopfData& hopf_b) {
    require_hopf_pres(a, hopf_a);
    require_hopf_pres(b, hopf_b);
    Pairer p(table, hopf_a, hopf_b);
    return p.polys(a.terms(), b.terms());
}

PairingCompatReport check_pairing_compat(const HopfData& hopf_a, const HopfData& hopf_b, const PairingTable& table,
                                         int degree) {
    if (degree < 2) throw UsageError("check_pairing_compat needs degree >= 2");
    const Presentation& A = *hopf_a.pres;
    const Presentation& B = *hopf_b.pres;
    Pairer pairer(table, hopf_a, hopf_b);
    PairingCompatReport report;
    report.degree = degree;

    const auto words_a = normal_words(A, degree);
    const auto words_b = normal_words(B, degree);
    auto single = [](const Word& w) {
        Terms t;
        add_term(t, w, Scalar(1));
        return t;
    };

    for (std::size_t k = 0; k < A.rules().size(); ++k) {
        const Terms rel = A.relation(k);
        for (const Word& wb : words_b) {
            ++report.checked;
            Scalar v = pairer.polys(rel, single(wb));
            if (!v.is_zero()) report.defects.push_back({"relation-A", A.terms_str(rel), B.word_str(wb), v, Scalar(0)});
        }
    }
    for (std::size_t k = 0; k < B.rules().size(); ++k) {
        const Terms rel = B.relation(k);
        for (const Word& wa : words_a) {
            ++report.checked;
            Scalar v = pairer.polys(single(wa), rel);
            if (!v.is_zero()) report.defects.push_back({"relation-B", A.word_str(wa), B.terms_str(rel), v, Scalar(0)});
        }
    }
    for (std::size_t p = 0; p < A.size(); ++p) {
        for (std::size_t q = p + 1; q < A.size(); ++q) {
            const Word wp{static_cast<GenIndex>(p)}, wq{static_cast<GenIndex>(q)};
            Terms comm;
            add_term(comm, concat(wp, wq), Scalar(1));
            add_term(comm, concat(wq, wp), Scalar(-1));
            const Terms reduced = A.reduce(comm);
            for (const Word& wb : words_b) {
                if (wb.empty()) continue;
                ++report.checked;
                const Scalar lhs = pairer.polys(reduced, single(wb));
                Scalar rhs;
                for (const auto& [k, c] : pairer.b_structure().delta(wb))
                    rhs += c * (pairer.words(wp, k[0]) * pairer.words(wq, k[1]) -
                                pairer.words(wq, k[0]) * pairer.words(wp, k[1]));
                if (lhs != rhs)
                    report.defects.push_back({"commutator", "[" + A.word_str(wp) + ", " + A.word_str(wq) + "]",
                                              B.word_str(wb), lhs, rhs});
            }
        }
    }
    return report;
}

}  // namespace hopflab
