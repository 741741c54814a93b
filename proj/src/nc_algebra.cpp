#include "hopflab/nc_algebra.hpp"

#include <algorithm>
#include <set>

#include "hopflab/errors.hpp"

namespace hopflab {

void add_term(Terms& terms, const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

void add_scaled(Terms& into, const Terms& from, const Scalar& c) {
    if (c.is_zero()) return;
    const bool unit = c == Scalar(1);
    for (const auto& [w, v] : from) add_term(into, w, unit ? v : v * c);
}

Word concat(const Word& a, const Word& b) {
    Word out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

// ---------------------------------------------------------------- Presentation

PresentationPtr Presentation::create(std::string name, std::vector<std::string> params,
                                     std::vector<Generator> generators, const std::vector<Terms>& relations) {
    std::shared_ptr<Presentation> p(new Presentation);
    p->name_ = std::move(name);
    p->params_ = std::move(params);
    p->generators_ = std::move(generators);
    for (const auto& rel : relations) {
        if (rel.empty()) throw DefinitionError("relation is identically zero");
        const auto& [lead, lc] = *rel.rbegin();
        if (lead.empty()) throw DefinitionError("relation reduces the unit to zero: " + p->terms_str(rel));
        RewriteRule rule;
        rule.lhs = lead;
        const Scalar scale = -lc.inverse();
        for (const auto& [w, c] : rel)
            if (w != lead) add_term(rule.rhs, w, c * scale);
        p->rules_.push_back(std::move(rule));
    }
    p->finalize();
    return p;
}

void Presentation::finalize() {
    std::set<std::string> seen;
    for (const auto& g : generators_) {
        if (g.name.empty()) throw DefinitionError("empty generator name");
        if (!seen.insert(g.name).second) throw DefinitionError("duplicate generator '" + g.name + "'");
    }
    if (generators_.size() > 0xFFFF) throw DefinitionError("too many generators");
    for (const auto& p : params_)
        if (seen.count(p)) throw DefinitionError("'" + p + "' declared as both parameter and generator");

    star_.clear();
    for (const auto& g : generators_) {
        const std::string& partner = g.star.empty() ? g.name : g.star;
        star_.push_back(index_of(partner));
    }
    for (std::size_t k = 0; k < star_.size(); ++k)
        if (star_[star_[k]] != k)
            throw DefinitionError("star is not an involution on generator '" + generators_[k].name + "'");

    rules_by_first_.assign(generators_.size(), {});
    for (std::size_t r = 0; r < rules_.size(); ++r) {
        const auto& rule = rules_[r];
        check_word(rule.lhs);
        for (const auto& [w, c] : rule.rhs) {
            check_word(w);
            if (!DegLex{}(w, rule.lhs))
                throw DefinitionError("rule " + word_str(rule.lhs) + " does not decrease DegLex order");
            for (const auto& v : c.variables())
                if (!has_param(v)) throw DefinitionError("undeclared parameter '" + v + "'");
        }
        rules_by_first_[rule.lhs.front()].push_back(r);
    }
}

PresentationPtr Presentation::bind(const std::map<std::string, mpq_class>& values) const {
    std::vector<std::string> params;
    for (const auto& p : params_)
        if (!values.count(p)) params.push_back(p);
    for (const auto& [name, v] : values)
        if (!has_param(name)) throw DomainError("model " + name_ + " has no parameter '" + name + "'");

    std::shared_ptr<Presentation> p(new Presentation);
    p->name_ = name_;
    p->params_ = std::move(params);
    p->generators_ = generators_;
    for (const auto& rule : rules_) {
        RewriteRule bound{rule.lhs, {}};
        for (const auto& [w, c] : rule.rhs) {
            Scalar s = c;
            for (const auto& [name, v] : values) s = s.substitute(name, GaussRat(v));
            add_term(bound.rhs, w, s);
        }
        p->rules_.push_back(std::move(bound));
    }
    p->finalize();
    return p;
}

std::optional<GenIndex> Presentation::find(const std::string& name) const {
    for (std::size_t k = 0; k < generators_.size(); ++k)
        if (generators_[k].name == name) return static_cast<GenIndex>(k);
    return std::nullopt;
}

GenIndex Presentation::index_of(const std::string& name) const {
    auto k = find(name);
    if (!k) throw DefinitionError("undeclared generator '" + name + "' in " + name_);
    return *k;
}

bool Presentation::has_param(const std::string& name) const {
    return std::find(params_.begin(), params_.end(), name) != params_.end();
}

void Presentation::check_word(const Word& w) const {
    for (auto g : w)
        if (g >= generators_.size())
            throw DefinitionError("generator index " + std::to_string(g) + " not declared in " + name_);
}

Terms Presentation::relation(std::size_t k) const {
    const auto& rule = rules_.at(k);
    Terms out;
    add_term(out, rule.lhs, Scalar(1));
    add_scaled(out, rule.rhs, Scalar(-1));
    return out;
}

std::optional<std::pair<std::size_t, std::size_t>> Presentation::leftmost_redex(const Word& w) const {
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
        for (std::size_t r : rules_by_first_[w[pos]]) {
            const Word& lhs = rules_[r].lhs;
            if (pos + lhs.size() <= w.size() && std::equal(lhs.begin(), lhs.end(), w.begin() + pos))
                return std::make_pair(pos, r);
        }
    }
    return std::nullopt;
}

bool Presentation::is_normal(const Word& w) const { return !leftmost_redex(w).has_value(); }

Terms Presentation::normal_form(const Word& w) const {
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = cache_.find(w);
        if (it != cache_.end()) return it->second;
    }
    check_word(w);
    Terms out;
    auto redex = leftmost_redex(w);
    if (!redex) {
        add_term(out, w, Scalar(1));
    } else {
        const auto [pos, r] = *redex;
        const auto& rule = rules_[r];
        for (const auto& [rw, rc] : rule.rhs) {
            Word next(w.begin(), w.begin() + pos);
            next.insert(next.end(), rw.begin(), rw.end());
            next.insert(next.end(), w.begin() + pos + rule.lhs.size(), w.end());
            add_scaled(out, normal_form(next), rc);
        }
    }
    std::lock_guard<std::mutex> lock(cache_mutex_);
    cache_.emplace(w, out);
    return out;
}

Terms Presentation::reduce(const Terms& p) const {
    Terms out;
    for (const auto& [w, c] : p) add_scaled(out, normal_form(w), c);
    return out;
}

std::string Presentation::word_str(const Word& w) const {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t k = 0; k < w.size();) {
        std::size_t run = 1;
        while (k + run < w.size() && w[k + run] == w[k]) ++run;
        if (!out.empty()) out += "*";
        out += w[k] < generators_.size() ? generators_[w[k]].name : "?" + std::to_string(w[k]);
        if (run > 1) out += "^" + std::to_string(run);
        k += run;
    }
    return out;
}

std::string Presentation::terms_str(const Terms& t) const {
    if (t.empty()) return "0";
    std::string out;
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
        const auto& [w, c] = *it;
        const bool neg = c.negative_leading();
        const Scalar mag = neg ? -c : c;
        std::string body;
        if (w.empty())
            body = mag.factor_str();
        else if (mag == Scalar(1))
            body = word_str(w);
        else
            body = mag.factor_str() + "*" + word_str(w);
        if (out.empty())
            out = (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out;
}

// ---------------------------------------------------------------- NCPoly

NCPoly::NCPoly(PresentationPtr pres, Terms terms) : pres_(std::move(pres)), terms_(std::move(terms)) {}

NCPoly NCPoly::constant(PresentationPtr pres, const Scalar& c) {
    Terms t;
    add_term(t, Word{}, c);
    return NCPoly(std::move(pres), std::move(t));
}

NCPoly NCPoly::word(PresentationPtr pres, Word w, const Scalar& c) {
    Terms t;
    add_term(t, w, c);
    return NCPoly(std::move(pres), std::move(t));
}

NCPoly NCPoly::generator(PresentationPtr pres, const std::string& name) {
    const GenIndex g = pres->index_of(name);
    return word(std::move(pres), Word{g});
}

int NCPoly::degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.size()); }

void NCPoly::check_compatible(const NCPoly& o) const {
    if (pres_ && o.pres_ && pres_ != o.pres_)
        throw UsageError("operands belong to different presentations (" + pres_->name() + ", " +
                         o.pres_->name() + ")");
}

NCPoly NCPoly::operator-() const {
    NCPoly out = *this;
    for (auto& [w, c] : out.terms_) c = -c;
    return out;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    check_compatible(o);
    if (!pres_) pres_ = o.pres_;
    add_scaled(terms_, o.terms_, Scalar(1));
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    check_compatible(o);
    if (!pres_) pres_ = o.pres_;
    add_scaled(terms_, o.terms_, Scalar(-1));
    return *this;
}

NCPoly& NCPoly::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    a.check_compatible(b);
    NCPoly out(a.pres_ ? a.pres_ : b.pres_);
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) add_term(out.terms_, concat(wa, wb), ca * cb);
    return out;
}

std::string NCPoly::str() const {
    if (!pres_) return terms_.empty() ? "0" : "<unbound>";
    return pres_->terms_str(terms_);
}

// ---------------------------------------------------------------- operations

namespace {

void require_same(const NCPoly& p, const Presentation& pres) {
    if (!p.presentation()) return;  // the unbound zero polynomial belongs everywhere
    if (p.presentation().get() != &pres)
        throw UsageError("polynomial over " + p.presentation()->name() + " used with presentation " + pres.name());
}

const Presentation& presentation_of(const NCPoly& p) {
    if (!p.presentation()) throw UsageError("polynomial is not bound to a presentation");
    return *p.presentation();
}

PresentationPtr share(const NCPoly& p, const Presentation& pres) {
    return p.presentation() ? p.presentation() : PresentationPtr(PresentationPtr{}, &pres);
}

}  // namespace

NCPoly reduce(const NCPoly& p, const Presentation& pres) {
    require_same(p, pres);
    return NCPoly(share(p, pres), pres.reduce(p.terms()));
}

NCPoly reduce(const NCPoly& p) {
    if (p.is_zero()) return p;
    return reduce(p, presentation_of(p));
}

NCPoly multiply(const NCPoly& p, const NCPoly& q, const Presentation& pres) {
    require_same(p, pres);
    require_same(q, pres);
    return reduce(p * q, pres);
}

NCPoly multiply(const NCPoly& p, const NCPoly& q) {
    const NCPoly& bound = p.presentation() ? p : q;
    if (!bound.presentation()) return NCPoly();
    return multiply(p, q, *bound.presentation());
}

NCPoly star(const NCPoly& p, const Presentation& pres) {
    require_same(p, pres);
    Terms out;
    for (const auto& [w, c] : p.terms()) {
        Word sw(w.rbegin(), w.rend());
        for (auto& g : sw) g = pres.star_of(g);
        add_term(out, sw, c.conj());
    }
    return NCPoly(share(p, pres), pres.reduce(out));
}

NCPoly star(const NCPoly& p) {
    if (p.is_zero()) return p;
    return star(p, presentation_of(p));
}

NCPoly commutator(const NCPoly& p, const NCPoly& q, const Presentation& pres) {
    require_same(p, pres);
    require_same(q, pres);
    return reduce(p * q - q * p, pres);
}

NCPoly commutator(const NCPoly& p, const NCPoly& q) {
    const NCPoly& bound = p.presentation() ? p : q;
    if (!bound.presentation()) return NCPoly();
    return commutator(p, q, *bound.presentation());
}

NCPoly map_generators(const NCPoly& p, const PresentationPtr& target, const std::vector<NCPoly>& images) {
    const Presentation& source = presentation_of(p);
    if (images.size() != source.size())
        throw UsageError("map_generators needs one image per generator of " + source.name());
    for (const auto& img : images) require_same(img, *target);
    Terms out;
    for (const auto& [w, c] : p.terms()) {
        Terms acc;
        add_term(acc, Word{}, c);
        for (auto g : w) {
            Terms next;
            for (const auto& [aw, ac] : acc)
                for (const auto& [iw, ic] : images[g].terms()) add_term(next, concat(aw, iw), ac * ic);
            acc = target->reduce(next);
        }
        add_scaled(out, acc, Scalar(1));
    }
    return NCPoly(target, std::move(out));
}

// ---------------------------------------------------------------- diagnostics

std::vector<CriticalPair> overlaps(const Presentation& pres) {
    std::vector<CriticalPair> out;
    const auto& rules = pres.rules();
    auto residual = [&](const Terms& a, const Terms& b) {
        Terms r = pres.reduce(a);
        add_scaled(r, pres.reduce(b), Scalar(-1));
        return r;
    };
    auto splice = [](const Word& prefix, const Terms& middle, const Word& suffix) {
        Terms t;
        for (const auto& [w, c] : middle) add_term(t, concat(concat(prefix, w), suffix), c);
        return t;
    };
    for (std::size_t a = 0; a < rules.size(); ++a) {
        const Word& la = rules[a].lhs;
        for (std::size_t b = 0; b < rules.size(); ++b) {
            const Word& lb = rules[b].lhs;
            // proper overlap: suffix of la equals prefix of lb
            for (std::size_t k = 1; k < la.size() && k < lb.size(); ++k) {
                if (!std::equal(la.end() - k, la.end(), lb.begin())) continue;
                Word tail(lb.begin() + k, lb.end());
                Word head(la.begin(), la.end() - k);
                CriticalPair cp;
                cp.overlap = concat(la, tail);
                cp.rule_a = a;
                cp.rule_b = b;
                cp.residual = residual(splice({}, rules[a].rhs, tail), splice(head, rules[b].rhs, {}));
                out.push_back(std::move(cp));
            }
            // inclusion: lb occurs inside la
            if (a != b && lb.size() <= la.size()) {
                for (std::size_t pos = 0; pos + lb.size() <= la.size(); ++pos) {
                    if (!std::equal(lb.begin(), lb.end(), la.begin() + pos)) continue;
                    CriticalPair cp;
                    cp.overlap = la;
                    cp.rule_a = a;
                    cp.rule_b = b;
                    cp.residual = residual(rules[a].rhs,
                                           splice(Word(la.begin(), la.begin() + pos), rules[b].rhs,
                                                  Word(la.begin() + pos + lb.size(), la.end())));
                    out.push_back(std::move(cp));
                }
            }
        }
    }
    return out;
}

std::vector<CriticalPair> critical_pairs(const Presentation& pres) {
    std::vector<CriticalPair> out;
    for (auto& cp : overlaps(pres))
        if (!cp.residual.empty()) out.push_back(std::move(cp));
    return out;
}

std::vector<StarDefect> star_closure_defects(const Presentation& pres) {
    std::vector<StarDefect> out;
    for (std::size_t r = 0; r < pres.rules().size(); ++r) {
        Terms starred;
        for (const auto& [w, c] : pres.relation(r)) {
            Word sw(w.rbegin(), w.rend());
            for (auto& g : sw) g = pres.star_of(g);
            add_term(starred, sw, c.conj());
        }
        Terms res = pres.reduce(starred);
        if (!res.empty()) out.push_back({r, std::move(res)});
    }
    return out;
}

std::vector<Word> normal_words(const Presentation& pres, int max_degree) {
    std::vector<Word> out{Word{}};
    std::vector<Word> frontier{Word{}};
    for (int d = 1; d <= max_degree; ++d) {
        std::vector<Word> next;
        for (const auto& w : frontier) {
            for (std::size_t g = 0; g < pres.size(); ++g) {
                Word ext = w;
                ext.push_back(static_cast<GenIndex>(g));
                if (pres.is_normal(ext)) next.push_back(std::move(ext));
            }
        }
        std::sort(next.begin(), next.end(), DegLex{});
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

}  // namespace hopflab
