#pragma once

// Words, noncommutative polynomials, presentations by oriented rewrite rules,
// normal ordering and local-confluence diagnostics.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hopflab/scalar.hpp"

namespace hopflab {

using GenIndex = std::uint16_t;

/// Sequence of generator indices; the empty word is the unit.
using Word = std::vector<GenIndex>;

/// Degree-lexicographic order induced by generator precedence (declaration order).
struct DegLex {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

using Terms = std::map<Word, Scalar, DegLex>;

void add_term(Terms& terms, const Word& w, const Scalar& c);
void add_scaled(Terms& into, const Terms& from, const Scalar& c);
Word concat(const Word& a, const Word& b);

struct Generator {
    std::string name;
    std::string star;  // star partner; equal to name for self-adjoint generators
    bool grouplike = false;
};

/// lhs -> rhs, with every word of rhs strictly below lhs in DegLex.
struct RewriteRule {
    Word lhs;
    Terms rhs;
};

class Presentation;
using PresentationPtr = std::shared_ptr<const Presentation>;

class Presentation {
public:
    /// Orients every relation (an element that must vanish) into a rule whose
    /// left side is the relation's DegLex-leading word.
    static PresentationPtr create(std::string name, std::vector<std::string> params,
                                  std::vector<Generator> generators, const std::vector<Terms>& relations);

    /// Bind parameters to exact real values; the bound names leave the parameter list.
    PresentationPtr bind(const std::map<std::string, mpq_class>& values) const;

    const std::string& name() const { return name_; }
    const std::vector<std::string>& params() const { return params_; }
    const std::vector<Generator>& generators() const { return generators_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }
    std::size_t size() const { return generators_.size(); }

    std::optional<GenIndex> find(const std::string& name) const;
    /// Throws DefinitionError for undeclared names.
    GenIndex index_of(const std::string& name) const;
    GenIndex star_of(GenIndex g) const { return star_[g]; }
    bool has_param(const std::string& name) const;

    /// Defining relation of rule k, i.e. lhs - rhs in the free algebra.
    Terms relation(std::size_t k) const;

    /// Leftmost-innermost normal form, rules tried in declaration order.
    Terms normal_form(const Word& w) const;
    Terms reduce(const Terms& p) const;
    bool is_normal(const Word& w) const;

    std::string word_str(const Word& w) const;
    std::string terms_str(const Terms& t) const;

private:
    Presentation() = default;
    void finalize();
    std::optional<std::pair<std::size_t, std::size_t>> leftmost_redex(const Word& w) const;
    void check_word(const Word& w) const;

    std::string name_;
    std::vector<std::string> params_;
    std::vector<Generator> generators_;
    std::vector<GenIndex> star_;
    std::vector<RewriteRule> rules_;
    std::vector<std::vector<std::size_t>> rules_by_first_;

    mutable std::mutex cache_mutex_;
    mutable std::map<Word, Terms, DegLex> cache_;
};

/// Element of the algebra presented by `presentation()`. Arithmetic operators
/// act in the free algebra (no reduction); use reduce/multiply for normal forms.
class NCPoly {
public:
    NCPoly() = default;
    explicit NCPoly(PresentationPtr pres, Terms terms = {});

    static NCPoly constant(PresentationPtr pres, const Scalar& c);
    static NCPoly one(PresentationPtr pres) { return constant(std::move(pres), Scalar(1)); }
    static NCPoly word(PresentationPtr pres, Word w, const Scalar& c = Scalar(1));
    static NCPoly generator(PresentationPtr pres, const std::string& name);

    const PresentationPtr& presentation() const { return pres_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;

    NCPoly operator-() const;
    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    NCPoly& operator*=(const Scalar& c);
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(NCPoly a, const Scalar& c) { return a *= c; }
    friend NCPoly operator*(const Scalar& c, NCPoly a) { return a *= c; }
    /// Formal (concatenation) product.
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
    friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

    std::string str() const;

private:
    void check_compatible(const NCPoly& o) const;

    PresentationPtr pres_;
    Terms terms_;
};

NCPoly reduce(const NCPoly& p, const Presentation& pres);
NCPoly reduce(const NCPoly& p);
NCPoly multiply(const NCPoly& p, const NCPoly& q, const Presentation& pres);
NCPoly multiply(const NCPoly& p, const NCPoly& q);
/// Word reversal, generator star, scalar conjugation, then reduce.
NCPoly star(const NCPoly& p, const Presentation& pres);
NCPoly star(const NCPoly& p);
NCPoly commutator(const NCPoly& p, const NCPoly& q, const Presentation& pres);
NCPoly commutator(const NCPoly& p, const NCPoly& q);

/// Image of p under the algebra map sending generator k of p's presentation
/// to images[k] (all in the target presentation), reduced in the target.
NCPoly map_generators(const NCPoly& p, const PresentationPtr& target, const std::vector<NCPoly>& images);

struct CriticalPair {
    Word overlap;
    std::size_t rule_a = 0;
    std::size_t rule_b = 0;
    Terms residual;  // normal form via rule_a minus normal form via rule_b
};

/// Every overlap or inclusion of two rule left sides, with its residual.
std::vector<CriticalPair> overlaps(const Presentation& pres);
/// Overlaps whose two reductions disagree; empty iff the rule set is locally confluent.
std::vector<CriticalPair> critical_pairs(const Presentation& pres);

struct StarDefect {
    std::size_t rule = 0;
    Terms residual;  // reduce(star(relation))
};
std::vector<StarDefect> star_closure_defects(const Presentation& pres);

/// Normal words (no rule lhs as a subword) of length <= max_degree, in DegLex order.
std::vector<Word> normal_words(const Presentation& pres, int max_degree);

}  // namespace hopflab
