#pragma once

// Coalgebra structure maps, Hopf-axiom verification with residual witnesses,
// and duality pairings between two presented Hopf algebras.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopflab/nc_algebra.hpp"

namespace hopflab {

/// One word per leg. Rank 0 keys (no legs) carry plain scalars.
using TensorKey = std::vector<Word>;

struct TensorKeyLess {
    bool operator()(const TensorKey& a, const TensorKey& b) const {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), DegLex{});
    }
};

using TensorTerms = std::map<TensorKey, Scalar, TensorKeyLess>;

void add_term(TensorTerms& terms, const TensorKey& key, const Scalar& c);

class TensorPoly {
public:
    TensorPoly() = default;
    TensorPoly(std::vector<PresentationPtr> legs, TensorTerms terms = {});

    static TensorPoly scalar(const Scalar& s);
    static TensorPoly from(const NCPoly& p);

    const std::vector<PresentationPtr>& legs() const { return legs_; }
    const TensorTerms& terms() const { return terms_; }
    std::size_t rank() const { return legs_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Normal form of every leg.
    TensorPoly reduced() const;
    /// Legwise product followed by legwise reduction.
    TensorPoly operator*(const TensorPoly& o) const;

    TensorPoly operator-() const;
    TensorPoly& operator+=(const TensorPoly& o);
    TensorPoly& operator-=(const TensorPoly& o);
    friend TensorPoly operator+(TensorPoly a, const TensorPoly& b) { return a += b; }
    friend TensorPoly operator-(TensorPoly a, const TensorPoly& b) { return a -= b; }
    friend bool operator==(const TensorPoly& a, const TensorPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const TensorPoly& a, const TensorPoly& b) { return !(a == b); }

    std::string str() const;

private:
    void check_legs(const TensorPoly& o) const;

    std::vector<PresentationPtr> legs_;
    TensorTerms terms_;
};

/// Outer tensor product a (x) b.
TensorPoly tensor(const TensorPoly& a, const TensorPoly& b);
TensorPoly tensor(const NCPoly& a, const NCPoly& b);

/// Per-generator structure maps. Entries may be absent only for pairing-only
/// algebras; check_hopf requires every entry.
struct HopfData {
    PresentationPtr pres;
    std::vector<std::optional<TensorTerms>> coproduct;  // two legs
    std::vector<std::optional<Scalar>> counit;
    std::vector<std::optional<Terms>> antipode;

    explicit HopfData(PresentationPtr p = nullptr);

    void set_coproduct(const std::string& gen, const TensorPoly& value);
    void set_counit(const std::string& gen, const Scalar& value);
    void set_antipode(const std::string& gen, const NCPoly& value);

    bool complete() const;
    /// Group-like generators must satisfy Delta(g) = g (x) g and eps(g) = 1.
    void validate() const;
    HopfData bind(PresentationPtr bound, const std::map<std::string, mpq_class>& values) const;
};

TensorPoly coproduct(const NCPoly& p, const HopfData& hopf);
Scalar counit(const NCPoly& p, const HopfData& hopf);
NCPoly antipode(const NCPoly& p, const HopfData& hopf);

enum class Axiom {
    coproduct_respects_relations,
    counit_respects_relations,
    antipode_respects_relations,
    coassociativity,
    counit_law,
    antipode_law,
};

std::string axiom_name(Axiom a);
const std::vector<Axiom>& all_axioms();

struct Witness {
    std::string side;
    NCPoly element;
    TensorPoly residual;  // reduced, nonzero
};

struct AxiomResult {
    Axiom axiom;
    bool pass = true;
    std::vector<Witness> witnesses;
};

struct AxiomReport {
    int degree = 0;
    std::vector<AxiomResult> results;

    bool all_pass() const;
    const AxiomResult& at(Axiom a) const;
    std::vector<Axiom> failed() const;
};

/// Exact check of the bialgebra and antipode axioms on all generators, all
/// defining relations and every normal word up to `degree`.
AxiomReport check_hopf(const Presentation& pres, const HopfData& hopf, int degree = 3);

/// Generator-level pairing values; undeclared pairs read as 0.
struct PairingTable {
    std::string name;
    std::string model_a;
    std::string model_b;
    std::map<std::pair<std::string, std::string>, Scalar> entries;

    Scalar lookup(const std::string& a, const std::string& b) const;
};

/// <pq, r> = <p (x) q, Delta r> and <p, rs> = <Delta p, r (x) s>, down to the
/// table and the unit conventions <1, .> = eps_B, <., 1> = eps_A.
Scalar pair(const NCPoly& a, const NCPoly& b, const PairingTable& table, const HopfData& hopf_a,
            const HopfData& hopf_b);

struct PairingDefect {
    std::string kind;  // "relation-A", "relation-B" or "commutator"
    std::string left;
    std::string right;
    Scalar lhs;
    Scalar rhs;
};

struct PairingCompatReport {
    int degree = 0;
    std::size_t checked = 0;
    std::vector<PairingDefect> defects;
    bool compatible() const { return defects.empty(); }
};

PairingCompatReport check_pairing_compat(const HopfData& hopf_a, const HopfData& hopf_b, const PairingTable& table,
                                         int degree = 2);

}  // namespace hopflab
