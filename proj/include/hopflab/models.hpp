#pragma once

// Preset algebras. Each κ-family model carries its own `kappa` symbol; no
// identification between models is made.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopflab/dsl.hpp"

namespace hopflab {

struct ModelInfo {
    std::string name;
    std::string anchor;  // what the preset encodes, one line
    std::string notes;   // convention choices
    std::vector<std::string> params;
    bool has_hopf = false;
    bool known_failing = false;     // ships a structure map that violates an axiom on purpose
    bool star_consistent = true;    // every starred relation reduces to zero
    std::vector<std::string> pairings;
};

struct ModelCatalogEntry {
    ModelInfo info;
    PresentationPtr pres;
    std::optional<HopfData> hopf;

    AlgebraDocument document() const { return {pres, hopf}; }
};

/// Deterministic listing in catalog order.
const std::vector<ModelInfo>& list_models();
bool has_model(const std::string& name);

/// DSL source of a preset, before any binding.
const std::string& model_source(const std::string& name);

/// Throws UsageError for an unknown name or a binding of an undeclared
/// parameter, DomainError for values outside the documented domain
/// (kappa != 0, mu != 0, podles c >= 0, cartesian-sphere c > -1/4).
ModelCatalogEntry build_model(const std::string& name, const std::map<std::string, mpq_class>& bindings = {});

struct PairingSetup {
    PairingTable table;
    HopfData hopf_a;
    HopfData hopf_b;
};

const std::vector<std::string>& list_pairings();

/// `model_a` swaps the first algebra for another preset with the same
/// generator names (used to audit alternative bracket conventions).
PairingSetup build_pairing(const std::string& name, const std::map<std::string, mpq_class>& bindings = {},
                           const std::string& model_a = "");

/// Podleś generators sent to the commutative sphere: A -> 1/2 + x3,
/// B -> x1 + i x2, Bs -> x1 - i x2. Returns the reduced images of every
/// Podleś relation at mu = 1 and the given c.
std::vector<NCPoly> podles_classical_images(const mpq_class& c);

/// [u, (M00)^2 - (M01)^2 - 1] for u in {u0, u1}, expanded through the
/// cross-relations as a derivation and reduced.
std::vector<NCPoly> kpoincare_casimir_commutators(const std::map<std::string, mpq_class>& bindings = {});

}  // namespace hopflab
