#pragma once

// Text format for presentations with optional Hopf data:
//
//   algebra kminkowski2d {
//     params: kappa;
//     gens: x0, x1;
//     rel: x1*x0 - x0*x1 + i*kappa*x1;
//     coproduct: x0 -> x0 (x) 1 + 1 (x) x0;
//     counit: x0 -> 0;
//     antipode: x0 -> -x0;
//   }
//
// Generator annotations: `B [star = Bs]`, `E [grouplike]`. Declaration order is
// precedence. `(x)` separates tensor legs, `i` is the imaginary unit, `#` starts
// a comment. Scalars are rational literals, `i` and declared parameters.

#include <optional>
#include <string>
#include <string_view>

#include "hopflab/hopf.hpp"

namespace hopflab {

struct AlgebraDocument {
    PresentationPtr pres;
    std::optional<HopfData> hopf;  // present when any structure-map entry was given
};

AlgebraDocument parse_algebra(std::string_view text);
std::string print_algebra(const AlgebraDocument& doc);

/// Element of a presentation written in the expression grammar (no reduction).
NCPoly parse_element(const PresentationPtr& pres, std::string_view text);
TensorPoly parse_tensor(const PresentationPtr& pres, std::string_view text);
/// Scalar over the given parameter names.
Scalar parse_scalar(std::string_view text, const std::vector<std::string>& params = {});

}  // namespace hopflab
