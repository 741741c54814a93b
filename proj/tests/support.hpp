#pragma once

#include <random>

#include "hopflab/models.hpp"

namespace testing {

// Random element with up to `terms` words of length <= max_degree and small
// Gaussian-rational coefficients, optionally scaled by a parameter.
inline hopflab::NCPoly random_poly(const hopflab::PresentationPtr& pres, std::mt19937& rng, int max_degree,
                                   int terms = 3) {
    std::uniform_int_distribution<int> len(0, max_degree), gen(0, static_cast<int>(pres->size()) - 1),
        coef(-3, 3), count(1, terms);
    hopflab::Terms t;
    const int n = count(rng);
    for (int k = 0; k < n; ++k) {
        hopflab::Word w(len(rng));
        for (auto& g : w) g = static_cast<hopflab::GenIndex>(gen(rng));
        hopflab::Scalar c(hopflab::GaussRat(mpq_class(coef(rng), 1 + (k % 2)), mpq_class(coef(rng))));
        if (!pres->params().empty() && k % 3 == 2) c *= hopflab::Scalar::param(pres->params().front());
        hopflab::add_term(t, w, c);
    }
    return hopflab::NCPoly(pres, t);
}

}  // namespace testing
