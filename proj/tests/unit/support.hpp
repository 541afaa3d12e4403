#pragma once

#include "lgapery/laurent.hpp"

#include <random>

namespace lgapery::testing {

// Small random Laurent polynomial: up to max_terms terms, exponents in
// [-radius, radius]^dim, integer coefficients in [-3, 3] (sometimes halves).
inline LaurentPolynomial random_polynomial(std::mt19937& rng, std::size_t dim = 3, int radius = 2,
                                           int max_terms = 5, bool rational = false) {
    std::uniform_int_distribution<int> exp(-radius, radius), coef(-3, 3), count(1, max_terms), den(1, 2);
    LaurentPolynomial p(dim);
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
        ExponentVector e(dim);
        for (std::size_t k = 0; k < dim; ++k) e[k] = exp(rng);
        Rational c(coef(rng), rational ? den(rng) : 1);
        c.canonicalize();
        p.add_term(e, c);
    }
    if (p.is_zero()) p.add_term(ExponentVector(dim), 1);
    return p;
}

}  // namespace lgapery::testing
