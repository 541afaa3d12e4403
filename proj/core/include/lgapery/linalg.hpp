#pragma once

#include "lgapery/rational.hpp"

#include <cstddef>
#include <vector>

namespace lgapery {

using IntegerMatrix = std::vector<std::vector<Integer>>;

/// Row echelon form by fraction-free (Bareiss) elimination. Every entry stays
/// an integer minor of the input; divisions are exact.
struct EchelonForm {
    IntegerMatrix rows;                 // only the nonzero rows
    std::vector<std::size_t> pivots;    // pivot column of each row
    std::size_t columns = 0;

    std::size_t rank() const noexcept { return pivots.size(); }
};

EchelonForm bareiss_echelon(IntegerMatrix m);

/// Basis of the right nullspace {v : M v = 0}. Each vector is primitive
/// (integer entries with gcd 1) and its last nonzero entry is positive; one
/// vector per free column, in column order.
std::vector<std::vector<Integer>> nullspace(const IntegerMatrix& m);

/// Scales each row of a rational matrix by the lcm of its denominators.
IntegerMatrix clear_denominators(const std::vector<std::vector<Rational>>& m);

}  // namespace lgapery
