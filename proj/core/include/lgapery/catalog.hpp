#pragma once

#include "lgapery/laurent.hpp"
#include "lgapery/operator.hpp"
#include "lgapery/upoly.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace lgapery {

struct CatalogEntry {
    std::string name;
    std::string expression;  ///< parseable text of phi
    LaurentPolynomial phi;
    UPoly expected_symbol;
    Rational expected_M;
    std::vector<Surd> expected_singular_points;  ///< nonzero finite points in increasing order
    std::string expected_basis;                  ///< recognition basis of the Apery limit
};

/// V12, V16, V18 and R1, parsed on first use.
const std::vector<CatalogEntry>& catalog();
/// nullptr when no entry carries this name (case-sensitive).
const CatalogEntry* find_catalog_entry(std::string_view name);

}  // namespace lgapery
