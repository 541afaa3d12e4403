#include "lgapery/catalog.hpp"

#include "lgapery/parser.hpp"

namespace lgapery {

namespace {

CatalogEntry make_entry(std::string name, std::string expression, UPoly symbol, Rational M, std::vector<Surd> points,
                        std::string basis) {
    LaurentPolynomial phi = parse(expression, 3);
    return {std::move(name), std::move(expression), std::move(phi), std::move(symbol), std::move(M),
            std::move(points), std::move(basis)};
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries{
        make_entry("V12", "(1+x+z)*(1+x+y+z)*(1+z)*(y+z)/(x*y*z)", UPoly{1, -34, 1}, 1,
                   {Surd{17, -12, 2}, Surd{17, 12, 2}}, "zeta3"),
        make_entry("V16", "(1+x+y+z)*(1+z)*(1+y)*(1+x)/(x*y*z)", UPoly{16, -24, 1}, 16,
                   {Surd{12, -8, 2}, Surd{12, 8, 2}}, "zeta3"),
        make_entry("V18", "(x+y+z)*(x+y+z+x*y+x*z+y*z+x*y*z)/(x*y*z)", UPoly{-27, -18, 1}, -27,
                   {Surd{9, -6, 3}, Surd{9, 6, 3}}, "pi3_over_sqrt3"),
        make_entry("R1", "(1+x+y+z)*(x*y*z+x*y+x*z+y*z)/(x*y*z)", UPoly{64, -20, 1}, 64,
                   {Surd{4, 0, 0}, Surd{16, 0, 0}}, "zeta3"),
    };
    return entries;
}

const CatalogEntry* find_catalog_entry(std::string_view name) {
    for (const auto& e : catalog())
        if (e.name == name) return &e;
    return nullptr;
}

}  // namespace lgapery
