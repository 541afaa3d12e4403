#pragma once

#include "lgapery/laurent.hpp"
#include "lgapery/upoly.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace lgapery {

/// Convex hull of finitely many lattice points in dimension <= 3. Vertices are
/// the extreme points only, sorted lexicographically.
struct LatticePolytope {
    std::size_t dimension = 0;
    int affine_dimension = -1;
    std::vector<ExponentVector> vertices;

    bool full_dimensional() const noexcept {
        return affine_dimension == static_cast<int>(dimension);
    }
};

/// A facet {x : <normal, x> = -offset} with the polytope on the side
/// <normal, x> >= -offset. The normal is primitive. Vertices are in cyclic
/// order; lattice points are sorted lexicographically.
struct Facet {
    ExponentVector normal;
    std::int64_t offset = 0;
    std::vector<ExponentVector> vertices;
    std::vector<ExponentVector> lattice_points;
};

/// A 1-face from start to end (start < end lexicographically).
struct Edge {
    ExponentVector start;
    ExponentVector end;
    ExponentVector direction;
    std::vector<ExponentVector> lattice_points;

    std::int64_t lattice_length() const noexcept {
        return static_cast<std::int64_t>(lattice_points.size()) - 1;
    }
};

/// Toric coordinates adapted to a facet: m1, m2 span the facet's direction
/// lattice, <normal, m3> = 1, and det(m1, m2, m3) = ±1.
struct FacetFrame {
    ExponentVector origin;
    ExponentVector m1;
    ExponentVector m2;
    ExponentVector m3;
};

LatticePolytope convex_hull(std::span<const ExponentVector> points);
/// Throws GeometryError for the zero polynomial or dimension > 3.
LatticePolytope newton_polytope(const LaurentPolynomial& p);

/// Facets of a full-dimensional 3-polytope, sorted by normal. Throws
/// GeometryError on degenerate input.
std::vector<Facet> facets(const LatticePolytope& polytope);
/// Edges of a full-dimensional 3-polytope, sorted by endpoints.
std::vector<Edge> edges(const LatticePolytope& polytope);

std::vector<ExponentVector> interior_lattice_points(const LatticePolytope& polytope);
/// Origin is the only interior lattice point and every facet has offset 1.
bool is_reflexive(const LatticePolytope& polytope);

std::int64_t determinant(const ExponentVector& a, const ExponentVector& b, const ExponentVector& c);
ExponentVector primitive(const ExponentVector& v);

/// Canonical frame for a facet. Without an origin choice the frame sits at the
/// lexicographically smallest facet vertex. When the origin is a vertex, m1 is
/// the lexicographically smaller primitive edge direction leaving it and m2 is
/// chosen so the whole facet has nonnegative (m1, m2)-coordinates. m3 is the
/// smallest (L1, then lexicographic) lattice vector with <normal, m3> = 1.
/// Throws std::invalid_argument when the origin is not a lattice point of the facet.
FacetFrame facet_frame(const LatticePolytope& polytope, const Facet& facet,
                       const std::optional<ExponentVector>& origin_choice = std::nullopt);

/// Validates a caller-supplied frame against the facet.
FacetFrame make_facet_frame(const Facet& facet, ExponentVector origin, ExponentVector m1,
                            ExponentVector m2, ExponentVector m3);

/// The terms of p on the facet, shifted by -origin and written in (m1, m2)
/// coordinates; a 2-variable Laurent polynomial.
LaurentPolynomial facet_polynomial(const LaurentPolynomial& p, const Facet& facet, const FacetFrame& frame);

/// Coefficients of p read along the edge's lattice points.
UPoly edge_polynomial(const LaurentPolynomial& p, const Edge& edge);

/// True iff q = c·u^a·(u-1)^b·(u+1)^e. Throws std::invalid_argument for q = 0.
bool has_only_pm1_roots(const UPoly& q);

struct EdgeFailure {
    Edge edge;
    UPoly polynomial;
};

struct TemperednessReport {
    bool passed = false;
    std::vector<EdgeFailure> failures;
};

/// Edge criterion for temperedness of a Minkowski polynomial: every edge
/// polynomial has only ±1 as roots. Requires a reflexive full-dimensional
/// Newton polytope and throws GeometryError otherwise.
TemperednessReport temperedness_check(const LaurentPolynomial& p);

}  // namespace lgapery
