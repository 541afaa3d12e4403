#include "support.hpp"

#include "lgapery/catalog.hpp"
#include "lgapery/parser.hpp"
#include "lgapery/errors.hpp"
#include "lgapery/polytope.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace lgapery;

namespace {

LaurentPolynomial tetra() { return parse("x + y + z + 1/(x*y*z)", 3); }

LatticePolytope hull_of(std::vector<ExponentVector> points) { return convex_hull(points); }

LatticePolytope cube() {
    std::vector<ExponentVector> pts;
    for (int a : {-1, 1})
        for (int b : {-1, 1})
            for (int c : {-1, 1}) pts.push_back({a, b, c});
    return hull_of(pts);
}

const Facet& facet_with(const std::vector<Facet>& fs, const std::vector<ExponentVector>& pts) {
    for (const auto& f : fs) {
        bool all = true;
        for (const auto& p : pts) all = all && dot(f.normal, p) == -f.offset;
        if (all) return f;
    }
    FAIL("no facet through the given points");
    return fs.front();
}

std::vector<Rational> coefficient_multiset(const LaurentPolynomial& p) {
    std::vector<Rational> out;
    for (const auto& [e, c] : p.terms()) out.push_back(c);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_SUITE("polytope") {

TEST_CASE("tetrahedron vertices, facets, edges") {
    const auto P = newton_polytope(tetra());
    CHECK(P.full_dimensional());
    CHECK(P.vertices == std::vector<ExponentVector>{{-1, -1, -1}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
    const auto fs = facets(P);
    CHECK(fs.size() == 4);
    const auto es = edges(P);
    CHECK(es.size() == 6);
    for (const auto& e : es) CHECK(e.lattice_length() >= 1);

    const auto& f = facet_with(fs, {{1, 0, 0}, {0, 1, 0}, {-1, -1, -1}});
    // The fourth vertex lies strictly inside the half-space.
    CHECK(dot(f.normal, ExponentVector{0, 0, 1}) > -f.offset);
    CHECK(f.offset == 1);
}

TEST_CASE("degenerate hulls") {
    const auto point = newton_polytope(parse("x", 3));
    CHECK(point.affine_dimension == 0);
    CHECK(point.vertices == std::vector<ExponentVector>{{1, 0, 0}});
    CHECK_FALSE(point.full_dimensional());
    CHECK_THROWS_AS(facets(point), GeometryError);
    CHECK_THROWS_AS(newton_polytope(LaurentPolynomial(3)), GeometryError);
    // Interior points of a hull are not vertices.
    const auto seg = hull_of({{0, 0, 0}, {1, 1, 1}, {2, 2, 2}});
    CHECK(seg.affine_dimension == 1);
    CHECK(seg.vertices.size() == 2);
}

TEST_CASE("edge through two tetrahedron vertices") {
    const auto es = edges(newton_polytope(tetra()));
    const auto it = std::find_if(es.begin(), es.end(), [](const Edge& e) {
        return e.start == ExponentVector{0, 1, 0} && e.end == ExponentVector{1, 0, 0};
    });
    REQUIRE(it != es.end());
    CHECK((it->direction == ExponentVector{1, -1, 0} || it->direction == ExponentVector{-1, 1, 0}));
    CHECK(it->lattice_points.size() == 2);
    const UPoly q = edge_polynomial(tetra(), *it);
    CHECK(q == UPoly{1, 1});
}

TEST_CASE("cube [-1,1]^3") {
    const auto P = cube();
    const auto fs = facets(P);
    REQUIRE(fs.size() == 6);
    std::set<ExponentVector> normals;
    for (const auto& f : fs) {
        normals.insert(f.normal);
        CHECK(f.offset == 1);
        CHECK(f.lattice_points.size() == 9);
    }
    CHECK(normals == std::set<ExponentVector>{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
    const auto es = edges(P);
    CHECK(es.size() == 12);
    for (const auto& e : es) {
        CHECK(e.lattice_length() == 2);
        CHECK(e.lattice_points.size() == 3);
        for (std::size_t i = 1; i < e.lattice_points.size(); ++i) {
            CHECK(e.lattice_points[i] - e.lattice_points[i - 1] == e.direction);
        }
    }
    CHECK(is_reflexive(P));
}

TEST_CASE("facet and vertex invariants, Euler relation") {
    std::vector<LatticePolytope> polys{newton_polytope(tetra()), cube()};
    for (const auto& entry : catalog()) polys.push_back(newton_polytope(entry.phi));
    for (const auto& P : polys) {
        const auto fs = facets(P);
        const auto es = edges(P);
        CHECK(static_cast<long>(P.vertices.size()) - static_cast<long>(es.size()) + static_cast<long>(fs.size()) == 2);
        for (const auto& f : fs) {
            std::int64_t g = 0;
            for (std::size_t i = 0; i < 3; ++i) g = std::gcd(g, f.normal[i]);
            CHECK(g == 1);
            for (const auto& v : P.vertices) {
                const bool on = std::find(f.vertices.begin(), f.vertices.end(), v) != f.vertices.end();
                if (on) {
                    CHECK(dot(f.normal, v) == -f.offset);
                } else {
                    CHECK(dot(f.normal, v) > -f.offset);
                }
            }
        }
        for (const auto& v : P.vertices) {
            const auto count = std::count_if(fs.begin(), fs.end(), [&](const Facet& f) { return dot(f.normal, v) == -f.offset; });
            CHECK(count >= 3);
        }
        // Every vertex is extreme: dropping it shrinks the hull.
        for (std::size_t i = 0; i < P.vertices.size(); ++i) {
            auto rest = P.vertices;
            rest.erase(rest.begin() + static_cast<long>(i));
            CHECK(convex_hull(rest).vertices != P.vertices);
        }
    }
}

TEST_CASE("reflexivity") {
    CHECK(is_reflexive(newton_polytope(tetra())));
    for (const auto& entry : catalog()) {
        const auto P = newton_polytope(entry.phi);
        CHECK_MESSAGE(is_reflexive(P), entry.name);
        CHECK(interior_lattice_points(P) == std::vector<ExponentVector>{{0, 0, 0}});
        for (const auto& f : facets(P)) {
            CHECK(f.offset == 1);
            for (const auto& p : f.lattice_points) CHECK(dot(f.normal, p) == -1);
        }
    }
    const auto dilated = hull_of({{2, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}});
    CHECK_FALSE(is_reflexive(dilated));
    bool off = false;
    for (const auto& f : facets(dilated)) off = off || f.offset != 1;
    CHECK(off);
}

TEST_CASE("V16 polytope") {
    const auto& v16 = *find_catalog_entry("V16");
    const auto P = newton_polytope(v16.phi);
    CHECK(is_reflexive(P));
    // Every monomial has exponent sum at most 1, so (1,1,1) is not in the support.
    CHECK(v16.phi.coefficient({1, 1, 1}) == 0);
    CHECK(v16.phi.coefficient({-1, -1, -1}) == 1);
    for (const auto& e : edges(P)) {
        // Each edge polynomial is c (u + 1)^k.
        UPoly q = edge_polynomial(v16.phi, e);
        const auto k = static_cast<std::size_t>(q.degree());
        UPoly power{1};
        for (std::size_t i = 0; i < k; ++i) power = power * UPoly{1, 1};
        CHECK(q == power * q.leading());
    }
}

TEST_CASE("facet frame of the tetrahedron facet") {
    const auto P = newton_polytope(tetra());
    const auto fs = facets(P);
    const auto& f = facet_with(fs, {{1, 0, 0}, {0, 1, 0}, {-1, -1, -1}});
    const auto frame = facet_frame(P, f, ExponentVector{-1, -1, -1});
    CHECK(frame.origin == ExponentVector{-1, -1, -1});
    CHECK(std::set<ExponentVector>{frame.m1, frame.m2} == std::set<ExponentVector>{{2, 1, 1}, {1, 2, 1}});
    CHECK(frame.m3 == ExponentVector{-1, 0, 0});
    CHECK(facet_polynomial(tetra(), f, frame) == parse("1 + x + y", 2));

    const auto given = make_facet_frame(f, {-1, -1, -1}, {2, 1, 1}, {1, 2, 1}, {-1, 0, 0});
    CHECK(facet_polynomial(tetra(), f, given) == parse("1 + x + y", 2));
    CHECK_THROWS(make_facet_frame(f, {-1, -1, -1}, {2, 1, 1}, {1, 2, 1}, {0, 0, 1}));
    CHECK_THROWS_AS(facet_frame(P, f, ExponentVector{0, 0, 1}), std::invalid_argument);
}

TEST_CASE("frame invariants and frame independence") {
    std::vector<LaurentPolynomial> polys{tetra()};
    for (const auto& entry : catalog()) polys.push_back(entry.phi);
    for (const auto& phi : polys) {
        const auto P = newton_polytope(phi);
        for (const auto& f : facets(P)) {
            const auto a = facet_frame(P, f);
            CHECK(std::abs(determinant(a.m1, a.m2, a.m3)) == 1);
            CHECK(dot(f.normal, a.m1) == 0);
            CHECK(dot(f.normal, a.m2) == 0);
            CHECK(dot(f.normal, a.m3) == 1);
            const auto pa = facet_polynomial(phi, f, a);
            for (const auto& v : f.vertices) {
                const auto b = facet_frame(P, f, v);
                const auto pb = facet_polynomial(phi, f, b);
                CHECK(coefficient_multiset(pa) == coefficient_multiset(pb));
                // The transition between frames is integral and unimodular:
                // m1, m2 of one frame are integer combinations of the other.
                const std::vector<ExponentVector> basis{a.m1, a.m2, a.m3};
                const auto c1 = monomial_substitute(LaurentPolynomial::monomial(b.m1), basis, ExponentVector(3));
                const auto c2 = monomial_substitute(LaurentPolynomial::monomial(b.m2), basis, ExponentVector(3));
                const auto e1 = c1.support().front(), e2 = c2.support().front();
                CHECK(e1[2] == 0);
                CHECK(e2[2] == 0);
                CHECK(std::abs(e1[0] * e2[1] - e1[1] * e2[0]) == 1);
            }
        }
    }
}

TEST_CASE("facet polynomial of a single support point is constant") {
    const auto P = newton_polytope(tetra());
    const auto fs = facets(P);
    const auto& f = facet_with(fs, {{1, 0, 0}, {0, 1, 0}, {-1, -1, -1}});
    const auto frame = facet_frame(P, f, ExponentVector{1, 0, 0});
    const auto fp = facet_polynomial(parse("3*x", 3), f, frame);
    CHECK(fp == LaurentPolynomial::constant(2, 3));
}

TEST_CASE("edge polynomials") {
    const auto phi = parse("(1+x)^2*(1+y)^2*(1+z)^2/(x*y*z)", 3);
    const auto monomial = parse("x*y*z", 3);
    for (const auto& e : edges(newton_polytope(phi))) {
        CHECK(edge_polynomial(phi, e).degree() == e.lattice_length());
        // Support at one endpoint only gives a monomial.
        if (e.end == ExponentVector{1, 1, 1}) {
            const UPoly u = edge_polynomial(monomial, e);
            CHECK(u == UPoly::monomial(static_cast<std::size_t>(u.degree())));
        }
        // Reading the edge backwards reverses the polynomial.
        Edge back = e;
        std::swap(back.start, back.end);
        back.direction = -back.direction;
        std::reverse(back.lattice_points.begin(), back.lattice_points.end());
        CHECK(edge_polynomial(phi, back) == edge_polynomial(phi, e).reversed());
    }
}

TEST_CASE("pm1 roots") {
    CHECK(has_only_pm1_roots(UPoly{1, 1}));
    CHECK(has_only_pm1_roots(UPoly{-1, 0, 1}));
    CHECK_FALSE(has_only_pm1_roots(UPoly{1, 1, 1}));
    CHECK(has_only_pm1_roots(UPoly{0, 0, 3}));
    CHECK_FALSE(has_only_pm1_roots(UPoly{2, 1}));
    CHECK_THROWS_AS(has_only_pm1_roots(UPoly{}), std::invalid_argument);

    std::mt19937 rng(31);
    std::uniform_int_distribution<int> c(-2, 2), deg(1, 3);
    auto random_q = [&]() {
        std::vector<Rational> coeffs;
        const int d = deg(rng);
        for (int i = 0; i <= d; ++i) coeffs.push_back(c(rng));
        if (coeffs.back() == 0) coeffs.back() = 1;
        return UPoly(coeffs);
    };
    auto random_pm1 = [&]() {
        UPoly q{Rational(c(rng) == 0 ? 1 : 2)};
        for (int i = 0; i < deg(rng); ++i) q = q * (c(rng) > 0 ? UPoly{1, 1} : c(rng) < 0 ? UPoly{-1, 1} : UPoly{0, 1});
        return q;
    };
    for (int i = 0; i < 200; ++i) {
        const UPoly q = i % 2 ? random_q() : random_pm1();
        const UPoly r = i % 3 ? random_q() : random_pm1();
        if (q.is_zero() || r.is_zero()) continue;
        CHECK(has_only_pm1_roots(q * r) == (has_only_pm1_roots(q) && has_only_pm1_roots(r)));
    }
}

TEST_CASE("temperedness") {
    CHECK(temperedness_check(tetra()).passed);
    for (const auto& entry : catalog()) {
        const auto report = temperedness_check(entry.phi);
        CHECK_MESSAGE(report.passed, entry.name);
        CHECK(report.failures.empty());
        for (const auto& e : edges(newton_polytope(entry.phi))) CHECK(has_only_pm1_roots(edge_polynomial(entry.phi, e)));
    }
    // Not reflexive: the check refuses before looking at edges.
    CHECK_THROWS_AS(temperedness_check(parse("x + y + z + 1/(x*y*z) + 3*x/y", 3)), GeometryError);

    const auto control = parse("(1+x)^2*(1+y)^2*(1+z)^2/(x*y*z) - x*y", 3);
    const auto report = temperedness_check(control);
    CHECK_FALSE(report.passed);
    REQUIRE(report.failures.size() == 1);
    CHECK(report.failures[0].edge.start == ExponentVector{1, 1, -1});
    CHECK(report.failures[0].edge.end == ExponentVector{1, 1, 1});
    CHECK(report.failures[0].polynomial == UPoly{1, 1, 1});
}

}
