#include "lgapery/polytope.hpp"

#include "lgapery/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace lgapery {

namespace {

using Vec3 = std::array<std::int64_t, 3>;

Vec3 sub3(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

std::int64_t dot3(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

bool is_zero3(const Vec3& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

Vec3 primitive3(Vec3 v) {
    const std::int64_t g = std::gcd(std::gcd(v[0], v[1]), v[2]);
    if (g > 1) {
        for (auto& c : v) c /= g;
    }
    return v;
}

Vec3 embed(const ExponentVector& e) {
    Vec3 v{0, 0, 0};
    for (std::size_t i = 0; i < e.dimension(); ++i) v[i] = e[i];
    return v;
}

ExponentVector project(const Vec3& v, std::size_t dimension) {
    ExponentVector e(dimension);
    for (std::size_t i = 0; i < dimension; ++i) e[i] = v[i];
    return e;
}

Vec3 as_vec3(const ExponentVector& e) {
    if (e.dimension() != 3) throw std::invalid_argument("expected a 3-dimensional vector");
    return {e[0], e[1], e[2]};
}

// Extreme points of coplanar points (plane normal n != 0) in cyclic order,
// collinear boundary points excluded.
std::vector<Vec3> planar_hull(std::vector<Vec3> pts, const Vec3& n) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    // Drop the axis where the normal is largest; the projection is injective on the plane.
    std::size_t drop = 0;
    for (std::size_t i = 1; i < 3; ++i)
        if (std::llabs(n[i]) > std::llabs(n[drop])) drop = i;
    const std::size_t a = drop == 0 ? 1 : 0;
    const std::size_t b = drop == 2 ? 1 : 2;
    auto key = [&](const Vec3& p) { return std::pair{p[a], p[b]}; };
    std::sort(pts.begin(), pts.end(), [&](const Vec3& p, const Vec3& q) { return key(p) < key(q); });
    auto turn = [&](const Vec3& o, const Vec3& p, const Vec3& q) {
        return (p[a] - o[a]) * (q[b] - o[b]) - (p[b] - o[b]) * (q[a] - o[a]);
    };
    std::vector<Vec3> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && turn(hull[k - 2], hull[k - 1], p) <= 0) --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && turn(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    // Start the cycle at the lexicographically smallest point for determinism.
    auto first = std::min_element(hull.begin(), hull.end());
    std::rotate(hull.begin(), first, hull.end());
    return hull;
}

struct RawFacet {
    Vec3 normal;
    std::int64_t offset;
};

// Supporting planes through three affinely independent points of a
// full-dimensional set; normals point inwards.
std::vector<RawFacet> supporting_planes(const std::vector<Vec3>& pts) {
    std::set<Vec3> seen;
    std::vector<RawFacet> out;
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vec3 u = sub3(pts[j], pts[i]);
            for (std::size_t k = j + 1; k < n; ++k) {
                Vec3 normal = cross(u, sub3(pts[k], pts[i]));
                if (is_zero3(normal)) continue;
                normal = primitive3(normal);
                const std::int64_t level = dot3(normal, pts[i]);
                bool above = false, below = false;
                for (const auto& p : pts) {
                    const std::int64_t s = dot3(normal, p) - level;
                    above |= s > 0;
                    below |= s < 0;
                    if (above && below) break;
                }
                if (above && below) continue;
                if (below) normal = {-normal[0], -normal[1], -normal[2]};
                if (seen.insert(normal).second) {
                    out.push_back({normal, -dot3(normal, pts[i])});
                }
            }
        }
    }
    return out;
}

int affine_dimension(const std::vector<Vec3>& pts, Vec3* plane_normal) {
    if (pts.empty()) return -1;
    const Vec3& o = pts[0];
    std::size_t i1 = 0;
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (pts[i] != o) {
            i1 = i;
            break;
        }
    if (i1 == 0) return 0;
    const Vec3 u = sub3(pts[i1], o);
    Vec3 n{0, 0, 0};
    for (const auto& p : pts) {
        n = cross(u, sub3(p, o));
        if (!is_zero3(n)) break;
    }
    if (is_zero3(n)) return 1;
    if (plane_normal) *plane_normal = primitive3(n);
    for (const auto& p : pts)
        if (dot3(n, sub3(p, o)) != 0) return 3;
    return 2;
}

std::vector<Vec3> facet_lattice_points(const std::vector<Vec3>& cycle, const Vec3& normal, std::int64_t offset) {
    Vec3 lo = cycle[0], hi = cycle[0];
    for (const auto& v : cycle)
        for (std::size_t i = 0; i < 3; ++i) {
            lo[i] = std::min(lo[i], v[i]);
            hi[i] = std::max(hi[i], v[i]);
        }
    // Orientation of the cycle relative to the normal.
    Vec3 area{0, 0, 0};
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const Vec3 c = cross(cycle[i], cycle[(i + 1) % cycle.size()]);
        for (std::size_t k = 0; k < 3; ++k) area[k] += c[k];
    }
    const std::int64_t orient = dot3(area, normal) > 0 ? 1 : -1;
    std::vector<Vec3> out;
    for (std::int64_t x = lo[0]; x <= hi[0]; ++x)
        for (std::int64_t y = lo[1]; y <= hi[1]; ++y)
            for (std::int64_t z = lo[2]; z <= hi[2]; ++z) {
                const Vec3 p{x, y, z};
                if (dot3(normal, p) != -offset) continue;
                bool inside = true;
                for (std::size_t i = 0; i < cycle.size() && inside; ++i) {
                    const Vec3& a = cycle[i];
                    const Vec3& b = cycle[(i + 1) % cycle.size()];
                    inside = orient * dot3(cross(sub3(b, a), sub3(p, a)), normal) >= 0;
                }
                if (inside) out.push_back(p);
            }
    return out;
}

void require_full_3d(const LatticePolytope& polytope) {
    if (polytope.dimension != 3) throw GeometryError("facet and edge enumeration needs dimension 3");
    if (!polytope.full_dimensional()) {
        throw GeometryError("polytope is not full-dimensional (affine dimension " +
                            std::to_string(polytope.affine_dimension) + ")");
    }
}

std::vector<Vec3> to_vec3s(std::span<const ExponentVector> pts) {
    std::vector<Vec3> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back(embed(p));
    return out;
}

ExponentVector to_exp(const Vec3& v) { return ExponentVector{v[0], v[1], v[2]}; }

// Unimodular U with n·U = (1, 0, 0) for primitive n: returns (m3, b1, b2) with
// <n, m3> = 1 and b1, b2 a basis of the lattice orthogonal to n.
std::array<Vec3, 3> complete_basis(const Vec3& n) {
    // Columns of U, and the running row vector r = n·U.
    std::array<Vec3, 3> cols{Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};
    Vec3 r = n;
    auto col_op = [&](std::size_t dst, std::size_t src, std::int64_t q) {
        // col[dst] -= q * col[src]
        for (std::size_t k = 0; k < 3; ++k) cols[dst][k] -= q * cols[src][k];
        r[dst] -= q * r[src];
    };
    auto reduce_pair = [&](std::size_t i, std::size_t j) {
        // Euclid on r[i], r[j] until r[j] == 0.
        while (r[j] != 0) {
            const std::int64_t q = r[i] / r[j];
            col_op(i, j, q);
            std::swap(cols[i], cols[j]);
            std::swap(r[i], r[j]);
        }
    };
    reduce_pair(0, 1);
    reduce_pair(0, 2);
    if (r[0] < 0) {
        for (auto& c : cols[0]) c = -c;
        r[0] = -r[0];
    }
    if (r[0] != 1) throw std::logic_error("normal vector is not primitive");
    return {cols[0], cols[1], cols[2]};
}

std::int64_t l1(const Vec3& v) { return std::llabs(v[0]) + std::llabs(v[1]) + std::llabs(v[2]); }

// Solves v = a*b1 + c*b2 for integer (a, c); v must lie in the span.
std::pair<std::int64_t, std::int64_t> coordinates_in(const Vec3& v, const Vec3& b1, const Vec3& b2) {
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) {
            const std::int64_t det = b1[i] * b2[j] - b1[j] * b2[i];
            if (det == 0) continue;
            const std::int64_t an = v[i] * b2[j] - v[j] * b2[i];
            const std::int64_t cn = b1[i] * v[j] - b1[j] * v[i];
            if (an % det != 0 || cn % det != 0) throw std::logic_error("vector not in lattice span");
            return {an / det, cn / det};
        }
    throw std::logic_error("degenerate lattice basis");
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::pair<std::int64_t, std::int64_t> ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& g) {
    if (b == 0) {
        g = a;
        return {1, 0};
    }
    auto [x, y] = ext_gcd(b, a % b, g);
    return {y, x - (a / b) * y};
}

}  // namespace

std::int64_t determinant(const ExponentVector& a, const ExponentVector& b, const ExponentVector& c) {
    return dot3(as_vec3(a), cross(as_vec3(b), as_vec3(c)));
}

ExponentVector primitive(const ExponentVector& v) {
    std::int64_t g = 0;
    for (auto c : v.components()) g = std::gcd(g, c);
    if (g <= 1) return v;
    ExponentVector r = v;
    for (std::size_t i = 0; i < r.dimension(); ++i) r[i] /= g;
    return r;
}

LatticePolytope convex_hull(std::span<const ExponentVector> points) {
    if (points.empty()) throw GeometryError("convex hull of an empty point set");
    const std::size_t dimension = points[0].dimension();
    if (dimension > 3) throw GeometryError("convex hulls are implemented for dimension <= 3");
    std::vector<Vec3> pts = to_vec3s(points);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    LatticePolytope out;
    out.dimension = dimension;
    Vec3 plane{0, 0, 0};
    out.affine_dimension = affine_dimension(pts, &plane);
    std::vector<Vec3> verts;
    switch (out.affine_dimension) {
        case 0:
            verts = {pts[0]};
            break;
        case 1: {
            // pts is sorted lexicographically, and lexicographic order is monotone along a line.
            verts = {pts.front(), pts.back()};
            break;
        }
        case 2:
            verts = planar_hull(pts, plane);
            break;
        default: {
            std::set<Vec3> vs;
            for (const auto& f : supporting_planes(pts)) {
                std::vector<Vec3> on;
                for (const auto& p : pts)
                    if (dot3(f.normal, p) == -f.offset) on.push_back(p);
                for (const auto& v : planar_hull(on, f.normal)) vs.insert(v);
            }
            verts.assign(vs.begin(), vs.end());
        }
    }
    std::sort(verts.begin(), verts.end());
    for (const auto& v : verts) out.vertices.push_back(project(v, dimension));
    return out;
}

LatticePolytope newton_polytope(const LaurentPolynomial& p) {
    if (p.is_zero()) throw GeometryError("the zero polynomial has no Newton polytope");
    if (p.dimension() > 3) throw GeometryError("Newton polytopes are implemented for dimension <= 3");
    const auto support = p.support();
    return convex_hull(support);
}

std::vector<Facet> facets(const LatticePolytope& polytope) {
    require_full_3d(polytope);
    const std::vector<Vec3> verts = to_vec3s(polytope.vertices);
    std::vector<Facet> out;
    for (const auto& f : supporting_planes(verts)) {
        std::vector<Vec3> on;
        for (const auto& v : verts)
            if (dot3(f.normal, v) == -f.offset) on.push_back(v);
        const std::vector<Vec3> cycle = planar_hull(on, f.normal);
        Facet facet;
        facet.normal = to_exp(f.normal);
        facet.offset = f.offset;
        for (const auto& v : cycle) facet.vertices.push_back(to_exp(v));
        for (const auto& v : facet_lattice_points(cycle, f.normal, f.offset)) facet.lattice_points.push_back(to_exp(v));
        out.push_back(std::move(facet));
    }
    std::sort(out.begin(), out.end(), [](const Facet& a, const Facet& b) { return a.normal < b.normal; });
    return out;
}

std::vector<Edge> edges(const LatticePolytope& polytope) {
    std::map<std::pair<ExponentVector, ExponentVector>, Edge> found;
    for (const auto& f : facets(polytope)) {
        const std::size_t n = f.vertices.size();
        for (std::size_t i = 0; i < n; ++i) {
            ExponentVector a = f.vertices[i];
            ExponentVector b = f.vertices[(i + 1) % n];
            if (b < a) std::swap(a, b);
            auto key = std::pair{a, b};
            if (found.contains(key)) continue;
            Edge e;
            e.start = a;
            e.end = b;
            e.direction = primitive(b - a);
            const ExponentVector diff = b - a;
            std::int64_t len = 0;
            for (auto c : diff.components()) len = std::gcd(len, c);
            for (std::int64_t k = 0; k <= len; ++k) e.lattice_points.push_back(a + k * e.direction);
            found.emplace(std::move(key), std::move(e));
        }
    }
    std::vector<Edge> out;
    out.reserve(found.size());
    for (auto& [k, e] : found) out.push_back(std::move(e));
    return out;
}

std::vector<ExponentVector> interior_lattice_points(const LatticePolytope& polytope) {
    const auto fs = facets(polytope);
    Vec3 lo = embed(polytope.vertices[0]), hi = lo;
    for (const auto& v : polytope.vertices)
        for (std::size_t i = 0; i < 3; ++i) {
            lo[i] = std::min(lo[i], v[i]);
            hi[i] = std::max(hi[i], v[i]);
        }
    std::vector<ExponentVector> out;
    for (std::int64_t x = lo[0]; x <= hi[0]; ++x)
        for (std::int64_t y = lo[1]; y <= hi[1]; ++y)
            for (std::int64_t z = lo[2]; z <= hi[2]; ++z) {
                const ExponentVector p{x, y, z};
                bool interior = true;
                for (const auto& f : fs) {
                    if (dot(f.normal, p) <= -f.offset) {
                        interior = false;
                        break;
                    }
                }
                if (interior) out.push_back(p);
            }
    return out;
}

bool is_reflexive(const LatticePolytope& polytope) {
    if (polytope.dimension != 3 || !polytope.full_dimensional()) return false;
    for (const auto& f : facets(polytope))
        if (f.offset != 1) return false;
    const auto interior = interior_lattice_points(polytope);
    return interior.size() == 1 && interior[0].is_zero();
}

FacetFrame make_facet_frame(const Facet& facet, ExponentVector origin, ExponentVector m1, ExponentVector m2,
                            ExponentVector m3) {
    if (!std::binary_search(facet.lattice_points.begin(), facet.lattice_points.end(), origin)) {
        throw std::invalid_argument("frame origin " + to_string(origin) + " is not a lattice point of the facet");
    }
    if (dot(facet.normal, m1) != 0 || dot(facet.normal, m2) != 0) {
        throw std::invalid_argument("m1 and m2 must be parallel to the facet");
    }
    if (dot(facet.normal, m3) != 1) throw std::invalid_argument("m3 must have <normal, m3> = 1");
    const std::int64_t det = determinant(m1, m2, m3);
    if (det != 1 && det != -1) throw std::invalid_argument("frame is not unimodular");
    return {std::move(origin), std::move(m1), std::move(m2), std::move(m3)};
}

FacetFrame facet_frame(const LatticePolytope& polytope, const Facet& facet,
                       const std::optional<ExponentVector>& origin_choice) {
    require_full_3d(polytope);
    const Vec3 n = as_vec3(facet.normal);
    const auto [m3_seed, b1, b2] = complete_basis(n);

    // Anchor vertex: the origin itself when it is a vertex, else the smallest vertex.
    const auto& cyc = facet.vertices;
    std::size_t anchor = static_cast<std::size_t>(std::min_element(cyc.begin(), cyc.end()) - cyc.begin());
    if (origin_choice) {
        if (!std::binary_search(facet.lattice_points.begin(), facet.lattice_points.end(), *origin_choice)) {
            throw std::invalid_argument("origin " + to_string(*origin_choice) + " is not a lattice point of the facet");
        }
        auto it = std::find(cyc.begin(), cyc.end(), *origin_choice);
        if (it != cyc.end()) anchor = static_cast<std::size_t>(it - cyc.begin());
    }
    const Vec3 o = as_vec3(cyc[anchor]);
    const Vec3 next = as_vec3(cyc[(anchor + 1) % cyc.size()]);
    const Vec3 prev = as_vec3(cyc[(anchor + cyc.size() - 1) % cyc.size()]);
    Vec3 u = primitive3(sub3(next, o));
    Vec3 w = primitive3(sub3(prev, o));
    if (w < u) std::swap(u, w);

    // Complete u to a basis (u, v) of the facet lattice.
    const auto [alpha, beta] = coordinates_in(u, b1, b2);
    std::int64_t g = 0;
    auto [s, t] = ext_gcd(alpha, beta, g);  // alpha*s + beta*t = g = ±1
    if (g < 0) {
        s = -s;
        t = -t;
    }
    // det [[alpha, beta], [gamma, delta]] = 1 with gamma = -t, delta = s.
    Vec3 v;
    for (std::size_t k = 0; k < 3; ++k) v[k] = -t * b1[k] + s * b2[k];
    // w = a*u + b*v with b > 0 after orienting v, then shear v so that w lies in cone(u, m2).
    auto [a, b] = coordinates_in(w, u, v);
    if (b < 0) {
        for (auto& c : v) c = -c;
        b = -b;
    }
    const std::int64_t k = floor_div(a, b);
    Vec3 m2;
    for (std::size_t i = 0; i < 3; ++i) m2[i] = v[i] + k * u[i];

    // Smallest m3 in the coset m3_seed + span(u, m2).
    Vec3 best = m3_seed;
    {
        // Rough real projection to centre the search window.
        auto proj = [](const Vec3& x, const Vec3& y) {
            const double yy = static_cast<double>(dot3(y, y));
            return yy == 0 ? 0.0 : static_cast<double>(dot3(x, y)) / yy;
        };
        const std::int64_t ci = -static_cast<std::int64_t>(std::llround(proj(m3_seed, u)));
        const std::int64_t cj = -static_cast<std::int64_t>(std::llround(proj(m3_seed, m2)));
        bool have = false;
        for (std::int64_t i = ci - 4; i <= ci + 4; ++i)
            for (std::int64_t j = cj - 4; j <= cj + 4; ++j) {
                Vec3 c;
                for (std::size_t q = 0; q < 3; ++q) c[q] = m3_seed[q] + i * u[q] + j * m2[q];
                if (!have || l1(c) < l1(best) || (l1(c) == l1(best) && c < best)) {
                    best = c;
                    have = true;
                }
            }
    }
    const ExponentVector origin = origin_choice ? *origin_choice : to_exp(o);
    return make_facet_frame(facet, origin, to_exp(u), to_exp(m2), to_exp(best));
}

LaurentPolynomial facet_polynomial(const LaurentPolynomial& p, const Facet& facet, const FacetFrame& frame) {
    if (p.dimension() != 3) throw std::invalid_argument("facet polynomials need a 3-variable polynomial");
    if (dot(facet.normal, frame.origin) != -facet.offset || dot(facet.normal, frame.m1) != 0 ||
        dot(facet.normal, frame.m2) != 0 || dot(facet.normal, frame.m3) != 1) {
        throw std::invalid_argument("frame does not belong to the facet");
    }
    LaurentPolynomial on_facet(3);
    for (const auto& [e, c] : p.terms())
        if (dot(facet.normal, e) == -facet.offset) on_facet.add_term(e, c);
    const std::array<ExponentVector, 3> basis{frame.m1, frame.m2, frame.m3};
    const LaurentPolynomial moved = monomial_substitute(on_facet, basis, frame.origin);
    LaurentPolynomial out(2);
    for (const auto& [e, c] : moved.terms()) {
        if (e[2] != 0) throw std::logic_error("facet term off the facet after substitution");
        out.add_term(ExponentVector{e[0], e[1]}, c);
    }
    return out;
}

UPoly edge_polynomial(const LaurentPolynomial& p, const Edge& edge) {
    std::vector<Rational> coeffs;
    coeffs.reserve(edge.lattice_points.size());
    for (const auto& pt : edge.lattice_points) coeffs.push_back(p.coefficient(pt));
    return UPoly(std::move(coeffs));
}

bool has_only_pm1_roots(const UPoly& q) {
    if (q.is_zero()) throw std::invalid_argument("the zero polynomial has every root");
    std::size_t low = 0;
    while (q[low] == 0) ++low;
    UPoly rest(std::vector<Rational>(q.coefficients().begin() + static_cast<std::ptrdiff_t>(low),
                                     q.coefficients().end()));
    for (const Rational& root : {Rational(1), Rational(-1)}) {
        const UPoly factor = UPoly::linear_root(root);
        for (;;) {
            auto [quot, rem] = divmod(rest, factor);
            if (!rem.is_zero()) break;
            rest = std::move(quot);
        }
    }
    return rest.degree() == 0;
}

TemperednessReport temperedness_check(const LaurentPolynomial& p) {
    const LatticePolytope polytope = newton_polytope(p);
    require_full_3d(polytope);
    if (!is_reflexive(polytope)) throw GeometryError("Newton polytope is not reflexive");
    TemperednessReport report;
    for (const auto& e : edges(polytope)) {
        UPoly q = edge_polynomial(p, e);
        if (!has_only_pm1_roots(q)) report.failures.push_back({e, std::move(q)});
    }
    report.passed = report.failures.empty();
    return report;
}

}  // namespace lgapery
