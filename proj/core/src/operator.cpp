#include "lgapery/operator.hpp"

#include "lgapery/errors.hpp"
#include "lgapery/linalg.hpp"
#include "lgapery/parser.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lgapery {

namespace {

Rational power(const Rational& base, std::size_t k) {
    Rational r = 1;
    for (std::size_t i = 0; i < k; ++i) r *= base;
    return r;
}

// Splits |z| = f^2 * s with s squarefree, by trial division. Returns s with
// the sign of z.
Integer squarefree_part(const Integer& z, Integer& square_root_of_square) {
    Integer n = abs(z);
    Integer s = 1, f = 1;
    for (Integer p = 2; p * p <= n; ++p) {
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            n /= p;
            if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
                n /= p;
                f *= p;
            } else {
                s *= p;
            }
        }
    }
    s *= n;
    square_root_of_square = f;
    return z < 0 ? Integer(-s) : s;
}

int sign_at(const UPoly& p, const Rational& x) {
    const Rational v = p.evaluate(x);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

std::vector<UPoly> sturm_sequence(const UPoly& p) {
    std::vector<UPoly> seq{p, p.derivative()};
    while (!seq.back().is_zero()) {
        UPoly r = -divmod(seq[seq.size() - 2], seq.back()).second;
        if (r.is_zero()) break;
        seq.push_back(std::move(r));
    }
    return seq;
}

int sign_changes(const std::vector<UPoly>& seq, const Rational& x) {
    int changes = 0, last = 0;
    for (const auto& q : seq) {
        const int s = sign_at(q, x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

// Real roots of a squarefree polynomial, isolated and bisected to width 2^-bits.
std::vector<Rational> real_roots(const UPoly& p, unsigned bits) {
    const auto seq = sturm_sequence(p);
    Rational bound = 1;
    for (int i = 0; i < p.degree(); ++i) bound = std::max(bound, Rational(1 + abs(p[static_cast<std::size_t>(i)] / p.leading())));
    std::vector<std::pair<Rational, Rational>> work{{-bound, bound}}, isolated;
    while (!work.empty()) {
        auto [a, b] = work.back();
        work.pop_back();
        const int count = sign_changes(seq, a) - sign_changes(seq, b);
        if (count == 0) continue;
        if (count == 1) {
            isolated.emplace_back(a, b);
            continue;
        }
        const Rational mid = (a + b) / 2;
        if (p.evaluate(mid) == 0) {
            isolated.emplace_back(mid, mid);
            // Exclude the exact root from the halves by shrinking them slightly.
            const Rational eps = (b - a) / 1024;
            work.emplace_back(a, mid - eps);
            work.emplace_back(mid + eps, b);
            continue;
        }
        work.emplace_back(a, mid);
        work.emplace_back(mid, b);
    }
    Rational width = 1;
    for (unsigned i = 0; i < bits; ++i) width /= 2;
    std::vector<Rational> roots;
    for (auto [a, b] : isolated) {
        if (a == b) {
            roots.push_back(a);
            continue;
        }
        int sa = sign_at(p, a);
        while (b - a > width) {
            const Rational mid = (a + b) / 2;
            const int sm = sign_at(p, mid);
            if (sm == 0) {
                a = b = mid;
                break;
            }
            if (sm == sa) {
                a = mid;
            } else {
                b = mid;
            }
        }
        roots.push_back((a + b) / 2);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace

DifferentialOperator::DifferentialOperator(std::vector<std::vector<Rational>> coeffs) {
    std::size_t width = 0;
    for (const auto& row : coeffs) width = std::max(width, row.size());
    for (auto& row : coeffs) row.resize(width, Rational(0));
    // Trim zero columns on the right and zero rows at the bottom.
    std::size_t order_plus_one = 0;
    for (const auto& row : coeffs)
        for (std::size_t k = 0; k < width; ++k)
            if (row[k] != 0) order_plus_one = std::max(order_plus_one, k + 1);
    std::size_t degree_plus_one = 0;
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        for (const auto& v : coeffs[j])
            if (v != 0) degree_plus_one = j + 1;
    if (order_plus_one == 0) return;  // zero operator
    coeffs.resize(degree_plus_one);
    for (auto& row : coeffs) row.resize(order_plus_one);
    coeffs_ = std::move(coeffs);
    order_ = order_plus_one - 1;
    degree_ = degree_plus_one - 1;
}

DifferentialOperator DifferentialOperator::from_rows(const std::vector<UPoly>& rows) {
    std::vector<std::vector<Rational>> c;
    for (const auto& r : rows) c.push_back(r.coefficients());
    return DifferentialOperator(std::move(c));
}

Rational DifferentialOperator::coefficient(std::size_t j, std::size_t k) const {
    if (j >= coeffs_.size() || k >= coeffs_[j].size()) return 0;
    return coeffs_[j][k];
}

UPoly DifferentialOperator::row(std::size_t j) const {
    return j < coeffs_.size() ? UPoly(coeffs_[j]) : UPoly();
}

UPoly DifferentialOperator::column(std::size_t k) const {
    std::vector<Rational> v;
    for (const auto& row : coeffs_) v.push_back(k < row.size() ? row[k] : Rational(0));
    return UPoly(std::move(v));
}

DifferentialOperator DifferentialOperator::normalized() const {
    if (is_zero()) return *this;
    std::vector<Rational> flat;
    for (const auto& row : coeffs_) flat.insert(flat.end(), row.begin(), row.end());
    const Integer l = lcm_of_denominators(flat);
    Rational factor = Rational(l);
    Integer g = 0;
    for (const auto& q : flat) {
        Integer v = q.get_num() * (l / q.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    factor /= g;
    const UPoly top = column(order_);
    for (const auto& c : top.coefficients()) {
        if (c != 0) {
            if (c < 0) factor = -factor;
            break;
        }
    }
    auto out = coeffs_;
    for (auto& row : out)
        for (auto& v : row) v *= factor;
    return DifferentialOperator(std::move(out));
}

DifferentialOperator parse_operator(std::string_view text) {
    static const std::vector<std::string> names{"t", "D"};
    const LaurentPolynomial p = parse(text, names);
    std::vector<std::vector<Rational>> c;
    for (const auto& [e, v] : p.terms()) {
        if (e[0] < 0 || e[1] < 0) throw ParseError("operators need nonnegative powers of t and D", 0);
        const auto j = static_cast<std::size_t>(e[0]);
        const auto k = static_cast<std::size_t>(e[1]);
        if (c.size() <= j) c.resize(j + 1);
        if (c[j].size() <= k) c[j].resize(k + 1, Rational(0));
        c[j][k] = v;
    }
    return DifferentialOperator(std::move(c));
}

std::string to_string(const DifferentialOperator& op) {
    if (op.is_zero()) return "0";
    std::string out;
    for (std::size_t j = 0; j <= op.degree(); ++j) {
        const UPoly r = op.row(j);
        if (r.is_zero()) continue;
        if (!out.empty()) out += " + ";
        const std::string body = to_string(r, "D");
        if (j == 0) {
            out += body;
        } else {
            out += (j == 1 ? std::string("t") : "t^" + std::to_string(j)) + "*(" + body + ")";
        }
    }
    return out;
}

std::string to_string(const Recurrence& rec) {
    std::string out;
    for (std::size_t j = 0; j < rec.coefficients.size(); ++j) {
        if (rec.coefficients[j].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + to_string(rec.coefficients[j], "n") + ")*a(n" + (j ? "-" + std::to_string(j) : "") + ")";
    }
    return (out.empty() ? "0" : out) + " = 0";
}

Recurrence to_recurrence(const DifferentialOperator& op) {
    Recurrence rec;
    if (op.is_zero()) {
        rec.coefficients.push_back(UPoly());
        return rec;
    }
    for (std::size_t j = 0; j <= op.degree(); ++j) {
        rec.coefficients.push_back(op.row(j).shifted(-Rational(static_cast<long>(j))));
    }
    return rec;
}

DifferentialOperator operator_from_recurrence(const Recurrence& rec) {
    std::vector<UPoly> rows;
    for (std::size_t j = 0; j < rec.coefficients.size(); ++j) {
        rows.push_back(rec.coefficients[j].shifted(Rational(static_cast<long>(j))));
    }
    return DifferentialOperator::from_rows(rows);
}

std::vector<Rational> apply(const DifferentialOperator& op, const std::vector<Rational>& series, std::size_t N) {
    if (series.size() < N + 1) {
        throw std::invalid_argument("apply needs " + std::to_string(N + 1) + " series terms, got " +
                                    std::to_string(series.size()));
    }
    std::vector<Rational> out(N + 1, Rational(0));
    if (op.is_zero()) return out;
    const Recurrence rec = to_recurrence(op);
    for (std::size_t n = 0; n <= N; ++n) {
        const Rational nn = static_cast<long>(n);
        for (std::size_t j = 0; j <= rec.span() && j <= n; ++j) {
            if (series[n - j] == 0) continue;
            out[n] += rec.coefficients[j].evaluate(nn) * series[n - j];
        }
    }
    return out;
}

DiscoveryResult operator_from_series(const std::vector<Rational>& series, const DiscoveryOptions& options) {
    if (series.size() <= options.verify_margin) {
        throw std::invalid_argument("operator discovery needs more than " + std::to_string(options.verify_margin) +
                                    " terms");
    }
    const std::size_t fit_rows = series.size() - options.verify_margin;
    for (std::size_t r = 1; r <= options.max_order; ++r) {
        for (std::size_t d = 0; d <= options.max_degree; ++d) {
            const std::size_t unknowns = (r + 1) * (d + 1);
            if (fit_rows < unknowns) {
                throw DiscoveryError("no annihilator found before order " + std::to_string(r) + ", degree " +
                                     std::to_string(d) + "; fitting that box needs " +
                                     std::to_string(unknowns + options.verify_margin) + " terms, got " +
                                     std::to_string(series.size()));
            }
            std::vector<std::vector<Rational>> rows;
            rows.reserve(fit_rows);
            for (std::size_t n = 0; n < fit_rows; ++n) {
                std::vector<Rational> row;
                row.reserve((r + 1) * (d + 1));
                for (std::size_t j = 0; j <= d; ++j) {
                    for (std::size_t k = 0; k <= r; ++k) {
                        if (n < j) {
                            row.emplace_back(0);
                        } else {
                            row.push_back(power(Rational(static_cast<long>(n - j)), k) * series[n - j]);
                        }
                    }
                }
                rows.push_back(std::move(row));
            }
            const auto ns = nullspace(clear_denominators(rows));
            if (ns.empty()) continue;
            if (ns.size() > 1) {
                throw DiscoveryError("ambiguous annihilator: nullspace of dimension " + std::to_string(ns.size()) +
                                     " at order " + std::to_string(r) + ", degree " + std::to_string(d));
            }
            std::vector<std::vector<Rational>> c(d + 1, std::vector<Rational>(r + 1));
            for (std::size_t j = 0; j <= d; ++j)
                for (std::size_t k = 0; k <= r; ++k) c[j][k] = Rational(ns[0][j * (r + 1) + k]);
            DifferentialOperator op = DifferentialOperator(std::move(c)).normalized();
            const auto residual = apply(op, series, series.size() - 1);
            const bool annihilates =
                std::all_of(residual.begin(), residual.end(), [](const Rational& v) { return v == 0; });
            if (!annihilates) continue;
            return {std::move(op), fit_rows, series.size()};
        }
    }
    throw DiscoveryError("no annihilating operator with order <= " + std::to_string(options.max_order) +
                         " and degree <= " + std::to_string(options.max_degree));
}

UPoly symbol(const DifferentialOperator& op) {
    if (op.is_zero()) throw std::invalid_argument("the zero operator has no symbol");
    return op.column(op.order()).reversed().monic();
}

std::string to_string(const Surd& s) {
    if (s.is_rational()) return s.p.get_str();
    std::string out;
    if (s.p != 0) out = s.p.get_str() + (s.q < 0 ? " - " : " + ");
    else if (s.q < 0) out = "-";
    const Rational mag = abs(s.q);
    if (mag != 1) out += mag.get_str() + "*";
    return out + "sqrt(" + s.radicand.get_str() + ")";
}

SingularSet singular_points(const UPoly& monic_symbol) {
    SingularSet out;
    out.symbol = monic_symbol;
    if (monic_symbol.is_zero()) throw std::invalid_argument("zero symbol");
    std::size_t low = 0;
    while (monic_symbol[low] == 0) ++low;
    out.zero_root_multiplicity = static_cast<unsigned>(low);
    const UPoly g = UPoly(std::vector<Rational>(monic_symbol.coefficients().begin() + static_cast<std::ptrdiff_t>(low),
                                                monic_symbol.coefficients().end()))
                        .monic();
    auto rational_point = [](const Rational& r, unsigned mult) {
        SingularPoint sp;
        sp.kind = SingularPoint::Kind::Rational;
        sp.exact = Surd{r, 0, 0};
        sp.multiplicity = mult;
        return sp;
    };
    if (g.degree() == 1) {
        out.finite_points.push_back(rational_point(-g[0], 1));
    } else if (g.degree() == 2) {
        const Rational b = g[1], c = g[0];
        const Rational disc = b * b - 4 * c;
        const Rational centre = -b / 2;
        if (disc == 0) {
            out.finite_points.push_back(rational_point(centre, 2));
        } else {
            const Integer num = disc.get_num() * disc.get_den();  // disc = num / den^2
            Integer f;
            const Integer radicand = squarefree_part(num, f);
            Rational half_width(f, 2 * disc.get_den());  // sqrt(disc)/2 = half_width*sqrt(radicand)
            half_width.canonicalize();
            if (radicand == 1) {
                out.finite_points.push_back(rational_point(centre - half_width, 1));
                out.finite_points.push_back(rational_point(centre + half_width, 1));
            } else {
                for (const Rational& q : {Rational(-half_width), half_width}) {
                    SingularPoint sp;
                    sp.kind = SingularPoint::Kind::Surd;
                    sp.exact = Surd{centre, q, radicand};
                    out.finite_points.push_back(sp);
                }
            }
        }
    } else if (g.degree() > 2) {
        const UPoly sqfree = divmod(g, gcd(g, g.derivative())).first.monic();
        for (const auto& root : real_roots(sqfree, 224)) {
            SingularPoint sp;
            sp.kind = SingularPoint::Kind::Numeric;
            sp.numeric = to_decimal(root, 64);
            out.finite_points.push_back(sp);
        }
        out.nonreal_roots_omitted = static_cast<std::size_t>(sqfree.degree()) - out.finite_points.size();
    }
    return out;
}

InvolutionDatum involution(const UPoly& monic_symbol) {
    InvolutionDatum out;
    if (monic_symbol.degree() != 2 || monic_symbol.leading() != 1 || monic_symbol[0] == 0) return out;
    const Rational M = monic_symbol[0];
    const SingularSet s = singular_points(monic_symbol);
    Rational product;
    if (s.finite_points.size() == 1) {
        product = s.finite_points[0].exact.p * s.finite_points[0].exact.p;
    } else if (s.finite_points[0].kind == SingularPoint::Kind::Surd) {
        const Surd& a = s.finite_points[0].exact;
        product = a.p * a.p - a.q * a.q * Rational(a.radicand);
    } else {
        product = s.finite_points[0].exact.p * s.finite_points[1].exact.p;
    }
    if (product != M) throw std::logic_error("root product differs from the symbol's constant term");
    out.exists = true;
    out.M = M;
    return out;
}

}  // namespace lgapery
