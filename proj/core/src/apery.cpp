#include "lgapery/apery.hpp"

#include "lgapery/constants.hpp"
#include "lgapery/errors.hpp"

#include <algorithm>
#include <deque>

namespace lgapery {

namespace {

// Forward substitution for one branch, one index at a time.
class BranchSolver {
public:
    explicit BranchSolver(const Recurrence& rec) : rec_(rec) {}

    Rational next(const std::vector<Rational>& values) const {
        const std::size_t n = values.size();
        const Rational nn = static_cast<long>(n);
        const Rational lead = rec_.coefficients[0].evaluate(nn);
        if (lead == 0) {
            throw RecurrenceError("leading recurrence coefficient vanishes at n = " + std::to_string(n),
                                  static_cast<long>(n));
        }
        Rational acc = 0;
        for (std::size_t j = 1; j <= rec_.span() && j <= n; ++j) {
            if (values[n - j] == 0) continue;
            acc += rec_.coefficients[j].evaluate(nn) * values[n - j];
        }
        return -acc / lead;
    }

private:
    const Recurrence& rec_;
};

void check_recurrence_shape(const Recurrence& rec) {
    if (rec.coefficients.empty() || rec.coefficients[0].is_zero()) {
        throw RecurrenceError("recurrence has no leading coefficient", 0);
    }
}

HighPrecisionReal modulus(const SingularPoint& p, long bits, unsigned digits) {
    switch (p.kind) {
        case SingularPoint::Kind::Rational:
            return HighPrecisionReal::from_rational(abs(p.exact.p), bits);
        case SingularPoint::Kind::Surd: {
            const auto P = HighPrecisionReal::from_rational(p.exact.p, bits);
            const auto Q = HighPrecisionReal::from_rational(p.exact.q, bits);
            if (p.exact.radicand > 0) return abs(P + Q * sqrt_int(p.exact.radicand, digits + 10));
            // Complex root: |p + q sqrt(D)|^2 = p^2 - q^2 D.
            return sqrt(P * P - Q * Q * HighPrecisionReal::from_integer(p.exact.radicand, bits));
        }
        case SingularPoint::Kind::Numeric:
            return abs(HighPrecisionReal::from_decimal(p.numeric, bits));
    }
    return {};
}

}  // namespace

SolutionPair solve_pair(const Recurrence& rec, std::size_t N) {
    check_recurrence_shape(rec);
    const BranchSolver solver(rec);
    SolutionPair out{rec, {Rational(1)}, {Rational(0)}};
    if (N >= 1) out.b.emplace_back(1);
    for (std::size_t n = 1; n <= N; ++n) {
        out.a.push_back(solver.next(out.a));
        if (n >= 2) out.b.push_back(solver.next(out.b));
    }
    return out;
}

HighPrecisionReal convergence_ratio(const SingularSet& singular, unsigned digits) {
    const auto& pts = singular.finite_points;
    if (pts.size() == 1 && pts[0].multiplicity >= 2) {
        throw ConvergenceError("double singular point: |t1| = |t2|, no Apery limit");
    }
    if (pts.size() < 2) throw ConvergenceError("need two finite nonzero singular points for an Apery limit");
    if (pts.size() == 2) {
        const Surd& x = pts[0].exact;
        const Surd& y = pts[1].exact;
        bool equal = false;
        if (pts[0].kind == SingularPoint::Kind::Surd) {
            equal = x.radicand < 0 || x.p == 0;  // conjugate pair: equal moduli iff complex or t2 = -t1
        } else if (pts[0].kind == SingularPoint::Kind::Rational) {
            equal = abs(x.p) == abs(y.p);
        }
        if (equal) throw ConvergenceError("|t1| = |t2|: the singular points have equal modulus, no Apery limit");
    }
    const long bits = bits_for_digits(digits + 10);
    std::vector<HighPrecisionReal> moduli;
    for (const auto& p : pts) moduli.push_back(modulus(p, bits, digits));
    std::sort(moduli.begin(), moduli.end(), [](const auto& a, const auto& b) { return a > b; });
    const HighPrecisionReal ratio = moduli[1] / moduli[0];
    if (abs(HighPrecisionReal::from_integer(1, bits) - ratio) < pow10(-static_cast<long>(digits), bits)) {
        throw ConvergenceError("|t1| = |t2|: the singular points have equal modulus, no Apery limit");
    }
    return ratio.with_precision(bits_for_digits(digits));
}

AperyResult apery_limit(const Recurrence& rec, const SingularSet& singular, unsigned digits, std::size_t max_terms) {
    check_recurrence_shape(rec);
    const HighPrecisionReal rho = convergence_ratio(singular, digits);
    const long bits = bits_for_digits(digits + 10);
    const HighPrecisionReal one = HighPrecisionReal::from_integer(1, bits);
    const HighPrecisionReal tolerance = pow10(-static_cast<long>(digits) - 3, bits);
    const HighPrecisionReal rho_w = rho.with_precision(bits);
    const HighPrecisionReal tail = one / (one - rho_w);
    constexpr std::size_t window = 10;
    constexpr int required_streak = 5;

    const BranchSolver solver(rec);
    std::vector<Rational> a{Rational(1)}, b{Rational(0), Rational(1)};
    a.push_back(solver.next(a));

    std::optional<HighPrecisionReal> previous;
    std::deque<HighPrecisionReal> scaled;  // increment_k / rho^k over the window
    HighPrecisionReal rho_pow = rho_w;     // rho^n
    int streak = 0;
    for (std::size_t n = 1; n <= max_terms; ++n) {
        if (n >= 2) {
            a.push_back(solver.next(a));
            b.push_back(solver.next(b));
        }
        if (n > 1) rho_pow *= rho_w;
        if (a[n] == 0) continue;
        const HighPrecisionReal r = HighPrecisionReal::from_rational(b[n] / a[n], bits);
        if (previous) {
            const HighPrecisionReal inc = abs(r - *previous);
            scaled.push_back(inc / rho_pow);
            if (scaled.size() > window) scaled.pop_front();
            const HighPrecisionReal C = *std::max_element(scaled.begin(), scaled.end());
            const HighPrecisionReal model = C * rho_pow * rho_w * tail;
            streak = (inc < tolerance && model < tolerance) ? streak + 1 : 0;
            if (streak >= required_streak) {
                AperyResult out;
                out.limit = r.with_precision(bits_for_digits(digits));
                out.terms_used = n;
                out.error_bound = model;
                out.convergence_ratio = rho;
                out.digits = digits;
                return out;
            }
        }
        previous = r;
    }
    throw ConvergenceError("b_n/a_n did not converge to " + std::to_string(digits) + " digits within " +
                           std::to_string(max_terms) + " terms");
}

HighPrecisionReal limit_error_model(const SingularSet& singular, std::size_t N, unsigned digits) {
    return limit_error_model(singular, N, HighPrecisionReal::from_integer(1, bits_for_digits(digits)), digits);
}

HighPrecisionReal limit_error_model(const SingularSet& singular, std::size_t N, const HighPrecisionReal& scale,
                                    unsigned digits) {
    const HighPrecisionReal rho = convergence_ratio(singular, digits);
    return scale * pow(rho, static_cast<unsigned>(N));
}

}  // namespace lgapery
