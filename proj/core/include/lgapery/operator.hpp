#pragma once

#include "lgapery/rational.hpp"
#include "lgapery/recurrence.hpp"
#include "lgapery/upoly.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lgapery {

/// Differential operator sum_{j,k} c[j][k] t^j D^k with D = t d/dt, written in
/// normal order (powers of t to the left). Row j collects the polynomial in D
/// multiplying t^j.
class DifferentialOperator {
public:
    DifferentialOperator() = default;
    /// coeffs[j][k] multiplies t^j D^k; rows may have different lengths.
    explicit DifferentialOperator(std::vector<std::vector<Rational>> coeffs);
    /// rows[j] is the polynomial P_j(D) multiplying t^j.
    static DifferentialOperator from_rows(const std::vector<UPoly>& rows);

    std::size_t order() const noexcept { return order_; }
    std::size_t degree() const noexcept { return degree_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Coefficient of t^j D^k; zero outside the stored box.
    Rational coefficient(std::size_t j, std::size_t k) const;
    /// P_j(D) for row j.
    UPoly row(std::size_t j) const;
    /// F_k(t) = sum_j c[j][k] t^j.
    UPoly column(std::size_t k) const;
    /// The (degree+1) x (order+1) coefficient box.
    const std::vector<std::vector<Rational>>& coefficients() const noexcept { return coeffs_; }

    /// Integer coefficients with content 1 and the lowest nonzero coefficient
    /// of F_order positive.
    DifferentialOperator normalized() const;

    friend bool operator==(const DifferentialOperator&, const DifferentialOperator&) = default;

private:
    std::vector<std::vector<Rational>> coeffs_;
    std::size_t order_ = 0;
    std::size_t degree_ = 0;
};

/// Parses a normal-ordered operator such as
/// "D^3 - t*(1+2*D)*(17*D^2+17*D+5) + t^2*(D+1)^3". Every product must keep
/// t to the left of D; the text is read as a commutative polynomial in (t, D).
DifferentialOperator parse_operator(std::string_view text);

std::string to_string(const DifferentialOperator& op);

/// q_j(n) = sum_k c[j][k] (n - j)^k.
Recurrence to_recurrence(const DifferentialOperator& op);
/// Inverse of to_recurrence: P_j(m) = q_j(m + j).
DifferentialOperator operator_from_recurrence(const Recurrence& rec);

/// Coefficients 0..N of op applied to a truncated power series; throws
/// std::invalid_argument when series has fewer than N+1 terms.
std::vector<Rational> apply(const DifferentialOperator& op, const std::vector<Rational>& series, std::size_t N);

struct DiscoveryOptions {
    std::size_t max_order = 4;
    std::size_t max_degree = 4;
    /// Trailing terms withheld from fitting and used only for verification.
    std::size_t verify_margin = 8;
};

struct DiscoveryResult {
    DifferentialOperator op;  ///< normalized
    std::size_t fitted_terms = 0;    ///< leading terms that built the fitting system
    std::size_t verified_terms = 0;  ///< terms the operator was checked to annihilate (all of them)
};

/// Searches order r = 1..max_order, then degree d = 0..max_degree, for the
/// first box whose fitting system has a one-dimensional nullspace that also
/// annihilates the withheld terms. A box with (r+1)(d+1) unknowns needs at
/// least (r+1)(d+1) + verify_margin terms; reaching a box the series is too
/// short for, finding nothing, or an ambiguous minimal box throws
/// DiscoveryError. Throws std::invalid_argument when the series has no terms
/// beyond the margin.
DiscoveryResult operator_from_series(const std::vector<Rational>& series, const DiscoveryOptions& options = {});

/// Monic symbol in the coordinate of the singular-point lists: the leading
/// coefficient polynomial F_order(t), reversed (lambda^deg F(1/lambda)) and made monic.
UPoly symbol(const DifferentialOperator& op);

/// Exact quadratic surd p + q sqrt(D) with squarefree integer D (D = 1 is
/// never used; rational values have q = 0).
struct Surd {
    Rational p;
    Rational q;
    Integer radicand = 0;

    bool is_rational() const noexcept { return q == 0; }
    friend bool operator==(const Surd&, const Surd&) = default;
};

std::string to_string(const Surd& s);

struct SingularPoint {
    enum class Kind { Rational, Surd, Numeric };
    Kind kind = Kind::Rational;
    Surd exact;                 ///< valid for Rational and Surd
    std::string numeric;        ///< decimal approximation for Numeric (64 digits)
    unsigned multiplicity = 1;
};

struct SingularSet {
    UPoly symbol;
    std::vector<SingularPoint> finite_points;  ///< nonzero roots of the symbol
    bool includes_zero = true;
    bool includes_infinity = true;
    unsigned zero_root_multiplicity = 0;       ///< > 0 flags a root of the symbol at 0
    std::size_t nonreal_roots_omitted = 0;     ///< only for the numeric fallback
};

SingularSet singular_points(const UPoly& monic_symbol);
inline SingularSet singular_points(const DifferentialOperator& op) { return singular_points(symbol(op)); }

struct InvolutionDatum {
    bool exists = false;
    Rational M = 0;
};

/// For a quadratic symbol t^2 - S t + M the involution t -> M/t swaps its
/// roots; the root product is checked exactly.
InvolutionDatum involution(const UPoly& monic_symbol);
inline InvolutionDatum involution(const DifferentialOperator& op) { return involution(symbol(op)); }

}  // namespace lgapery
