#pragma once

#include "lgapery/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace lgapery {

/// Dense univariate polynomial with rational coefficients, lowest degree
/// first. Trailing zeros are trimmed, so the zero polynomial has no
/// coefficients and degree -1.
class UPoly {
public:
    UPoly() = default;
    UPoly(std::initializer_list<Rational> coeffs);
    explicit UPoly(std::vector<Rational> coeffs);

    static UPoly monomial(std::size_t degree, const Rational& c = 1);
    /// The polynomial u - r.
    static UPoly linear_root(const Rational& r);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    /// Coefficient of u^i, zero beyond the degree.
    Rational operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

    Rational evaluate(const Rational& u) const;
    UPoly monic() const;
    /// u^deg · p(1/u).
    UPoly reversed() const;
    /// p(u + s).
    UPoly shifted(const Rational& s) const;
    UPoly derivative() const;

    UPoly& operator+=(const UPoly& other);
    UPoly& operator-=(const UPoly& other);
    UPoly& operator*=(const Rational& c);
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(UPoly a, const Rational& c) { return a *= c; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a) { return a * Rational(-1); }

    friend bool operator==(const UPoly&, const UPoly&) = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Euclidean division; throws std::domain_error when dividing by zero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly gcd(UPoly a, UPoly b);

/// Text form in the given variable, highest degree first, e.g. "t^2 - 34*t + 1".
std::string to_string(const UPoly& p, const std::string& var = "u");

}  // namespace lgapery
