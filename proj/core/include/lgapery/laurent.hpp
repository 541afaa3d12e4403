#pragma once

#include "lgapery/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace lgapery {

/// Integer exponent vector of a Laurent monomial. Ordered lexicographically.
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::size_t dimension) : components_(dimension, 0) {}
    ExponentVector(std::initializer_list<std::int64_t> components) : components_(components) {}
    explicit ExponentVector(std::vector<std::int64_t> components) : components_(std::move(components)) {}

    std::size_t dimension() const noexcept { return components_.size(); }
    std::int64_t operator[](std::size_t i) const { return components_[i]; }
    std::int64_t& operator[](std::size_t i) { return components_[i]; }
    std::span<const std::int64_t> components() const noexcept { return components_; }

    bool is_zero() const noexcept;

    ExponentVector& operator+=(const ExponentVector& other);
    ExponentVector& operator-=(const ExponentVector& other);
    friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
    friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) { return a -= b; }
    ExponentVector operator-() const;
    friend ExponentVector operator*(std::int64_t k, ExponentVector v);

    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
    friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

private:
    std::vector<std::int64_t> components_;
};

std::int64_t dot(const ExponentVector& a, const ExponentVector& b);
std::string to_string(const ExponentVector& e);

/// Multivariate Laurent polynomial with rational coefficients over a fixed
/// number of variables. No stored coefficient is ever zero.
class LaurentPolynomial {
public:
    using TermMap = std::map<ExponentVector, Rational>;

    explicit LaurentPolynomial(std::size_t dimension);
    /// Throws std::invalid_argument when a key has the wrong dimension; zero
    /// coefficients are dropped.
    LaurentPolynomial(std::size_t dimension, TermMap terms);

    static LaurentPolynomial constant(std::size_t dimension, const Rational& c);
    static LaurentPolynomial monomial(const ExponentVector& e, const Rational& c = 1);

    std::size_t dimension() const noexcept { return dimension_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Coefficient at e, zero when absent.
    Rational coefficient(const ExponentVector& e) const;
    Rational constant_term() const;
    std::vector<ExponentVector> support() const;

    /// Adds c·x^e in place, erasing the term if it cancels.
    void add_term(const ExponentVector& e, const Rational& c);

    friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

private:
    std::size_t dimension_;
    TermMap terms_;
};

LaurentPolynomial add(const LaurentPolynomial& p, const LaurentPolynomial& q);
LaurentPolynomial sub(const LaurentPolynomial& p, const LaurentPolynomial& q);
LaurentPolynomial mul(const LaurentPolynomial& p, const LaurentPolynomial& q);
LaurentPolynomial scale(const LaurentPolynomial& p, const Rational& c);
LaurentPolynomial pow(const LaurentPolynomial& p, unsigned n);
Rational constant_term(const LaurentPolynomial& p);

inline LaurentPolynomial operator+(const LaurentPolynomial& p, const LaurentPolynomial& q) { return add(p, q); }
inline LaurentPolynomial operator-(const LaurentPolynomial& p, const LaurentPolynomial& q) { return sub(p, q); }
inline LaurentPolynomial operator*(const LaurentPolynomial& p, const LaurentPolynomial& q) { return mul(p, q); }

/// Rewrites p in the monomial coordinates x'_i = x^{basis_i}, after dividing by
/// x^shift: an exponent e becomes the coefficient vector c with
/// e - shift = sum_i c_i * basis_i. The basis must be unimodular (|det| = 1).
LaurentPolynomial monomial_substitute(const LaurentPolynomial& p,
                                      std::span<const ExponentVector> basis,
                                      const ExponentVector& shift);

/// Variable names used for printing and parsing: x, y, z for dimension <= 3,
/// x1..xd otherwise.
std::vector<std::string> default_variable_names(std::size_t dimension);

/// Canonical text form: terms in lexicographic exponent order, coefficients as
/// p/q, monomials as x^a*y^b. The zero polynomial prints as "0".
std::string to_string(const LaurentPolynomial& p);
std::string to_string(const LaurentPolynomial& p, std::span<const std::string> variable_names);

}  // namespace lgapery
