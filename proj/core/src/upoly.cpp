#include "lgapery/upoly.hpp"

#include <sstream>
#include <stdexcept>

namespace lgapery {

UPoly::UPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(std::size_t degree, const Rational& c) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return UPoly(std::move(v));
}

UPoly UPoly::linear_root(const Rational& r) { return UPoly{-r, 1}; }

void UPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UPoly::evaluate(const Rational& u) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * u + *it;
    return acc;
}

UPoly UPoly::monic() const {
    if (is_zero()) return {};
    return *this * (1 / leading());
}

UPoly UPoly::reversed() const { return UPoly(std::vector<Rational>(coeffs_.rbegin(), coeffs_.rend())); }

UPoly UPoly::shifted(const Rational& s) const {
    // Horner in polynomial arithmetic: p(u+s) = (...(c_n (u+s) + c_{n-1})(u+s) ...).
    UPoly acc;
    const UPoly x{s, 1};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + UPoly{*it};
    return acc;
}

UPoly UPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<long>(i);
    return UPoly(std::move(v));
}

UPoly& UPoly::operator+=(const UPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const Rational& c) {
    for (auto& v : coeffs_) v *= c;
    trim();
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UPoly(std::move(v));
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem = a.coefficients();
    const int db = b.degree();
    if (a.degree() < db) return {UPoly{}, a};
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
    const Rational lead = b.leading();
    for (int k = a.degree() - db; k >= 0; --k) {
        const Rational q = rem[static_cast<std::size_t>(k + db)] / lead;
        quot[static_cast<std::size_t>(k)] = q;
        if (q == 0) continue;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * b[static_cast<std::size_t>(j)];
    }
    return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::string to_string(const UPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const Rational c = p[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const Rational mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
        if (mono.empty()) out << mag.get_str();
        else if (mag == 1) out << mono;
        else out << mag.get_str() << "*" << mono;
    }
    return out.str();
}

}  // namespace lgapery
