#include "lgapery/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace lgapery {

namespace {

void require_same_dimension(const LaurentPolynomial& p, const LaurentPolynomial& q) {
    if (p.dimension() != q.dimension()) {
        throw std::invalid_argument("dimension mismatch: " + std::to_string(p.dimension()) + " vs " +
                                    std::to_string(q.dimension()));
    }
}

// Rational inverse of a square integer matrix given by rows; throws if singular.
std::vector<std::vector<Rational>> inverse(std::span<const ExponentVector> rows, Rational& det_out) {
    const std::size_t n = rows.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].dimension() != n) {
            throw std::invalid_argument("basis vectors must have the ambient dimension");
        }
        for (std::size_t j = 0; j < n; ++j) a[i][j] = rows[i][j];
        a[i][n + i] = 1;
    }
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) {
            det_out = 0;
            return {};
        }
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        const Rational inv = 1 / a[col][col];
        for (auto& v : a[col]) v *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Rational f = a[r][col];
            for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
        }
    }
    det_out = det;
    std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
    return out;
}

}  // namespace

bool ExponentVector::is_zero() const noexcept {
    for (auto c : components_)
        if (c != 0) return false;
    return true;
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& other) {
    if (other.dimension() != dimension()) throw std::invalid_argument("exponent dimension mismatch");
    for (std::size_t i = 0; i < components_.size(); ++i) components_[i] += other.components_[i];
    return *this;
}

ExponentVector& ExponentVector::operator-=(const ExponentVector& other) {
    if (other.dimension() != dimension()) throw std::invalid_argument("exponent dimension mismatch");
    for (std::size_t i = 0; i < components_.size(); ++i) components_[i] -= other.components_[i];
    return *this;
}

ExponentVector ExponentVector::operator-() const {
    ExponentVector r = *this;
    for (auto& c : r.components_) c = -c;
    return r;
}

ExponentVector operator*(std::int64_t k, ExponentVector v) {
    for (auto& c : v.components_) c *= k;
    return v;
}

std::int64_t dot(const ExponentVector& a, const ExponentVector& b) {
    if (a.dimension() != b.dimension()) throw std::invalid_argument("exponent dimension mismatch");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.dimension(); ++i) s += a[i] * b[i];
    return s;
}

std::string to_string(const ExponentVector& e) {
    std::string s = "(";
    for (std::size_t i = 0; i < e.dimension(); ++i) {
        if (i) s += ",";
        s += std::to_string(e[i]);
    }
    return s + ")";
}

LaurentPolynomial::LaurentPolynomial(std::size_t dimension) : dimension_(dimension) {
    if (dimension == 0) throw std::invalid_argument("dimension must be positive");
}

LaurentPolynomial::LaurentPolynomial(std::size_t dimension, TermMap terms) : LaurentPolynomial(dimension) {
    for (auto& [e, c] : terms) {
        if (e.dimension() != dimension) throw std::invalid_argument("exponent has wrong dimension");
        if (c != 0) terms_.emplace(e, c);
    }
}

LaurentPolynomial LaurentPolynomial::constant(std::size_t dimension, const Rational& c) {
    LaurentPolynomial p(dimension);
    p.add_term(ExponentVector(dimension), c);
    return p;
}

LaurentPolynomial LaurentPolynomial::monomial(const ExponentVector& e, const Rational& c) {
    LaurentPolynomial p(e.dimension());
    p.add_term(e, c);
    return p;
}

Rational LaurentPolynomial::coefficient(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPolynomial::constant_term() const { return coefficient(ExponentVector(dimension_)); }

std::vector<ExponentVector> LaurentPolynomial::support() const {
    std::vector<ExponentVector> s;
    s.reserve(terms_.size());
    for (const auto& [e, c] : terms_) s.push_back(e);
    return s;
}

void LaurentPolynomial::add_term(const ExponentVector& e, const Rational& c) {
    if (e.dimension() != dimension_) throw std::invalid_argument("exponent has wrong dimension");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPolynomial add(const LaurentPolynomial& p, const LaurentPolynomial& q) {
    require_same_dimension(p, q);
    LaurentPolynomial r = p;
    for (const auto& [e, c] : q.terms()) r.add_term(e, c);
    return r;
}

LaurentPolynomial sub(const LaurentPolynomial& p, const LaurentPolynomial& q) {
    require_same_dimension(p, q);
    LaurentPolynomial r = p;
    for (const auto& [e, c] : q.terms()) r.add_term(e, -c);
    return r;
}

LaurentPolynomial scale(const LaurentPolynomial& p, const Rational& c) {
    LaurentPolynomial r(p.dimension());
    if (c == 0) return r;
    for (const auto& [e, a] : p.terms()) r.add_term(e, a * c);
    return r;
}

LaurentPolynomial mul(const LaurentPolynomial& p, const LaurentPolynomial& q) {
    require_same_dimension(p, q);
    LaurentPolynomial r(p.dimension());
    for (const auto& [e, a] : p.terms())
        for (const auto& [f, b] : q.terms()) r.add_term(e + f, a * b);
    return r;
}

LaurentPolynomial pow(const LaurentPolynomial& p, unsigned n) {
    LaurentPolynomial result = LaurentPolynomial::constant(p.dimension(), 1);
    LaurentPolynomial base = p;
    while (n > 0) {
        if (n & 1u) result = mul(result, base);
        n >>= 1;
        if (n > 0) base = mul(base, base);
    }
    return result;
}

Rational constant_term(const LaurentPolynomial& p) { return p.constant_term(); }

LaurentPolynomial monomial_substitute(const LaurentPolynomial& p,
                                      std::span<const ExponentVector> basis,
                                      const ExponentVector& shift) {
    const std::size_t d = p.dimension();
    if (basis.size() != d || shift.dimension() != d) {
        throw std::invalid_argument("substitution basis must have d vectors of dimension d");
    }
    Rational det;
    auto inv = inverse(basis, det);
    if (det != 1 && det != -1) {
        throw std::invalid_argument("substitution basis is not unimodular (det = " + det.get_str() + ")");
    }
    // e - shift = B^T c with B the matrix of basis rows, so c = (B^T)^{-1} (e - shift)
    // and (B^T)^{-1} = (B^{-1})^T.
    LaurentPolynomial r(d);
    for (const auto& [e, coeff] : p.terms()) {
        ExponentVector v = e - shift;
        ExponentVector c(d);
        for (std::size_t i = 0; i < d; ++i) {
            Rational s = 0;
            for (std::size_t j = 0; j < d; ++j) s += inv[j][i] * v[j];
            if (s.get_den() != 1) throw std::logic_error("unimodular substitution produced a fractional exponent");
            c[i] = to_int64(s.get_num());
        }
        r.add_term(c, coeff);
    }
    return r;
}

std::vector<std::string> default_variable_names(std::size_t dimension) {
    if (dimension <= 3) {
        static const char* names[] = {"x", "y", "z"};
        return {names, names + dimension};
    }
    std::vector<std::string> v;
    for (std::size_t i = 1; i <= dimension; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

std::string to_string(const LaurentPolynomial& p) {
    auto names = default_variable_names(p.dimension());
    return to_string(p, names);
}

std::string to_string(const LaurentPolynomial& p, std::span<const std::string> names) {
    if (names.size() != p.dimension()) throw std::invalid_argument("wrong number of variable names");
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < e.dimension(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out << mag.get_str();
        } else if (mag == 1) {
            out << mono;
        } else {
            out << mag.get_str() << "*" << mono;
        }
    }
    return out.str();
}

}  // namespace lgapery
