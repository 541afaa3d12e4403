#include "lgapery/linalg.hpp"

#include <stdexcept>

namespace lgapery {

EchelonForm bareiss_echelon(IntegerMatrix m) {
    EchelonForm out;
    const std::size_t nrows = m.size();
    const std::size_t ncols = nrows ? m[0].size() : 0;
    out.columns = ncols;
    for (const auto& row : m)
        if (row.size() != ncols) throw std::invalid_argument("ragged matrix");

    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t p = r;
        while (p < nrows && m[p][c] == 0) ++p;
        if (p == nrows) continue;
        std::swap(m[p], m[r]);
        const Integer& pivot = m[r][c];
        for (std::size_t i = r + 1; i < nrows; ++i) {
            for (std::size_t j = c + 1; j < ncols; ++j) {
                Integer v = pivot * m[i][j] - m[i][c] * m[r][j];
                if (!mpz_divisible_p(v.get_mpz_t(), prev.get_mpz_t())) {
                    throw std::logic_error("Bareiss step produced an inexact division");
                }
                mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = pivot;
        out.pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    out.rows = std::move(m);
    return out;
}

std::vector<std::vector<Integer>> nullspace(const IntegerMatrix& m) {
    if (m.empty()) return {};
    const EchelonForm ef = bareiss_echelon(m);
    const std::size_t n = ef.columns;
    std::vector<bool> is_pivot(n, false);
    for (auto c : ef.pivots) is_pivot[c] = true;

    std::vector<std::vector<Integer>> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        // Back substitution over the rationals with x_free = 1, other free variables 0.
        std::vector<Rational> x(n, Rational(0));
        x[free] = 1;
        for (std::size_t i = ef.rank(); i-- > 0;) {
            const std::size_t pc = ef.pivots[i];
            Rational s = 0;
            for (std::size_t j = pc + 1; j < n; ++j) {
                if (x[j] != 0 && ef.rows[i][j] != 0) s += Rational(ef.rows[i][j]) * x[j];
            }
            x[pc] = -s / Rational(ef.rows[i][pc]);
        }
        const Integer l = lcm_of_denominators(x);
        std::vector<Integer> v(n);
        Integer g = 0;
        for (std::size_t j = 0; j < n; ++j) {
            v[j] = x[j].get_num() * (l / x[j].get_den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[j].get_mpz_t());
        }
        Integer sign = 1;
        for (std::size_t j = n; j-- > 0;)
            if (v[j] != 0) {
                sign = v[j] < 0 ? -1 : 1;
                break;
            }
        for (auto& e : v) e = e / g * sign;
        basis.push_back(std::move(v));
    }
    return basis;
}

IntegerMatrix clear_denominators(const std::vector<std::vector<Rational>>& m) {
    IntegerMatrix out;
    out.reserve(m.size());
    for (const auto& row : m) {
        const Integer l = lcm_of_denominators(row);
        std::vector<Integer> r;
        r.reserve(row.size());
        for (const auto& q : row) r.push_back(q.get_num() * (l / q.get_den()));
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace lgapery
