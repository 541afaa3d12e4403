#include "lgapery/periods.hpp"

#include "lgapery/errors.hpp"
#include "lgapery/polytope.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace lgapery {

struct PeriodEngine::State {
    struct Term {
        std::int64_t key_delta;
        Integer coeff;
    };
    struct Cell {
        std::int64_t key;
        Integer value;
    };

    std::size_t dim = 0;
    std::size_t horizon = 0;
    std::size_t k = 0;
    std::vector<Term> terms;
    Integer denominator = 1;        // phi = P / denominator with P integral
    Integer denominator_power = 1;  // denominator^k
    std::vector<std::int64_t> base, radix, stride;
    std::int64_t zero_key = 0;
    std::vector<Cell> cells;  // P^k, sorted by key, pruned
    std::vector<Rational> values;

    // Pruning data: facet normals/offsets (inner normal u, <u,x> >= -c on the
    // Newton polytope) or per-coordinate bounds.
    bool facet_mode = false;
    std::vector<ExponentVector> normals;
    std::vector<std::int64_t> offsets;
    std::vector<std::int64_t> lo, hi;

    std::vector<std::int64_t> decode(std::int64_t key) const {
        std::vector<std::int64_t> e(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            e[i] = (key / stride[i]) % radix[i] + base[i];
        }
        return e;
    }

    // Can x^e still reach the origin within `remaining` more factors of phi?
    bool alive(std::int64_t key, std::int64_t remaining) const {
        const auto e = decode(key);
        if (facet_mode) {
            for (std::size_t f = 0; f < normals.size(); ++f) {
                std::int64_t s = 0;
                for (std::size_t i = 0; i < dim; ++i) s += normals[f][i] * e[i];
                if (s > remaining * offsets[f]) return false;
            }
            return true;
        }
        for (std::size_t i = 0; i < dim; ++i) {
            if (e[i] < -remaining * hi[i] || e[i] > -remaining * lo[i]) return false;
        }
        return true;
    }
};

PeriodEngine::PeriodEngine(const LaurentPolynomial& phi, std::size_t horizon) : state_(std::make_unique<State>()) {
    if (phi.is_zero()) throw std::invalid_argument("period sequence of the zero polynomial");
    State& s = *state_;
    s.dim = phi.dimension();
    s.horizon = horizon;

    std::vector<Rational> coeffs;
    for (const auto& [e, c] : phi.terms()) coeffs.push_back(c);
    s.denominator = lcm_of_denominators(coeffs);

    s.lo.assign(s.dim, 0);
    s.hi.assign(s.dim, 0);
    bool first = true;
    for (const auto& [e, c] : phi.terms()) {
        for (std::size_t i = 0; i < s.dim; ++i) {
            s.lo[i] = first ? e[i] : std::min(s.lo[i], e[i]);
            s.hi[i] = first ? e[i] : std::max(s.hi[i], e[i]);
        }
        first = false;
    }
    const auto n = static_cast<std::int64_t>(horizon);
    s.base.resize(s.dim);
    s.radix.resize(s.dim);
    s.stride.resize(s.dim);
    __int128 total = 1;
    for (std::size_t i = 0; i < s.dim; ++i) {
        s.base[i] = std::min<std::int64_t>(0, n * s.lo[i]);
        s.radix[i] = std::max<std::int64_t>(0, n * s.hi[i]) - s.base[i] + 1;
    }
    for (std::size_t i = s.dim; i-- > 0;) {
        s.stride[i] = static_cast<std::int64_t>(total);
        total *= s.radix[i];
        if (total > (static_cast<__int128>(1) << 62)) {
            throw std::length_error("period engine key space overflows 64 bits; lower the horizon");
        }
    }
    for (std::size_t i = 0; i < s.dim; ++i) s.zero_key += -s.base[i] * s.stride[i];

    for (const auto& [e, c] : phi.terms()) {
        std::int64_t delta = 0;
        for (std::size_t i = 0; i < s.dim; ++i) delta += e[i] * s.stride[i];
        Integer scaled = c.get_num() * (s.denominator / c.get_den());
        s.terms.push_back({delta, std::move(scaled)});
    }

    if (s.dim == 3) {
        const LatticePolytope polytope = newton_polytope(phi);
        if (polytope.full_dimensional()) {
            s.facet_mode = true;
            for (const auto& f : facets(polytope)) {
                s.normals.push_back(f.normal);
                s.offsets.push_back(f.offset);
            }
        }
    }

    s.cells.push_back({s.zero_key, Integer(1)});
    s.values.push_back(Rational(1));
}

PeriodEngine::~PeriodEngine() = default;
PeriodEngine::PeriodEngine(PeriodEngine&&) noexcept = default;
PeriodEngine& PeriodEngine::operator=(PeriodEngine&&) noexcept = default;

std::size_t PeriodEngine::computed() const noexcept { return state_->k; }
std::size_t PeriodEngine::horizon() const noexcept { return state_->horizon; }
const std::vector<Rational>& PeriodEngine::values() const noexcept { return state_->values; }
std::size_t PeriodEngine::working_set_size() const noexcept { return state_->cells.size(); }
bool PeriodEngine::uses_facet_pruning() const noexcept { return state_->facet_mode; }

const Rational& PeriodEngine::advance() {
    State& s = *state_;
    if (s.k >= s.horizon) throw std::out_of_range("period engine horizon reached");
    const std::int64_t remaining = static_cast<std::int64_t>(s.horizon - s.k - 1);

    // k-way merge of the shifted copies of the current state, one per term of phi.
    struct Cursor {
        std::int64_t key;
        std::size_t term;
        std::size_t pos;
    };
    auto later = [](const Cursor& a, const Cursor& b) {
        return a.key != b.key ? a.key > b.key : a.term > b.term;
    };
    std::priority_queue<Cursor, std::vector<Cursor>, decltype(later)> heap(later);
    if (!s.cells.empty()) {
        for (std::size_t t = 0; t < s.terms.size(); ++t) heap.push({s.cells[0].key + s.terms[t].key_delta, t, 0});
    }

    std::vector<State::Cell> next;
    next.reserve(s.cells.size() + s.cells.size() / 2);
    auto finalize_last = [&]() {
        if (!next.empty() && (next.back().value == 0 || !s.alive(next.back().key, remaining))) next.pop_back();
    };
    while (!heap.empty()) {
        Cursor c = heap.top();
        heap.pop();
        if (next.empty() || next.back().key != c.key) {
            finalize_last();
            next.push_back({c.key, Integer(0)});
        }
        mpz_addmul(next.back().value.get_mpz_t(), s.cells[c.pos].value.get_mpz_t(),
                   s.terms[c.term].coeff.get_mpz_t());
        if (++c.pos < s.cells.size()) {
            c.key = s.cells[c.pos].key + s.terms[c.term].key_delta;
            heap.push(c);
        }
    }
    finalize_last();
    s.cells = std::move(next);
    ++s.k;
    s.denominator_power *= s.denominator;

    auto it = std::lower_bound(s.cells.begin(), s.cells.end(), s.zero_key,
                               [](const State::Cell& cell, std::int64_t key) { return cell.key < key; });
    Rational a = 0;
    if (it != s.cells.end() && it->key == s.zero_key) {
        a = Rational(it->value, s.denominator_power);
        a.canonicalize();
    }
    s.values.push_back(std::move(a));
    return s.values.back();
}

PeriodSequence period_sequence(const LaurentPolynomial& phi, std::size_t N) {
    PeriodEngine engine(phi, N);
    while (engine.computed() < N) engine.advance();
    return {phi, engine.values()};
}

PeriodSequence period_sequence_naive(const LaurentPolynomial& phi, std::size_t N) {
    if (phi.is_zero()) throw std::invalid_argument("period sequence of the zero polynomial");
    PeriodSequence out{phi, {Rational(1)}};
    LaurentPolynomial power = LaurentPolynomial::constant(phi.dimension(), 1);
    for (std::size_t n = 1; n <= N; ++n) {
        power = mul(power, phi);
        out.values.push_back(power.constant_term());
    }
    return out;
}

bool check_recurrence(const std::vector<Rational>& values, const Recurrence& rec) {
    for (std::size_t n = 1; n < values.size(); ++n) {
        Rational acc = 0;
        const Rational nn = static_cast<long>(n);
        for (std::size_t j = 0; j <= rec.span() && j <= n; ++j) {
            acc += rec.coefficients[j].evaluate(nn) * values[n - j];
        }
        if (acc != 0) return false;
    }
    return true;
}

}  // namespace lgapery
