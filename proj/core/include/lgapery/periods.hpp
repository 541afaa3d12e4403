#pragma once

#include "lgapery/laurent.hpp"
#include "lgapery/recurrence.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

namespace lgapery {

/// a_n = constant term of phi^n for n = 0..N.
struct PeriodSequence {
    LaurentPolynomial source;
    std::vector<Rational> values;
};

/// Incremental constant-term engine. Holds phi^k with every term removed that
/// cannot return to the origin within the remaining horizon - k
/// multiplications; advance() multiplies once more and reports a_{k+1}.
class PeriodEngine {
public:
    /// horizon is the largest index that will be requested.
    PeriodEngine(const LaurentPolynomial& phi, std::size_t horizon);
    ~PeriodEngine();
    PeriodEngine(PeriodEngine&&) noexcept;
    PeriodEngine& operator=(PeriodEngine&&) noexcept;

    std::size_t computed() const noexcept;  ///< highest index available
    std::size_t horizon() const noexcept;
    /// Computes the next term; throws std::out_of_range past the horizon.
    const Rational& advance();
    const std::vector<Rational>& values() const noexcept;
    /// Terms currently held (after pruning); exposed for benchmarks.
    std::size_t working_set_size() const noexcept;
    /// True when facet inequalities (not only a bounding box) drive pruning.
    bool uses_facet_pruning() const noexcept;

private:
    struct State;
    std::unique_ptr<State> state_;
};

/// Pruned fast path.
PeriodSequence period_sequence(const LaurentPolynomial& phi, std::size_t N);
/// Full expansion of phi^n by repeated multiplication; the test oracle.
PeriodSequence period_sequence_naive(const LaurentPolynomial& phi, std::size_t N);

/// True iff sum_j q_j(n) a_{n-j} = 0 for every 1 <= n < values.size(), terms
/// with negative index read as zero (the power-series convention).
bool check_recurrence(const std::vector<Rational>& values, const Recurrence& rec);
inline bool check_recurrence(const PeriodSequence& seq, const Recurrence& rec) {
    return check_recurrence(seq.values, rec);
}

}  // namespace lgapery
