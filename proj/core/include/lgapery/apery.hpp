#pragma once

#include "lgapery/hpreal.hpp"
#include "lgapery/operator.hpp"
#include "lgapery/recognize.hpp"
#include "lgapery/recurrence.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace lgapery {

/// Two solutions of a recurrence with a_0 = 1 and b_0 = 0, b_1 = 1. The
/// a-branch obeys the recurrence from n = 1, the b-branch from n = 2.
struct SolutionPair {
    Recurrence recurrence;
    std::vector<Rational> a;
    std::vector<Rational> b;
};

/// Exact forward substitution up to index N. Throws RecurrenceError carrying n
/// when q_0(n) = 0 for some 1 <= n <= N.
SolutionPair solve_pair(const Recurrence& rec, std::size_t N);

struct AperyResult {
    HighPrecisionReal limit;
    std::size_t terms_used = 0;  ///< index N of the last ratio b_N / a_N used
    HighPrecisionReal error_bound;
    HighPrecisionReal convergence_ratio;  ///< |t1| / |t2|
    unsigned digits = 0;
    std::optional<RecognizedConstant> recognized;
};

/// |t1| / |t2| for the two finite singular points of largest modulus. Throws
/// ConvergenceError when there are fewer than two or when |t1| = |t2|.
HighPrecisionReal convergence_ratio(const SingularSet& singular, unsigned digits);

/// b_n / a_n evaluated until both the raw increments and the geometric model
/// C rho^(n+1) / (1 - rho) stay below 10^-(digits+3) for five consecutive n.
/// C is the largest increment / rho^k over the last ten steps. Throws
/// ConvergenceError when max_terms is exhausted or the ratio is 1.
AperyResult apery_limit(const Recurrence& rec, const SingularSet& singular, unsigned digits, std::size_t max_terms);

/// scale * rho^N; with the default scale this is the bare geometric rate.
HighPrecisionReal limit_error_model(const SingularSet& singular, std::size_t N, unsigned digits = 50);
HighPrecisionReal limit_error_model(const SingularSet& singular, std::size_t N, const HighPrecisionReal& scale,
                                    unsigned digits = 50);

}  // namespace lgapery
