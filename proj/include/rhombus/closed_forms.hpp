#pragma once

// Direct evaluation of the closed formulas for Pascal rhombus entries and the
// convolved Fibonacci numbers F^(r)_l, the coefficients of (1 - x - x^2)^{-r}.
//
// Indexing follows the usual convention F^(r)_{j+1} = [x^j] (1 - x - x^2)^{-r},
// so the `j` arguments below are series indices (F^(r)_{j+1}).
//
// Three convolved Fibonacci routes are kept side by side on purpose: series
// expansion, the Fibonacci product over weak compositions, and the Gould sum.

#include <cstdint>
#include <vector>

#include "rhombus/exact.hpp"

namespace rhombus {

enum class TripleSumBound {
    tight,  ///< m <= floor((i - |j|) / 2); larger m contribute nothing
    loose,  ///< m <= i, as the formula is usually printed
};

/// sum_m sum_l C(2m+j, m) C(l+j+2m, l) C(l, i-j-2m-l) with j -> |j|.
/// Returns 0 for |j| > i. Throws std::domain_error for i < 0.
ExactInt entry_triple_sum(std::int64_t i, std::int64_t j, TripleSumBound bound = TripleSumBound::tight);

/// sum_{m=0}^{floor((i-|j|)/2)} C(2m+|j|, m) F^(|j|+2m+1)_{i-|j|-2m+1}.
/// Returns 0 for |j| > i. Throws std::domain_error for i < 0.
ExactInt entry_convolved(std::int64_t i, std::int64_t j);

/// F^(r)_1 .. F^(r)_count via exact series reciprocal and power.
/// Throws std::domain_error for r < 1 or count < 1.
std::vector<ExactInt> convolved_fib_series(std::int64_t r, std::int64_t count);

/// F^(r)_{j+1} = sum_{l=0}^{floor(j/2)} C(j+r-l-1, j-l) C(j-l, l).
ExactInt convolved_fib_gould(std::int64_t j, std::int64_t r);

/// F^(r)_{j+1} = sum over j_1 + .. + j_r = j of F_{j_1+1} .. F_{j_r+1}.
/// Exponential in r; intended as an oracle for small arguments.
ExactInt convolved_fib_product(std::int64_t j, std::int64_t r);

/// Classical Fibonacci F_0 .. F_{count-1} (F_0 = 0, F_1 = F_2 = 1).
std::vector<ExactInt> fibonacci_numbers(std::int64_t count);

}  // namespace rhombus
