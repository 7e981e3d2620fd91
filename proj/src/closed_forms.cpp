#include "rhombus/closed_forms.hpp"

#include <stdexcept>
#include <string>

#include "rhombus/series.hpp"

namespace rhombus {

namespace {

void require_valid_j_r(std::int64_t j, std::int64_t r) {
    if (j < 0) throw std::domain_error("convolved Fibonacci: negative index j = " + std::to_string(j));
    if (r < 1) throw std::domain_error("convolved Fibonacci: r must be >= 1, got " + std::to_string(r));
}

void require_row(std::int64_t i) {
    if (i < 0) throw std::domain_error("row index must be non-negative, got " + std::to_string(i));
}

// Sum over all (j_1..j_parts) >= 0 with total `remaining` of prod fib[j_k + 1].
ExactInt sum_compositions(const std::vector<ExactInt>& fib, std::int64_t remaining, std::int64_t parts) {
    if (parts == 1) return fib[static_cast<std::size_t>(remaining + 1)];
    ExactInt total;
    for (std::int64_t first = 0; first <= remaining; ++first) {
        total += fib[static_cast<std::size_t>(first + 1)] * sum_compositions(fib, remaining - first, parts - 1);
    }
    return total;
}

}  // namespace

ExactInt entry_triple_sum(std::int64_t i, std::int64_t j, TripleSumBound bound) {
    require_row(i);
    if (j < 0) j = -j;
    if (j > i) return 0;
    const std::int64_t m_max = bound == TripleSumBound::tight ? (i - j) / 2 : i;
    ExactInt total;
    for (std::int64_t m = 0; m <= m_max; ++m) {
        const std::int64_t rest = i - j - 2 * m;
        if (rest < 0) continue;  // empty inner range
        const ExactInt outer = binomial(2 * m + j, m);
        for (std::int64_t l = 0; l <= rest; ++l) {
            const ExactInt last = binomial(l, rest - l);
            if (last.is_zero()) continue;
            total += outer * binomial(l + j + 2 * m, l) * last;
        }
    }
    return total;
}

ExactInt entry_convolved(std::int64_t i, std::int64_t j) {
    require_row(i);
    if (j < 0) j = -j;
    if (j > i) return 0;
    ExactInt total;
    for (std::int64_t m = 0; m <= (i - j) / 2; ++m) {
        total += binomial(2 * m + j, m) * convolved_fib_gould(i - j - 2 * m, j + 2 * m + 1);
    }
    return total;
}

std::vector<ExactInt> convolved_fib_series(std::int64_t r, std::int64_t count) {
    require_valid_j_r(0, r);
    if (count < 1) throw std::domain_error("convolved_fib_series: count must be >= 1");
    const auto n = static_cast<std::size_t>(count);
    auto base = reciprocal(TruncatedSeries(n, {1, -1, -1}));
    return power(base, static_cast<std::size_t>(r)).integer_coeffs();
}

ExactInt convolved_fib_gould(std::int64_t j, std::int64_t r) {
    require_valid_j_r(j, r);
    ExactInt total;
    for (std::int64_t l = 0; l <= j / 2; ++l) {
        total += binomial(j + r - l - 1, j - l) * binomial(j - l, l);
    }
    return total;
}

ExactInt convolved_fib_product(std::int64_t j, std::int64_t r) {
    require_valid_j_r(j, r);
    return sum_compositions(fibonacci_numbers(j + 2), j, r);
}

std::vector<ExactInt> fibonacci_numbers(std::int64_t count) {
    std::vector<ExactInt> fib;
    if (count <= 0) return fib;
    fib.reserve(static_cast<std::size_t>(count));
    fib.emplace_back(0);
    if (count > 1) fib.emplace_back(1);
    while (static_cast<std::int64_t>(fib.size()) < count) {
        fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
    }
    return fib;
}

}  // namespace rhombus
