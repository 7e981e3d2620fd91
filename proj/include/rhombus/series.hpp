#pragma once

// Truncated formal power series over exact rationals.
//
// A series of order N keeps the coefficients of x^0 .. x^{N-1}. Every binary
// operation requires both operands to carry the same order; mismatches throw
// std::invalid_argument instead of silently truncating. Mathematical
// precondition failures (non-unit reciprocal, bad sqrt constant term, ...)
// throw std::domain_error.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "rhombus/exact.hpp"

namespace rhombus {

class TruncatedSeries {
public:
    /// Zero series. Throws std::invalid_argument when order == 0.
    explicit TruncatedSeries(std::size_t order);
    /// Takes ownership of the coefficients; order is coeffs.size() (must be > 0).
    explicit TruncatedSeries(std::vector<ExactRatio> coeffs);
    /// Coefficients c_0.., padded with zeros up to `order`.
    TruncatedSeries(std::size_t order, std::initializer_list<std::int64_t> coeffs);

    static TruncatedSeries constant(std::size_t order, const ExactRatio& c);
    /// c * x^k (the zero series if k >= order).
    static TruncatedSeries monomial(std::size_t order, std::size_t k, const ExactRatio& c = 1);

    std::size_t order() const { return coeffs_.size(); }
    const ExactRatio& operator[](std::size_t i) const { return coeffs_.at(i); }
    const std::vector<ExactRatio>& coeffs() const { return coeffs_; }

    /// Index of the first nonzero coefficient, or order() if there is none.
    std::size_t valuation() const;

    /// Coefficients as integers; throws std::domain_error if any has denominator != 1.
    std::vector<ExactInt> integer_coeffs() const;
    bool is_integral() const;

    std::string to_string() const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<ExactRatio> coeffs_;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries negate(const TruncatedSeries& a);
TruncatedSeries scale(const TruncatedSeries& a, const ExactRatio& c);

/// Cauchy product truncated to the common order.
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries power(const TruncatedSeries& a, std::size_t k);

/// Multiplicative inverse; requires a nonzero constant term.
TruncatedSeries reciprocal(const TruncatedSeries& a);

/// Square root with constant term +1; requires a's constant term to be exactly 1.
TruncatedSeries sqrt(const TruncatedSeries& a);

/// outer(inner(x)); requires inner to have zero constant term.
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

/// Multiplication by x^k; the top k coefficients fall off the truncation.
TruncatedSeries shift_mul(const TruncatedSeries& a, std::size_t k);

/// Exact division by x^k. The result has order N - k because the top k
/// coefficients of the quotient are not determined by a truncation of a.
/// Requires valuation(a) >= k and k < N.
TruncatedSeries shift_div(const TruncatedSeries& a, std::size_t k);

/// Same series at a lower order.
TruncatedSeries truncate(const TruncatedSeries& a, std::size_t order);

// Named generating functions -------------------------------------------------

/// x / (1 - x - x^2): 0, 1, 1, 2, 3, 5, ...
TruncatedSeries fibonacci_gf(std::size_t order);

/// (1 - sqrt(1 - 4x)) / (2x): 1, 1, 2, 5, 14, ...
TruncatedSeries catalan_gf(std::size_t order);

/// 1 - 2x - 5x^2 + 2x^3 + x^4, the radicand of the 2-generalized Motzkin GF.
TruncatedSeries motzkin2_radicand(std::size_t order);

enum class Motzkin2Method { closed_form, compositional, functional_equation };

/// Generating function B(x) of the 2-generalized Motzkin numbers
/// (steps U, D, H and the long level step H2).
///
/// closed_form:          (1 - x - x^2 - sqrt(radicand)) / (2x^2)
/// compositional:        (F(x)/x) * C(F(x)^2)
/// functional_equation:  coefficients of B = 1 + (x + x^2) B + x^2 B^2
TruncatedSeries motzkin2_gf(std::size_t order, Motzkin2Method method);

enum class ColumnMethod { theorem_formula, functional_equation };

/// Generating function L_j(x) of column j of the Pascal rhombus, which is also
/// the GF M^(j)(x) of 2-generalized grand Motzkin paths ending at height j.
///
/// theorem_formula:      F^{j+1} C(F^2)^j / (x (1 - 2 F^2 C(F^2)))
/// functional_equation:  solves M = x^j B^j + (x + x^2) M + 2 x^2 B M
///                       coefficient by coefficient
TruncatedSeries column_gf(std::size_t j, std::size_t order, ColumnMethod method);

}  // namespace rhombus
