#pragma once

// Exact integer and rational arithmetic, plus binomial coefficients.

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rhombus {

/// Arbitrary-precision signed integer.
class ExactInt {
public:
    ExactInt() = default;
    ExactInt(std::int64_t v);  // NOLINT(google-explicit-constructor): integer literals should just work
    explicit ExactInt(mpz_class v) : value_(std::move(v)) {}

    /// Parses an optional '-' followed by decimal digits. Throws std::invalid_argument otherwise.
    static ExactInt from_string(std::string_view text);
    std::string to_string() const;

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool fits_int64() const;
    std::int64_t to_int64() const;  // throws std::overflow_error when it does not fit

    const mpz_class& raw() const { return value_; }

    ExactInt& operator+=(const ExactInt& o) { value_ += o.value_; return *this; }
    ExactInt& operator-=(const ExactInt& o) { value_ -= o.value_; return *this; }
    ExactInt& operator*=(const ExactInt& o) { value_ *= o.value_; return *this; }

    friend ExactInt operator+(ExactInt a, const ExactInt& b) { return a += b; }
    friend ExactInt operator-(ExactInt a, const ExactInt& b) { return a -= b; }
    friend ExactInt operator*(ExactInt a, const ExactInt& b) { return a *= b; }
    friend ExactInt operator-(const ExactInt& a) { return ExactInt(mpz_class(-a.value_)); }

    /// Division that must leave no remainder; throws std::domain_error otherwise
    /// (and on division by zero).
    friend ExactInt divide_exact(const ExactInt& a, const ExactInt& b);

    friend bool operator==(const ExactInt& a, const ExactInt& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const ExactInt& a, const ExactInt& b) {
        return cmp(a.value_, b.value_) <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const ExactInt& v) { return os << v.to_string(); }

private:
    mpz_class value_;
};

ExactInt abs(const ExactInt& v);
ExactInt gcd(const ExactInt& a, const ExactInt& b);

/// Rational number kept in canonical form: denominator > 0, gcd(|num|, den) = 1.
class ExactRatio {
public:
    ExactRatio() = default;
    ExactRatio(std::int64_t v) : ExactRatio(ExactInt(v)) {}  // NOLINT(google-explicit-constructor)
    ExactRatio(const ExactInt& v);                           // NOLINT(google-explicit-constructor)
    /// Throws std::domain_error when den is zero.
    ExactRatio(const ExactInt& num, const ExactInt& den);

    ExactInt numerator() const;
    ExactInt denominator() const;
    bool is_integer() const;
    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }

    /// Throws std::domain_error unless the denominator is 1.
    ExactInt to_integer() const;

    /// "n" for integers, "n/d" otherwise.
    std::string to_string() const;

    ExactRatio inverse() const;

    ExactRatio& operator+=(const ExactRatio& o) { value_ += o.value_; return *this; }
    ExactRatio& operator-=(const ExactRatio& o) { value_ -= o.value_; return *this; }
    ExactRatio& operator*=(const ExactRatio& o) { value_ *= o.value_; return *this; }
    ExactRatio& operator/=(const ExactRatio& o);

    friend ExactRatio operator+(ExactRatio a, const ExactRatio& b) { return a += b; }
    friend ExactRatio operator-(ExactRatio a, const ExactRatio& b) { return a -= b; }
    friend ExactRatio operator*(ExactRatio a, const ExactRatio& b) { return a *= b; }
    friend ExactRatio operator/(ExactRatio a, const ExactRatio& b) { return a /= b; }
    friend ExactRatio operator-(const ExactRatio& a);

    friend bool operator==(const ExactRatio& a, const ExactRatio& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const ExactRatio& a, const ExactRatio& b) {
        return cmp(a.value_, b.value_) <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const ExactRatio& v) { return os << v.to_string(); }

private:
    explicit ExactRatio(mpq_class v) : value_(std::move(v)) {}
    mpq_class value_;
};

/// C(n, k), zero when k lies outside [0, n]. Throws std::domain_error for n < 0.
ExactInt binomial(std::int64_t n, std::int64_t k);

}  // namespace rhombus
