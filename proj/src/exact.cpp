#include "rhombus/exact.hpp"

#include <algorithm>
#include <stdexcept>

namespace rhombus {

ExactInt::ExactInt(std::int64_t v) : value_(static_cast<long>(v)) {}

ExactInt ExactInt::from_string(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
    }
    return ExactInt(mpz_class(std::string(text), 10));
}

std::string ExactInt::to_string() const { return value_.get_str(10); }

bool ExactInt::fits_int64() const { return value_.fits_slong_p(); }

std::int64_t ExactInt::to_int64() const {
    if (!fits_int64()) throw std::overflow_error("integer does not fit in 64 bits: " + to_string());
    return value_.get_si();
}

ExactInt divide_exact(const ExactInt& a, const ExactInt& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    if (!mpz_divisible_p(a.value_.get_mpz_t(), b.value_.get_mpz_t())) {
        throw std::domain_error("inexact division: " + a.to_string() + " / " + b.to_string());
    }
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
    return ExactInt(std::move(q));
}

ExactInt abs(const ExactInt& v) { return ExactInt(mpz_class(::abs(v.raw()))); }

ExactInt gcd(const ExactInt& a, const ExactInt& b) { return ExactInt(mpz_class(::gcd(a.raw(), b.raw()))); }

ExactRatio::ExactRatio(const ExactInt& v) : value_(v.raw()) {}

ExactRatio::ExactRatio(const ExactInt& num, const ExactInt& den) {
    if (den.is_zero()) throw std::domain_error("zero denominator");
    value_ = mpq_class(num.raw(), den.raw());
    value_.canonicalize();
}

ExactInt ExactRatio::numerator() const { return ExactInt(mpz_class(value_.get_num())); }
ExactInt ExactRatio::denominator() const { return ExactInt(mpz_class(value_.get_den())); }

bool ExactRatio::is_integer() const { return value_.get_den() == 1; }

ExactInt ExactRatio::to_integer() const {
    if (!is_integer()) throw std::domain_error("not an integer: " + to_string());
    return numerator();
}

std::string ExactRatio::to_string() const { return value_.get_str(10); }

ExactRatio ExactRatio::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return ExactRatio(mpq_class(1 / value_));
}

ExactRatio& ExactRatio::operator/=(const ExactRatio& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
}

ExactRatio operator-(const ExactRatio& a) { return ExactRatio(mpq_class(-a.value_)); }

ExactInt binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) throw std::domain_error("binomial: negative n = " + std::to_string(n));
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    // Each prefix product C(n-k+t, t) is an integer, so every division is exact.
    ExactInt result = 1;
    for (std::int64_t t = 1; t <= k; ++t) {
        result = divide_exact(result * ExactInt(n - k + t), ExactInt(t));
    }
    return result;
}

}  // namespace rhombus
