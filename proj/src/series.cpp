#include "rhombus/series.hpp"

#include <sstream>
#include <stdexcept>

namespace rhombus {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b, const char* op) {
    if (a.order() != b.order()) {
        throw std::invalid_argument(std::string(op) + ": order mismatch (" + std::to_string(a.order()) + " vs " +
                                    std::to_string(b.order()) + ")");
    }
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order) {
    if (order == 0) throw std::invalid_argument("series order must be positive");
}

TruncatedSeries::TruncatedSeries(std::vector<ExactRatio> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("series order must be positive");
}

TruncatedSeries::TruncatedSeries(std::size_t order, std::initializer_list<std::int64_t> coeffs)
    : TruncatedSeries(order) {
    std::size_t i = 0;
    for (auto c : coeffs) {
        if (i >= order) break;
        coeffs_[i++] = c;
    }
}

TruncatedSeries TruncatedSeries::constant(std::size_t order, const ExactRatio& c) {
    return monomial(order, 0, c);
}

TruncatedSeries TruncatedSeries::monomial(std::size_t order, std::size_t k, const ExactRatio& c) {
    TruncatedSeries s(order);
    if (k < order) s.coeffs_[k] = c;
    return s;
}

std::size_t TruncatedSeries::valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!coeffs_[i].is_zero()) return i;
    }
    return coeffs_.size();
}

std::vector<ExactInt> TruncatedSeries::integer_coeffs() const {
    std::vector<ExactInt> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.to_integer());
    return out;
}

bool TruncatedSeries::is_integral() const {
    for (const auto& c : coeffs_) {
        if (!c.is_integer()) return false;
    }
    return true;
}

std::string TruncatedSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << coeffs_[i];
        if (i == 1) os << "*x";
        if (i > 1) os << "*x^" << i;
    }
    if (first) os << "0";
    os << " + O(x^" << coeffs_.size() << ")";
    return os.str();
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b, "add");
    std::vector<ExactRatio> c(a.coeffs());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b, "sub");
    std::vector<ExactRatio> c(a.coeffs());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries negate(const TruncatedSeries& a) { return scale(a, -1); }

TruncatedSeries scale(const TruncatedSeries& a, const ExactRatio& k) {
    std::vector<ExactRatio> c(a.coeffs());
    for (auto& v : c) v *= k;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b, "mul");
    const std::size_t n = a.order();
    const std::size_t va = a.valuation();
    const std::size_t vb = b.valuation();
    std::vector<ExactRatio> c(n);
    for (std::size_t i = va; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t k = vb; i + k < n; ++k) c[i + k] += a[i] * b[k];
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries power(const TruncatedSeries& a, std::size_t k) {
    TruncatedSeries result = TruncatedSeries::constant(a.order(), 1);
    TruncatedSeries base = a;
    while (k > 0) {
        if (k & 1U) result = mul(result, base);
        k >>= 1U;
        if (k > 0) base = mul(base, base);
    }
    return result;
}

TruncatedSeries reciprocal(const TruncatedSeries& a) {
    if (a[0].is_zero()) throw std::domain_error("reciprocal: constant term is zero");
    const std::size_t n = a.order();
    const ExactRatio inv0 = a[0].inverse();
    std::vector<ExactRatio> b(n);
    b[0] = inv0;
    for (std::size_t m = 1; m < n; ++m) {
        ExactRatio acc;
        for (std::size_t i = 1; i <= m; ++i) acc += a[i] * b[m - i];
        b[m] = -(acc * inv0);
    }
    return TruncatedSeries(std::move(b));
}

TruncatedSeries sqrt(const TruncatedSeries& a) {
    if (a[0] != ExactRatio(1)) {
        throw std::domain_error("sqrt: constant term must be 1, got " + a[0].to_string());
    }
    // From s^2 = a with s_0 = 1: 2 s_m = a_m - sum_{i=1}^{m-1} s_i s_{m-i}.
    const std::size_t n = a.order();
    const ExactRatio half(1, 2);
    std::vector<ExactRatio> s(n);
    s[0] = 1;
    for (std::size_t m = 1; m < n; ++m) {
        ExactRatio acc = a[m];
        for (std::size_t i = 1; i < m; ++i) acc -= s[i] * s[m - i];
        s[m] = acc * half;
    }
    return TruncatedSeries(std::move(s));
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
    require_same_order(outer, inner, "compose");
    if (!inner[0].is_zero()) throw std::domain_error("compose: inner series has a nonzero constant term");
    const std::size_t n = outer.order();
    // Horner; terms past x^{n-1} of inner^k vanish because valuation(inner) >= 1.
    TruncatedSeries result = TruncatedSeries::constant(n, outer[n - 1]);
    for (std::size_t k = n - 1; k-- > 0;) {
        result = add(mul(result, inner), TruncatedSeries::constant(n, outer[k]));
    }
    return result;
}

TruncatedSeries shift_mul(const TruncatedSeries& a, std::size_t k) {
    std::vector<ExactRatio> c(a.order());
    for (std::size_t i = 0; i + k < c.size(); ++i) c[i + k] = a[i];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries shift_div(const TruncatedSeries& a, std::size_t k) {
    if (k >= a.order()) {
        throw std::domain_error("shift_div: k = " + std::to_string(k) + " leaves no coefficients at order " +
                                std::to_string(a.order()));
    }
    if (a.valuation() < k) {
        throw std::domain_error("shift_div: series is not divisible by x^" + std::to_string(k));
    }
    return TruncatedSeries(std::vector<ExactRatio>(a.coeffs().begin() + static_cast<std::ptrdiff_t>(k), a.coeffs().end()));
}

TruncatedSeries truncate(const TruncatedSeries& a, std::size_t order) {
    if (order == 0 || order > a.order()) {
        throw std::invalid_argument("truncate: cannot go from order " + std::to_string(a.order()) + " to " +
                                    std::to_string(order));
    }
    return TruncatedSeries(std::vector<ExactRatio>(a.coeffs().begin(), a.coeffs().begin() + static_cast<std::ptrdiff_t>(order)));
}

TruncatedSeries fibonacci_gf(std::size_t order) {
    return shift_mul(reciprocal(TruncatedSeries(order, {1, -1, -1})), 1);
}

TruncatedSeries catalan_gf(std::size_t order) {
    // (1 - sqrt(1 - 4x)) / 2 has valuation 1; one extra coefficient survives the division by x.
    const std::size_t n = order + 1;
    auto root = sqrt(TruncatedSeries(n, {1, -4}));
    auto numer = sub(TruncatedSeries::constant(n, 1), root);
    return scale(shift_div(numer, 1), ExactRatio(1, 2));
}

TruncatedSeries motzkin2_radicand(std::size_t order) { return TruncatedSeries(order, {1, -2, -5, 2, 1}); }

namespace {

TruncatedSeries motzkin2_closed_form(std::size_t order) {
    const std::size_t n = order + 2;
    auto numer = sub(TruncatedSeries(n, {1, -1, -1}), sqrt(motzkin2_radicand(n)));
    return scale(shift_div(numer, 2), ExactRatio(1, 2));
}

TruncatedSeries motzkin2_compositional(std::size_t order) {
    auto f_over_x = shift_div(fibonacci_gf(order + 1), 1);
    auto f = fibonacci_gf(order);
    return mul(f_over_x, compose(catalan_gf(order), mul(f, f)));
}

TruncatedSeries motzkin2_functional(std::size_t order) {
    // [x^n] of 1 + (x + x^2) B + x^2 B^2.
    std::vector<ExactRatio> b(order);
    for (std::size_t n = 0; n < order; ++n) {
        ExactRatio v = n == 0 ? ExactRatio(1) : ExactRatio(0);
        if (n >= 1) v += b[n - 1];
        if (n >= 2) {
            v += b[n - 2];
            for (std::size_t i = 0; i <= n - 2; ++i) v += b[i] * b[n - 2 - i];
        }
        b[n] = v;
    }
    return TruncatedSeries(std::move(b));
}

TruncatedSeries column_theorem(std::size_t j, std::size_t order) {
    const std::size_t n = order + 1;
    auto f = fibonacci_gf(n);
    auto f2 = mul(f, f);
    auto g = compose(catalan_gf(n), f2);
    auto numer = mul(power(f, j + 1), power(g, j));
    auto denom = sub(TruncatedSeries::constant(n, 1), scale(mul(f2, g), 2));
    return shift_div(mul(numer, reciprocal(denom)), 1);
}

TruncatedSeries column_functional(std::size_t j, std::size_t order) {
    // m_n = [x^n] x^j B^j + m_{n-1} + m_{n-2} + 2 sum_{i+k=n-2} b_i m_k
    auto b = motzkin2_gf(order, Motzkin2Method::functional_equation);
    auto source = shift_mul(power(b, j), j);
    std::vector<ExactRatio> m(order);
    for (std::size_t n = 0; n < order; ++n) {
        ExactRatio v = source[n];
        if (n >= 1) v += m[n - 1];
        if (n >= 2) {
            v += m[n - 2];
            ExactRatio conv;
            for (std::size_t k = 0; k <= n - 2; ++k) conv += b[n - 2 - k] * m[k];
            v += conv * 2;
        }
        m[n] = v;
    }
    return TruncatedSeries(std::move(m));
}

}  // namespace

TruncatedSeries motzkin2_gf(std::size_t order, Motzkin2Method method) {
    if (order == 0) throw std::invalid_argument("series order must be positive");
    switch (method) {
        case Motzkin2Method::closed_form: return motzkin2_closed_form(order);
        case Motzkin2Method::compositional: return motzkin2_compositional(order);
        case Motzkin2Method::functional_equation: return motzkin2_functional(order);
    }
    throw std::invalid_argument("unknown Motzkin2Method");
}

TruncatedSeries column_gf(std::size_t j, std::size_t order, ColumnMethod method) {
    if (order == 0) throw std::invalid_argument("series order must be positive");
    switch (method) {
        case ColumnMethod::theorem_formula: return column_theorem(j, order);
        case ColumnMethod::functional_equation: return column_functional(j, order);
    }
    throw std::invalid_argument("unknown ColumnMethod");
}

}  // namespace rhombus
