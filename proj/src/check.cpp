#include "rhombus/check.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <sstream>

#include "rhombus/closed_forms.hpp"
#include "rhombus/paths.hpp"
#include "rhombus/series.hpp"

namespace rhombus {

namespace {

constexpr std::size_t kMaxColumnForSeries = 6;
constexpr std::size_t kMaxColumnForFunctionalEquation = 5;

SuiteResult passed(std::string name, std::string detail) {
    return {std::move(name), SuiteStatus::pass, std::move(detail)};
}

SuiteResult failed(std::string name, std::string detail) {
    return {std::move(name), SuiteStatus::fail, std::move(detail)};
}

std::string at(std::int64_t i, std::int64_t j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// Index of the first coefficient where a and b differ, or nullopt.
std::optional<std::size_t> first_difference(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k] != b[k]) return k;
    }
    if (a.order() != b.order()) return n;
    return std::nullopt;
}

std::string coefficient_mismatch(const TruncatedSeries& a, const TruncatedSeries& b, std::size_t k) {
    std::ostringstream os;
    os << "x^" << k << ": ";
    os << (k < a.order() ? a[k].to_string() : "-") << " vs " << (k < b.order() ? b[k].to_string() : "-");
    return os.str();
}

SuiteResult check_table_structure(const RhombusTable& table, std::int64_t max_i) {
    const std::string name = "rhombus-structure";
    if (table.depth() < max_i) return failed(name, "table depth " + std::to_string(table.depth()) + " < " + std::to_string(max_i));
    if (table.entry(0, 0) != ExactInt(1)) return failed(name, "initial condition at (0,0)");
    if (max_i >= 1) {
        for (std::int64_t j = -1; j <= 1; ++j) {
            if (table.entry(1, j) != ExactInt(1)) return failed(name, "initial condition at " + at(1, j));
        }
    }
    for (std::int64_t i = 0; i <= max_i; ++i) {
        for (std::int64_t j = -i; j <= i; ++j) {
            const auto& v = table.entry(i, j);
            if (v.sign() <= 0) return failed(name, "non-positive entry at " + at(i, j) + " = " + v.to_string());
            if (v != table.entry(i, -j)) {
                return failed(name, "asymmetric at " + at(i, j) + ": " + v.to_string() + " vs " + table.entry(i, -j).to_string());
            }
            if (i >= 2) {
                const ExactInt expected = table.entry(i - 1, j - 1) + table.entry(i - 1, j) + table.entry(i - 1, j + 1) +
                                          table.entry(i - 2, j);
                if (v != expected) {
                    return failed(name, "recurrence broken at " + at(i, j) + ": stored " + v.to_string() + ", recomputed " +
                                            expected.to_string());
                }
            }
        }
    }
    return passed(name, "initial conditions, positivity, symmetry and recurrence for rows 0.." + std::to_string(max_i));
}

SuiteResult check_method_agreement(const RhombusTable& table, std::int64_t max_i) {
    const std::string name = "method-agreement";
    if (table.depth() < max_i) return failed(name, "table depth " + std::to_string(table.depth()) + " < " + std::to_string(max_i));

    const auto order = static_cast<std::size_t>(max_i + 1);
    std::vector<TruncatedSeries> columns;
    for (std::size_t j = 0; j <= std::min<std::size_t>(kMaxColumnForSeries, static_cast<std::size_t>(max_i)); ++j) {
        columns.push_back(column_gf(j, order, ColumnMethod::theorem_formula));
    }

    for (std::int64_t i = 0; i <= max_i; ++i) {
        for (std::int64_t j = -i; j <= i; ++j) {
            const auto& rec = table.entry(i, j);
            const auto tri = entry_triple_sum(i, j);
            const auto conv = entry_convolved(i, j);
            if (rec != tri || rec != conv) {
                return failed(name, "first disagreement at " + at(i, j) + ": recurrence=" + rec.to_string() +
                                        " triple_sum=" + tri.to_string() + " convolved=" + conv.to_string());
            }
            const auto aj = static_cast<std::size_t>(j < 0 ? -j : j);
            if (aj < columns.size()) {
                const auto& ser = columns[aj][static_cast<std::size_t>(i)];
                if (ser != ExactRatio(rec)) {
                    return failed(name, "first disagreement at " + at(i, j) + ": recurrence=" + rec.to_string() +
                                            " series=" + ser.to_string());
                }
            }
        }
    }
    return passed(name, "recurrence = triple_sum = convolved for rows 0.." + std::to_string(max_i) +
                            ", series for |j| <= " + std::to_string(columns.size() - 1));
}

SuiteResult check_path_oracle(const RhombusTable& table, std::int64_t max_n, std::int64_t cap) {
    const std::string name = "path-oracle";
    if (max_n <= 0) return {name, SuiteStatus::skipped, "max_oracle_n = 0"};
    if (max_n > cap) return failed(name, "max_oracle_n " + std::to_string(max_n) + " exceeds oracle cap " + std::to_string(cap));
    if (table.depth() < max_n) return failed(name, "table depth " + std::to_string(table.depth()) + " < " + std::to_string(max_n));

    const auto b = motzkin2_gf(static_cast<std::size_t>(max_n + 1), Motzkin2Method::functional_equation);
    for (std::int64_t n = 0; n <= max_n; ++n) {
        const auto counts = count_by_height(n, cap);
        for (const auto& [j, c] : counts) {
            if (c != table.entry(n, j)) {
                return failed(name, "paths of length " + std::to_string(n) + " ending at height " + std::to_string(j) +
                                        ": enumerated " + c.to_string() + ", table " + at(n, j) + " = " +
                                        table.entry(n, j).to_string());
            }
        }
        const auto m2 = count_motzkin2(n, cap);
        if (ExactRatio(m2) != b[static_cast<std::size_t>(n)]) {
            return failed(name, "2-generalized Motzkin count at n=" + std::to_string(n) + ": enumerated " + m2.to_string() +
                                    ", series " + b[static_cast<std::size_t>(n)].to_string());
        }
    }
    return passed(name, "height counts = table and Motzkin2 counts = B(x) for n <= " + std::to_string(max_n));
}

SuiteResult check_motzkin2_gf(std::size_t order) {
    const std::string name = "motzkin2-gf";
    const auto radical = motzkin2_gf(order, Motzkin2Method::closed_form);
    const auto composed = motzkin2_gf(order, Motzkin2Method::compositional);
    const auto functional = motzkin2_gf(order, Motzkin2Method::functional_equation);
    if (auto k = first_difference(radical, composed)) {
        return failed(name, "radical vs compositional at " + coefficient_mismatch(radical, composed, *k));
    }
    if (auto k = first_difference(radical, functional)) {
        return failed(name, "radical vs functional equation at " + coefficient_mismatch(radical, functional, *k));
    }

    // Catalan GF (built from sqrt) against c_{n+1} = sum c_i c_{n-i}.
    const auto catalan = catalan_gf(order);
    std::vector<ExactInt> c{1};
    for (std::size_t n = 0; c.size() < order; ++n) {
        ExactInt next;
        for (std::size_t i = 0; i <= n; ++i) next += c[i] * c[n - i];
        c.push_back(next);
    }
    for (std::size_t k = 0; k < order; ++k) {
        if (catalan[k] != ExactRatio(c[k])) {
            return failed(name, "Catalan GF vs convolution recurrence at x^" + std::to_string(k));
        }
    }
    return passed(name, "radical = compositional = functional equation, Catalan GF = convolution, order " +
                            std::to_string(order));
}

SuiteResult check_column_gf(std::size_t order) {
    const std::string name = "column-gf";
    const auto b = motzkin2_gf(order, Motzkin2Method::closed_form);
    const auto x_plus_x2 = TruncatedSeries(order, {0, 1, 1});
    const auto two_x2_b = scale(shift_mul(b, 2), 2);
    for (std::size_t j = 0; j <= kMaxColumnForSeries; ++j) {
        const auto theorem = column_gf(j, order, ColumnMethod::theorem_formula);
        const auto functional = column_gf(j, order, ColumnMethod::functional_equation);
        if (auto k = first_difference(theorem, functional)) {
            return failed(name, "L_" + std::to_string(j) + " formula vs functional equation at " +
                                    coefficient_mismatch(theorem, functional, *k));
        }
        if (!theorem.is_integral()) return failed(name, "L_" + std::to_string(j) + " has a non-integer coefficient");
        if (j <= kMaxColumnForFunctionalEquation) {
            const auto rhs = add(add(shift_mul(power(b, j), j), mul(x_plus_x2, theorem)), mul(two_x2_b, theorem));
            if (auto k = first_difference(theorem, rhs)) {
                return failed(name, "M^(" + std::to_string(j) + ") functional equation at " +
                                        coefficient_mismatch(theorem, rhs, *k));
            }
        }
    }
    return passed(name, "L_j formula = functional solution (j <= 6), integral, functional equation holds (j <= 5), order " +
                            std::to_string(order));
}

SuiteResult check_convolved_fibonacci() {
    const std::string name = "convolved-fibonacci";
    for (std::int64_t r = 1; r <= 6; ++r) {
        const auto series = convolved_fib_series(r, 21);
        for (std::int64_t j = 0; j <= 20; ++j) {
            const auto gould = convolved_fib_gould(j, r);
            if (gould != series[static_cast<std::size_t>(j)]) {
                return failed(name, "Gould vs series at j=" + std::to_string(j) + ", r=" + std::to_string(r));
            }
            if (j <= 12 && r <= 4 && gould != convolved_fib_product(j, r)) {
                return failed(name, "Gould vs product at j=" + std::to_string(j) + ", r=" + std::to_string(r));
            }
        }
    }
    return passed(name, "Gould = series (j <= 20, r <= 6), = product (j <= 12, r <= 4)");
}

SuiteResult check_catalan_binomial(std::size_t order) {
    const std::string name = "catalan-binomial";
    const auto c = catalan_gf(order);
    const auto x2 = TruncatedSeries::monomial(order, 2);
    const auto c_x2 = compose(c, x2);
    const auto inv = reciprocal(sub(TruncatedSeries::constant(order, 1), scale(shift_mul(c, 1), 2)));
    const auto inv_x2 = reciprocal(sub(TruncatedSeries::constant(order, 1), scale(shift_mul(c_x2, 2), 2)));
    for (std::size_t j = 0; j <= kMaxColumnForSeries; ++j) {
        std::vector<ExactRatio> expected(order);
        std::vector<ExactRatio> expected_x2(order);
        for (std::size_t m = 0; m < order; ++m) {
            const auto coeff = binomial(static_cast<std::int64_t>(2 * m + j), static_cast<std::int64_t>(m));
            expected[m] = coeff;
            if (2 * m < order) expected_x2[2 * m] = coeff;
        }
        const auto lhs = mul(power(c, j), inv);
        if (auto k = first_difference(lhs, TruncatedSeries(expected))) {
            return failed(name, "C^" + std::to_string(j) + "/(1-2xC) at x^" + std::to_string(*k));
        }
        const auto lhs_x2 = mul(power(c_x2, j), inv_x2);
        if (auto k = first_difference(lhs_x2, TruncatedSeries(expected_x2))) {
            return failed(name, "C(x^2)^" + std::to_string(j) + "/(1-2x^2 C(x^2)) at x^" + std::to_string(*k));
        }
    }
    return passed(name, "C^j/(1-2xC) = sum C(2m+j,m) x^m and its x -> x^2 form, j <= 6, order " + std::to_string(order));
}

CheckReport run_all(const CheckConfig& config, const RhombusTable& table) {
    const std::vector<std::pair<std::string, std::function<SuiteResult()>>> suites{
        {"rhombus-structure", [&] { return check_table_structure(table, config.max_i); }},
        {"method-agreement", [&] { return check_method_agreement(table, config.max_i); }},
        {"path-oracle", [&] { return check_path_oracle(table, config.max_oracle_n, config.oracle_cap); }},
        {"motzkin2-gf", [&] { return check_motzkin2_gf(config.series_order); }},
        {"column-gf", [&] { return check_column_gf(config.series_order); }},
        {"convolved-fibonacci", [] { return check_convolved_fibonacci(); }},
        {"catalan-binomial", [&] { return check_catalan_binomial(config.series_order); }},
    };
    std::vector<std::future<SuiteResult>> pending;
    pending.reserve(suites.size());
    for (const auto& [name, suite] : suites) {
        pending.push_back(std::async(std::launch::async, [&name, &suite] {
            try {
                return suite();
            } catch (const std::exception& e) {
                return failed(name, std::string("error: ") + e.what());
            }
        }));
    }
    CheckReport report;
    for (auto& f : pending) report.suites.push_back(f.get());
    return report;
}

}  // namespace

bool CheckReport::all_passed() const {
    return std::none_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.status == SuiteStatus::fail; });
}

CheckReport run_checks(const CheckConfig& config) {
    const auto depth = std::max<std::int64_t>({config.max_i, config.max_oracle_n, 0});
    return run_checks(config, RhombusTable::build(depth));
}

CheckReport run_checks(const CheckConfig& config, const RhombusTable& table) { return run_all(config, table); }

std::string_view status_label(SuiteStatus s) {
    switch (s) {
        case SuiteStatus::pass: return "PASS";
        case SuiteStatus::fail: return "FAIL";
        case SuiteStatus::skipped: return "SKIPPED";
    }
    return "?";
}

void write_report(std::ostream& os, const CheckReport& report) {
    for (const auto& s : report.suites) {
        os << status_label(s.status) << "  " << s.name << "  " << s.detail << '\n';
    }
}

}  // namespace rhombus
