// Acceptance suite: one line per criterion, exit status 0 only if all pass.
// All comparisons are exact; runtime limits are wall-clock seconds.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "rhombus/closed_forms.hpp"
#include "rhombus/methods.hpp"
#include "rhombus/paths.hpp"
#include "rhombus/series.hpp"
#include "rhombus/table.hpp"

using namespace rhombus;

namespace {

struct Outcome {
    bool ok = true;
    std::string why;

    void fail(std::string reason) {
        if (ok) why = std::move(reason);
        ok = false;
    }
};

struct Criterion {
    int id;
    std::string title;
    double time_limit_s;
    std::function<void(Outcome&)> body;
};

std::string ij(std::int64_t i, std::int64_t j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

const std::vector<std::vector<std::int64_t>> kPublishedRows{
    {1},
    {1, 1, 1},
    {1, 2, 4, 2, 1},
    {1, 3, 8, 9, 8, 3, 1},
    {1, 4, 13, 22, 29, 22, 13, 4, 1},
    {1, 5, 19, 42, 72, 82, 72, 42, 19, 5, 1},
};

void table_reproduction(Outcome& o) {
    const auto t = RhombusTable::build(5);
    const MethodLimits limits{6, 12};  // rows 0..5 need six series terms
    int cells = 0;
    for (std::int64_t i = 0; i <= 5; ++i) {
        const auto& expected = kPublishedRows[static_cast<std::size_t>(i)];
        for (std::int64_t j = -i; j <= i; ++j) {
            const ExactInt want(expected[static_cast<std::size_t>(j + i)]);
            ++cells;
            if (t.entry(i, j) != want) o.fail("recurrence " + ij(i, j));
            for (Method m : {Method::triple_sum, Method::convolved, Method::series}) {
                if (entry_by(m, i, j, limits) != want) o.fail(std::string(method_name(m)) + " " + ij(i, j));
            }
        }
    }
    if (cells != 36) o.fail("expected 36 cells, saw " + std::to_string(cells));
}

void example_series(Outcome& o) {
    const std::vector<std::pair<std::size_t, std::vector<std::int64_t>>> published{
        {0, {1, 1, 4, 9, 29, 82, 255}},
        {1, {1, 2, 8, 22, 72, 218, 691, 2158}},
        {2, {1, 3, 13, 42, 146, 476, 1574}},
        {3, {1, 4, 19, 70, 261, 914, 3177}},
    };
    for (const auto& [j, coeffs] : published) {
        for (auto method : {ColumnMethod::theorem_formula, ColumnMethod::functional_equation}) {
            const auto l = column_gf(j, j + coeffs.size(), method);
            for (std::size_t k = 0; k < j; ++k) {
                if (!l[k].is_zero()) o.fail("L_" + std::to_string(j) + " nonzero below x^j");
            }
            for (std::size_t k = 0; k < coeffs.size(); ++k) {
                if (l[j + k] != ExactRatio(coeffs[k])) o.fail("L_" + std::to_string(j) + " at x^" + std::to_string(j + k));
            }
        }
    }
}

void paths_equal_entries(Outcome& o) {
    const auto t = RhombusTable::build(12);
    for (std::int64_t n = 0; n <= 12; ++n) {
        const auto counts = count_by_height(n, 12);
        for (std::int64_t j = -n; j <= n; ++j) {
            if (counts.at(j) != t.entry(n, j)) o.fail("n=" + std::to_string(n) + " j=" + std::to_string(j));
        }
    }
}

void motzkin2_forms(Outcome& o) {
    const auto radical = motzkin2_gf(30, Motzkin2Method::closed_form);
    const auto composed = motzkin2_gf(30, Motzkin2Method::compositional);
    if (radical.order() != 30 || composed.order() != 30) o.fail("order");
    for (std::size_t k = 0; k < 30; ++k) {
        if (radical[k] != composed[k]) o.fail("radical vs compositional at x^" + std::to_string(k));
    }
    for (std::int64_t n = 0; n <= 12; ++n) {
        const ExactRatio count(count_motzkin2(n, 12));
        if (radical[static_cast<std::size_t>(n)] != count) o.fail("radical vs paths at n=" + std::to_string(n));
        if (composed[static_cast<std::size_t>(n)] != count) o.fail("compositional vs paths at n=" + std::to_string(n));
    }
}

void functional_equation(Outcome& o) {
    constexpr std::size_t order = 30;
    const auto b = motzkin2_gf(order, Motzkin2Method::closed_form);
    const TruncatedSeries x_plus_x2(order, {0, 1, 1});
    const auto two_x2_b = scale(shift_mul(b, 2), 2);
    for (std::size_t j = 0; j <= 5; ++j) {
        const auto m = column_gf(j, order, ColumnMethod::theorem_formula);
        const auto rhs = add(add(shift_mul(power(b, j), j), mul(x_plus_x2, m)), mul(two_x2_b, m));
        if (m != rhs) o.fail("j=" + std::to_string(j));
    }
}

void convolved_fibonacci(Outcome& o) {
    for (std::int64_t r = 1; r <= 6; ++r) {
        const auto series = convolved_fib_series(r, 21);
        for (std::int64_t j = 0; j <= 20; ++j) {
            const auto gould = convolved_fib_gould(j, r);
            if (gould != series[static_cast<std::size_t>(j)]) o.fail("gould vs series j=" + std::to_string(j) + " r=" + std::to_string(r));
            if (j <= 12 && r <= 4 && gould != convolved_fib_product(j, r)) {
                o.fail("gould vs product j=" + std::to_string(j) + " r=" + std::to_string(r));
            }
        }
    }
}

void catalan_binomial(Outcome& o) {
    constexpr std::size_t order = 30;
    const auto c = catalan_gf(order);
    const auto inv = reciprocal(sub(TruncatedSeries::constant(order, 1), scale(shift_mul(c, 1), 2)));
    for (std::size_t j = 0; j <= 6; ++j) {
        const auto lhs = mul(power(c, j), inv);
        for (std::size_t m = 0; m < order; ++m) {
            if (lhs[m] != ExactRatio(binomial(static_cast<std::int64_t>(2 * m + j), static_cast<std::int64_t>(m)))) {
                o.fail("j=" + std::to_string(j) + " x^" + std::to_string(m));
            }
        }
    }
}

void agreement_sweep(Outcome& o) {
    constexpr std::int64_t max_i = 40;
    const auto t = RhombusTable::build(max_i);
    std::vector<TruncatedSeries> columns;
    for (std::size_t j = 0; j <= 6; ++j) columns.push_back(column_gf(j, max_i + 1, ColumnMethod::theorem_formula));
    for (std::int64_t i = 0; i <= max_i; ++i) {
        for (std::int64_t j = -i; j <= i; ++j) {
            const auto& r = t.entry(i, j);
            if (entry_triple_sum(i, j) != r) o.fail("triple_sum " + ij(i, j));
            if (entry_convolved(i, j) != r) o.fail("convolved " + ij(i, j));
            const auto aj = static_cast<std::size_t>(j < 0 ? -j : j);
            if (aj <= 6 && columns[aj][static_cast<std::size_t>(i)] != ExactRatio(r)) o.fail("series " + ij(i, j));
        }
    }
}

void scale_sanity(Outcome& o) {
    const auto t = RhombusTable::build(500);
    const auto& mid = t.entry(500, 0);
    if (mid.fits_int64()) o.fail("central entry of row 500 unexpectedly fits in 64 bits");
    if (ExactInt::from_string(mid.to_string()) != mid) o.fail("decimal round trip");
}

void integrality(Outcome& o) {
    for (std::size_t j = 0; j <= 6; ++j) {
        for (auto method : {ColumnMethod::theorem_formula, ColumnMethod::functional_equation}) {
            const auto l = column_gf(j, 30, method);
            for (std::size_t k = 0; k < l.order(); ++k) {
                if (l[k].denominator() != ExactInt(1)) o.fail("L_" + std::to_string(j) + " at x^" + std::to_string(k));
            }
        }
    }
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "rhombus rows 0-5 by recurrence, triple_sum, convolved, series", 1.0, table_reproduction},
        {2, "column series L_0..L_3 match published coefficients", 1.0, example_series},
        {3, "path counts by height equal entries, n <= 12", 60.0, paths_equal_entries},
        {4, "B(x) radical = compositional (30 terms) = Motzkin2 counts (n <= 12)", 0.0, motzkin2_forms},
        {5, "M^(j) functional equation, j <= 5, order 30", 0.0, functional_equation},
        {6, "convolved Fibonacci gould = series = product", 0.0, convolved_fibonacci},
        {7, "C^j/(1-2xC) = sum C(2m+j,m) x^m, j <= 6, order 30", 0.0, catalan_binomial},
        {8, "method agreement sweep, i <= 40", 10.0, agreement_sweep},
        {9, "row 500 build time and decimal round trip", 5.0, scale_sanity},
        {10, "L_j coefficients are integers, j <= 6, order 30", 0.0, integrality},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(o);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit_s > 0 && elapsed >= c.time_limit_s) {
            o.fail("took " + std::to_string(elapsed) + " s, limit " + std::to_string(c.time_limit_s) + " s");
        }
        std::printf("[%s] AC%-2d %-70s %8.3f s%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.title.c_str(), elapsed,
                    o.ok ? "" : "  first failure: ", o.why.c_str());
        if (!o.ok) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
