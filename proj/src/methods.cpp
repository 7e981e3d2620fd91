#include "rhombus/methods.hpp"

#include "rhombus/closed_forms.hpp"
#include "rhombus/series.hpp"
#include "rhombus/table.hpp"

namespace rhombus {

std::string_view method_name(Method m) {
    switch (m) {
        case Method::recurrence: return "recurrence";
        case Method::triple_sum: return "triple_sum";
        case Method::convolved: return "convolved";
        case Method::series: return "series";
        case Method::oracle: return "oracle";
    }
    return "?";
}

std::optional<Method> parse_method(std::string_view name) {
    for (Method m : kAllMethods) {
        if (method_name(m) == name) return m;
    }
    return std::nullopt;
}

namespace {

void require_series_index(std::int64_t i, const MethodLimits& limits) {
    if (static_cast<std::uint64_t>(i) >= limits.series_order) {
        throw MethodUnavailable("series method: row " + std::to_string(i) + " needs order > " + std::to_string(i) +
                                " (configured order " + std::to_string(limits.series_order) + ")");
    }
}

void require_oracle_index(std::int64_t i, const MethodLimits& limits) {
    if (i > limits.oracle_cap) {
        throw MethodUnavailable("oracle method: row " + std::to_string(i) + " exceeds the enumeration cap " +
                                std::to_string(limits.oracle_cap));
    }
}

}  // namespace

ExactInt entry_by(Method method, std::int64_t i, std::int64_t j, const MethodLimits& limits) {
    if (i < 0) throw std::invalid_argument("row index must be non-negative, got " + std::to_string(i));
    const std::int64_t aj = j < 0 ? -j : j;
    switch (method) {
        case Method::recurrence: return RhombusTable::build(i).entry(i, j);
        case Method::triple_sum: return entry_triple_sum(i, j);
        case Method::convolved: return entry_convolved(i, j);
        case Method::series: {
            if (aj > i) return 0;
            require_series_index(i, limits);
            auto col = column_gf(static_cast<std::size_t>(aj), limits.series_order, ColumnMethod::theorem_formula);
            return col[static_cast<std::size_t>(i)].to_integer();
        }
        case Method::oracle: {
            require_oracle_index(i, limits);
            if (aj > i) return 0;
            return count_by_height(i, limits.oracle_cap).at(j);
        }
    }
    throw std::invalid_argument("unknown method");
}

std::vector<ExactInt> row_by(Method method, std::int64_t i, const MethodLimits& limits) {
    if (i < 0) throw std::invalid_argument("row index must be non-negative, got " + std::to_string(i));
    std::vector<ExactInt> out;
    out.reserve(static_cast<std::size_t>(2 * i + 1));
    switch (method) {
        case Method::recurrence: return RhombusTable::build(i).row(i);
        case Method::series: {
            require_series_index(i, limits);
            std::vector<ExactInt> half;
            for (std::int64_t aj = 0; aj <= i; ++aj) {
                auto col = column_gf(static_cast<std::size_t>(aj), limits.series_order, ColumnMethod::theorem_formula);
                half.push_back(col[static_cast<std::size_t>(i)].to_integer());
            }
            for (std::int64_t j = -i; j <= i; ++j) out.push_back(half[static_cast<std::size_t>(j < 0 ? -j : j)]);
            return out;
        }
        case Method::oracle: {
            require_oracle_index(i, limits);
            for (auto& [h, c] : count_by_height(i, limits.oracle_cap)) out.push_back(c);
            return out;
        }
        default:
            for (std::int64_t j = -i; j <= i; ++j) out.push_back(entry_by(method, i, j, limits));
            return out;
    }
}

std::vector<ExactInt> column_by(Method method, std::int64_t j, std::int64_t terms, const MethodLimits& limits) {
    if (terms < 1) throw std::invalid_argument("terms must be >= 1, got " + std::to_string(terms));
    const std::int64_t aj = j < 0 ? -j : j;
    const std::int64_t last = aj + terms - 1;
    switch (method) {
        case Method::recurrence: return RhombusTable::build(last).column(j);
        case Method::series: {
            require_series_index(last, limits);
            auto gf = column_gf(static_cast<std::size_t>(aj), limits.series_order, ColumnMethod::theorem_formula);
            std::vector<ExactInt> out;
            for (std::int64_t i = aj; i <= last; ++i) out.push_back(gf[static_cast<std::size_t>(i)].to_integer());
            return out;
        }
        case Method::oracle: require_oracle_index(last, limits); [[fallthrough]];
        default: {
            std::vector<ExactInt> out;
            for (std::int64_t i = aj; i <= last; ++i) out.push_back(entry_by(method, i, j, limits));
            return out;
        }
    }
}

}  // namespace rhombus
