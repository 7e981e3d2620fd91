#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rhombus/exact.hpp"
#include "rhombus/paths.hpp"

namespace rhombus {

/// Independent routes to r(i, j).
enum class Method { recurrence, triple_sum, convolved, series, oracle };

inline constexpr std::array<Method, 5> kAllMethods{Method::recurrence, Method::triple_sum, Method::convolved,
                                                   Method::series, Method::oracle};

std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

struct MethodLimits {
    std::size_t series_order = 30;                       ///< series route needs i < series_order
    std::int64_t oracle_cap = kDefaultEnumerationCap;    ///< oracle route needs i <= oracle_cap
};

/// A route cannot serve the requested index (oracle above its cap, series index
/// beyond the truncation order).
class MethodUnavailable : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// r(i, j) by the chosen route. Negative j resolves through |j| for the closed
/// forms and the series; the recurrence and the oracle handle it natively.
ExactInt entry_by(Method method, std::int64_t i, std::int64_t j, const MethodLimits& limits = {});

/// r(i, -i) .. r(i, i) by the chosen route, sharing work across the row.
std::vector<ExactInt> row_by(Method method, std::int64_t i, const MethodLimits& limits = {});

/// r(|j|, j) .. r(|j| + terms - 1, j) by the chosen route.
std::vector<ExactInt> column_by(Method method, std::int64_t j, std::int64_t terms, const MethodLimits& limits = {});

}  // namespace rhombus
