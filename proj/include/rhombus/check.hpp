#pragma once

// Cross-method verification: every route to the rhombus entries and every
// generating-function identity, run as independent suites.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "rhombus/table.hpp"

namespace rhombus {

struct CheckConfig {
    std::int64_t max_i = 40;          ///< method agreement for rows 0..max_i
    std::int64_t max_oracle_n = 12;   ///< path enumeration for lengths 0..max_oracle_n (0 skips)
    std::size_t series_order = 30;    ///< truncation order for the series identities
    std::int64_t oracle_cap = 12;
};

enum class SuiteStatus { pass, fail, skipped };

struct SuiteResult {
    std::string name;
    SuiteStatus status = SuiteStatus::pass;
    std::string detail;  ///< what was covered, or the first failure
};

struct CheckReport {
    std::vector<SuiteResult> suites;
    bool all_passed() const;  ///< true when no suite failed (skipped suites do not fail)
};

/// Runs every suite against a freshly built table. Suites run concurrently;
/// results come back in a fixed order.
CheckReport run_checks(const CheckConfig& config);

/// Same, but the table-backed suites read `table` instead of building one.
/// Meant for fault injection.
CheckReport run_checks(const CheckConfig& config, const RhombusTable& table);

/// One line per suite: "PASS  name  detail".
void write_report(std::ostream& os, const CheckReport& report);

std::string_view status_label(SuiteStatus s);

}  // namespace rhombus
