#pragma once

#include <cstdint>
#include <vector>

#include "rhombus/exact.hpp"

namespace rhombus {

/// Rows 0..depth of the Pascal rhombus. Row i stores r(i, j) for -i <= j <= i;
/// reads outside that triangle yield 0.
class RhombusTable {
public:
    /// Builds the table from r(0,0) = r(1,-1) = r(1,0) = r(1,1) = 1 and, for i >= 2,
    /// r(i,j) = r(i-1,j-1) + r(i-1,j) + r(i-1,j+1) + r(i-2,j).
    /// Both halves of every row are computed independently.
    static RhombusTable build(std::int64_t depth);

    /// Wraps caller-supplied rows (row i must have 2i+1 entries). No recurrence
    /// is enforced, which lets tests feed deliberately corrupted tables to the checker.
    static RhombusTable from_rows(std::vector<std::vector<ExactInt>> rows);

    std::int64_t depth() const { return static_cast<std::int64_t>(rows_.size()) - 1; }

    /// r(i, j); 0 when |j| > i. Throws std::out_of_range unless 0 <= i <= depth().
    const ExactInt& entry(std::int64_t i, std::int64_t j) const;

    /// r(i, -i) .. r(i, i).
    const std::vector<ExactInt>& row(std::int64_t i) const;

    /// r(|j|, j), r(|j|+1, j), .., r(depth, j). Throws std::out_of_range if |j| > depth().
    std::vector<ExactInt> column(std::int64_t j) const;

private:
    explicit RhombusTable(std::vector<std::vector<ExactInt>> rows) : rows_(std::move(rows)) {}
    std::vector<std::vector<ExactInt>> rows_;
};

}  // namespace rhombus
