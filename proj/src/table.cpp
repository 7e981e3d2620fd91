#include "rhombus/table.hpp"

#include <stdexcept>
#include <string>

namespace rhombus {

namespace {

const ExactInt kZero{};

}  // namespace

RhombusTable RhombusTable::build(std::int64_t depth) {
    if (depth < 0) throw std::invalid_argument("depth must be non-negative");
    std::vector<std::vector<ExactInt>> rows;
    rows.reserve(static_cast<std::size_t>(depth) + 1);
    rows.push_back({1});
    if (depth >= 1) rows.push_back({1, 1, 1});

    // Reads with zero padding outside the triangle.
    auto at = [&rows](std::int64_t i, std::int64_t j) -> const ExactInt& {
        if (j < -i || j > i) return kZero;
        return rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j + i)];
    };

    for (std::int64_t i = 2; i <= depth; ++i) {
        std::vector<ExactInt> next(static_cast<std::size_t>(2 * i + 1));
        for (std::int64_t j = -i; j <= i; ++j) {
            ExactInt v = at(i - 1, j - 1);
            v += at(i - 1, j);
            v += at(i - 1, j + 1);
            v += at(i - 2, j);
            next[static_cast<std::size_t>(j + i)] = std::move(v);
        }
        rows.push_back(std::move(next));
    }
    return RhombusTable(std::move(rows));
}

RhombusTable RhombusTable::from_rows(std::vector<std::vector<ExactInt>> rows) {
    if (rows.empty()) throw std::invalid_argument("a table needs at least row 0");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != 2 * i + 1) {
            throw std::invalid_argument("row " + std::to_string(i) + " must have " + std::to_string(2 * i + 1) +
                                        " entries, got " + std::to_string(rows[i].size()));
        }
    }
    return RhombusTable(std::move(rows));
}

const ExactInt& RhombusTable::entry(std::int64_t i, std::int64_t j) const {
    const auto& r = row(i);
    if (j < -i || j > i) return kZero;
    return r[static_cast<std::size_t>(j + i)];
}

const std::vector<ExactInt>& RhombusTable::row(std::int64_t i) const {
    if (i < 0 || i > depth()) {
        throw std::out_of_range("row " + std::to_string(i) + " outside built range 0.." + std::to_string(depth()));
    }
    return rows_[static_cast<std::size_t>(i)];
}

std::vector<ExactInt> RhombusTable::column(std::int64_t j) const {
    const std::int64_t start = j < 0 ? -j : j;
    if (start > depth()) {
        throw std::out_of_range("column " + std::to_string(j) + " needs depth >= " + std::to_string(start));
    }
    std::vector<ExactInt> out;
    out.reserve(static_cast<std::size_t>(depth() - start + 1));
    for (std::int64_t i = start; i <= depth(); ++i) out.push_back(entry(i, j));
    return out;
}

}  // namespace rhombus
