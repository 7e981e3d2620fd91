#pragma once

// Exhaustive enumeration of (grand) Motzkin paths and their 2-generalized
// variants. This is the slow, obviously-correct ground truth: every count comes
// from walking all step sequences, never from a recurrence or a formula.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "rhombus/exact.hpp"

namespace rhombus {

/// U = (1,1), D = (1,-1), H = (1,0), H2 = (2,0).
enum class Step : std::uint8_t { U, D, H, H2 };

char step_symbol(Step s);  // 'U', 'D', 'H', 'L' (L for the long level step)

struct LatticePath {
    std::vector<Step> steps;

    /// Total x-extent; H2 counts 2.
    std::int64_t length() const;
    /// Final y-coordinate (#U - #D).
    std::int64_t height() const;
    /// True iff no prefix dips below the x-axis.
    bool is_non_negative() const;

    std::string to_string() const;

    friend bool operator==(const LatticePath&, const LatticePath&) = default;
};

inline constexpr std::int64_t kDefaultEnumerationCap = 14;

/// Raised when a requested length exceeds the enumeration cap.
class EnumerationCapError : public std::out_of_range {
public:
    EnumerationCapError(std::int64_t n, std::int64_t cap);
    std::int64_t n() const { return n_; }
    std::int64_t cap() const { return cap_; }

private:
    std::int64_t n_;
    std::int64_t cap_;
};

/// Every path over {U, D, H, H2} of total length n, each exactly once.
std::vector<LatticePath> enumerate_grand(std::int64_t n, std::int64_t cap = kDefaultEnumerationCap);

/// Final height -> number of 2-generalized grand Motzkin paths of length n.
/// Every height in [-n, n] is present (possibly with count 0).
std::map<std::int64_t, ExactInt> count_by_height(std::int64_t n, std::int64_t cap = kDefaultEnumerationCap);

/// 2-generalized Motzkin paths: steps {U, D, H, H2}, non-negative, ending at 0.
ExactInt count_motzkin2(std::int64_t n, std::int64_t cap = kDefaultEnumerationCap);

/// Motzkin paths: steps {U, D, H}, non-negative, ending at 0.
ExactInt count_motzkin(std::int64_t n, std::int64_t cap = kDefaultEnumerationCap);

/// Grand Motzkin paths: steps {U, D, H}, ending at 0.
ExactInt count_grand_motzkin(std::int64_t n, std::int64_t cap = kDefaultEnumerationCap);

/// True iff count_by_height(n)[j] equals the sum of the counts for
/// (n-1, j-1), (n-1, j), (n-1, j+1) and (n-2, j), i.e. the enumerated counts obey
/// the rhombus recurrence by case analysis on the last step. Requires n >= 2.
bool recurrence_check(std::int64_t n, std::int64_t j, std::int64_t cap = kDefaultEnumerationCap);

}  // namespace rhombus
