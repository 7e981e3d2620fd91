#include "rhombus/paths.hpp"

#include <array>
#include <span>

namespace rhombus {

namespace {

constexpr std::array<Step, 4> kGeneralizedSteps{Step::U, Step::D, Step::H, Step::H2};
constexpr std::array<Step, 3> kMotzkinSteps{Step::U, Step::D, Step::H};

constexpr std::int64_t extent(Step s) { return s == Step::H2 ? 2 : 1; }

constexpr std::int64_t rise(Step s) {
    switch (s) {
        case Step::U: return 1;
        case Step::D: return -1;
        default: return 0;
    }
}

void check_cap(std::int64_t n, std::int64_t cap) {
    if (n < 0) throw std::invalid_argument("path length must be non-negative, got " + std::to_string(n));
    if (n > cap) throw EnumerationCapError(n, cap);
}

// Walks every step sequence of total extent `remaining` and tallies final heights.
// Counts stay well inside 64 bits for any sane cap (4^n bounds the branch count).
class HeightCounter {
public:
    HeightCounter(std::int64_t n, std::span<const Step> steps, bool non_negative)
        : n_(n), steps_(steps), non_negative_(non_negative), tally_(static_cast<std::size_t>(2 * n + 1), 0) {
        walk(n, 0);
    }

    std::uint64_t at(std::int64_t height) const {
        if (height < -n_ || height > n_) return 0;
        return tally_[static_cast<std::size_t>(height + n_)];
    }

private:
    void walk(std::int64_t remaining, std::int64_t height) {
        if (remaining == 0) {
            ++tally_[static_cast<std::size_t>(height + n_)];
            return;
        }
        for (Step s : steps_) {
            if (extent(s) > remaining) continue;
            const std::int64_t next = height + rise(s);
            if (non_negative_ && next < 0) continue;
            walk(remaining - extent(s), next);
        }
    }

    std::int64_t n_;
    std::span<const Step> steps_;
    bool non_negative_;
    std::vector<std::uint64_t> tally_;
};

void materialize(std::int64_t remaining, std::vector<Step>& prefix, std::vector<LatticePath>& out) {
    if (remaining == 0) {
        out.push_back(LatticePath{prefix});
        return;
    }
    for (Step s : kGeneralizedSteps) {
        if (extent(s) > remaining) continue;
        prefix.push_back(s);
        materialize(remaining - extent(s), prefix, out);
        prefix.pop_back();
    }
}

ExactInt to_exact(std::uint64_t v) { return ExactInt(mpz_class(static_cast<unsigned long>(v))); }

}  // namespace

char step_symbol(Step s) {
    switch (s) {
        case Step::U: return 'U';
        case Step::D: return 'D';
        case Step::H: return 'H';
        case Step::H2: return 'L';
    }
    return '?';
}

std::int64_t LatticePath::length() const {
    std::int64_t total = 0;
    for (Step s : steps) total += extent(s);
    return total;
}

std::int64_t LatticePath::height() const {
    std::int64_t h = 0;
    for (Step s : steps) h += rise(s);
    return h;
}

bool LatticePath::is_non_negative() const {
    std::int64_t h = 0;
    for (Step s : steps) {
        h += rise(s);
        if (h < 0) return false;
    }
    return true;
}

std::string LatticePath::to_string() const {
    std::string out;
    out.reserve(steps.size());
    for (Step s : steps) out.push_back(step_symbol(s));
    return out;
}

EnumerationCapError::EnumerationCapError(std::int64_t n, std::int64_t cap)
    : std::out_of_range("path length " + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(cap)),
      n_(n),
      cap_(cap) {}

std::vector<LatticePath> enumerate_grand(std::int64_t n, std::int64_t cap) {
    check_cap(n, cap);
    std::vector<LatticePath> out;
    std::vector<Step> prefix;
    materialize(n, prefix, out);
    return out;
}

std::map<std::int64_t, ExactInt> count_by_height(std::int64_t n, std::int64_t cap) {
    check_cap(n, cap);
    const HeightCounter counter(n, kGeneralizedSteps, false);
    std::map<std::int64_t, ExactInt> out;
    for (std::int64_t h = -n; h <= n; ++h) out.emplace(h, to_exact(counter.at(h)));
    return out;
}

ExactInt count_motzkin2(std::int64_t n, std::int64_t cap) {
    check_cap(n, cap);
    return to_exact(HeightCounter(n, kGeneralizedSteps, true).at(0));
}

ExactInt count_motzkin(std::int64_t n, std::int64_t cap) {
    check_cap(n, cap);
    return to_exact(HeightCounter(n, kMotzkinSteps, true).at(0));
}

ExactInt count_grand_motzkin(std::int64_t n, std::int64_t cap) {
    check_cap(n, cap);
    return to_exact(HeightCounter(n, kMotzkinSteps, false).at(0));
}

bool recurrence_check(std::int64_t n, std::int64_t j, std::int64_t cap) {
    if (n < 2) throw std::invalid_argument("recurrence_check needs n >= 2, got " + std::to_string(n));
    check_cap(n, cap);
    auto count = [](const std::map<std::int64_t, ExactInt>& c, std::int64_t h) {
        auto it = c.find(h);
        return it == c.end() ? ExactInt() : it->second;
    };
    const auto cur = count_by_height(n, cap);
    const auto prev = count_by_height(n - 1, cap);
    const auto prev2 = count_by_height(n - 2, cap);
    const ExactInt expected = count(prev, j - 1) + count(prev, j) + count(prev, j + 1) + count(prev2, j);
    return count(cur, j) == expected;
}

}  // namespace rhombus
