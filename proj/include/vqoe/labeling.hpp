#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "vqoe/errors.hpp"

namespace vqoe {

enum class QoeClass : int { bad = 0, average = 1, good = 2 };

inline const char* to_string(QoeClass c) {
    switch (c) {
        case QoeClass::bad: return "bad";
        case QoeClass::average: return "average";
        default: return "good";
    }
}

/// Two MOS cut points turning scores into 3 classes:
/// bad: mos < m1, average: m1 <= mos < m2, good: mos >= m2.
struct ClassThresholds {
    double m1 = 0.0;
    double m2 = 0.0;

    bool operator==(const ClassThresholds&) const = default;
};

inline QoeClass label_for_mos(double mos, const ClassThresholds& t) {
    if (mos < t.m1) return QoeClass::bad;
    if (mos < t.m2) return QoeClass::average;
    return QoeClass::good;
}

/// The search grid: 1.05, 1.10, ..., 4.95 (a 0.05 sliding window over the
/// open MOS interval).
inline std::vector<double> threshold_grid() {
    std::vector<double> grid;
    grid.reserve(79);
    for (int cents = 105; cents <= 495; cents += 5)
        grid.push_back(static_cast<double>(cents) / 100.0);
    return grid;
}

/// Exhaustive search over all grid pairs m1 < m2, maximizing 3-class
/// accuracy of predicted labels against true labels (both lists labeled by
/// the candidate pair). Ties break to smallest m1, then smallest m2.
///
/// The grid pair (m1, m2) mislabels sample i exactly when one of the two
/// thresholds falls inside (min_i, max_i] of the pair's MOS scores, so the
/// objective is evaluated with per-grid-interval counts instead of a scan
/// over samples per candidate pair.
inline ClassThresholds search_thresholds(const std::vector<double>& true_mos,
                                         const std::vector<double>& predicted_mos) {
    if (true_mos.size() != predicted_mos.size())
        throw LengthMismatch("threshold search needs equal-length score lists");
    if (true_mos.empty()) throw EmptyInput("threshold search needs at least one sample");

    const std::vector<double> grid = threshold_grid();
    const int g = static_cast<int>(grid.size());
    const std::size_t n = true_mos.size();

    // grid index range [a, b] covered by (lo, hi]: grid[j] in interval.
    auto interval_range = [&](double lo, double hi, int& a, int& b) {
        a = g;
        b = -1;
        for (int j = 0; j < g; ++j) {
            if (grid[j] > lo && grid[j] <= hi) {
                if (a == g) a = j;
                b = j;
            }
        }
    };

    // single[j]  = #samples straddled by grid value j
    // both[a][b] = #samples whose straddle range is exactly [a, b]
    std::vector<std::uint32_t> single(static_cast<std::size_t>(g), 0);
    std::vector<std::vector<std::uint32_t>> range_count(
        static_cast<std::size_t>(g), std::vector<std::uint32_t>(static_cast<std::size_t>(g), 0));
    for (std::size_t i = 0; i < n; ++i) {
        const double lo = std::min(true_mos[i], predicted_mos[i]);
        const double hi = std::max(true_mos[i], predicted_mos[i]);
        int a, b;
        interval_range(lo, hi, a, b);
        if (b < 0) continue;  // no grid value splits this pair
        for (int j = a; j <= b; ++j) ++single[static_cast<std::size_t>(j)];
        ++range_count[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }

    // covered[i][j] = #samples whose range contains both grid i and grid j
    // (i <= j), i.e. a <= i and b >= j: 2-D suffix/prefix accumulation.
    std::vector<std::vector<std::uint32_t>> covered = range_count;
    for (int a = 1; a < g; ++a)
        for (int b = 0; b < g; ++b)
            covered[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] +=
                covered[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b)];
    for (int a = 0; a < g; ++a)
        for (int b = g - 2; b >= 0; --b)
            covered[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] +=
                covered[static_cast<std::size_t>(a)][static_cast<std::size_t>(b + 1)];

    std::uint64_t best_mismatches = static_cast<std::uint64_t>(n) + 1;
    int best_i = 0, best_j = 1;
    for (int i = 0; i < g; ++i)
        for (int j = i + 1; j < g; ++j) {
            const std::uint64_t mism =
                static_cast<std::uint64_t>(single[static_cast<std::size_t>(i)]) +
                single[static_cast<std::size_t>(j)] -
                covered[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (mism < best_mismatches) {
                best_mismatches = mism;
                best_i = i;
                best_j = j;
            }
        }
    return {grid[static_cast<std::size_t>(best_i)], grid[static_cast<std::size_t>(best_j)]};
}

}  // namespace vqoe
