#pragma once

// Shared test utilities. The naive_* functions are independent reference
// implementations (oracles) written straight from the definitions; they must
// not reuse library internals beyond basic types.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "vqoe/frame.hpp"
#include "vqoe/labeling.hpp"
#include "vqoe/rng.hpp"
#include "vqoe/temporal.hpp"

namespace testutil {

inline vqoe::FrameYuv random_frame(vqoe::Rng& rng, std::uint32_t w, std::uint32_t h) {
    vqoe::FrameYuv f = vqoe::make_frame(w, h);
    for (auto& s : f.y) s = static_cast<std::uint8_t>(rng.below(256));
    for (auto& s : f.u) s = static_cast<std::uint8_t>(rng.below(256));
    for (auto& s : f.v) s = static_cast<std::uint8_t>(rng.below(256));
    return f;
}

/// Reference duplicate test: plain double loop over 8x8 luma blocks with
/// clamped (edge-replicated) sampling.
inline bool naive_is_duplicate(const vqoe::FrameYuv& prev, const vqoe::FrameYuv& curr,
                               const vqoe::DecimateThresholds& th) {
    const std::uint32_t w = curr.width, h = curr.height;
    const std::uint32_t bw = (w + 7) / 8, bh = (h + 7) / 8;
    std::uint64_t over_lo = 0;
    for (std::uint32_t by = 0; by < bh; ++by)
        for (std::uint32_t bx = 0; bx < bw; ++bx) {
            long sad = 0;
            for (std::uint32_t dy = 0; dy < 8; ++dy)
                for (std::uint32_t dx = 0; dx < 8; ++dx) {
                    const std::uint32_t x = std::min(bx * 8 + dx, w - 1);
                    const std::uint32_t y = std::min(by * 8 + dy, h - 1);
                    const int a = prev.y[static_cast<std::size_t>(y) * w + x];
                    const int b = curr.y[static_cast<std::size_t>(y) * w + x];
                    sad += std::abs(a - b);
                }
            if (sad > static_cast<long>(th.hi)) return false;
            if (sad > static_cast<long>(th.lo)) ++over_lo;
        }
    return static_cast<double>(over_lo) <= th.frac * (static_cast<double>(bw) * bh);
}

/// Brute-force threshold search: label both lists for every grid pair and
/// count matches; strictly-better accuracy wins, so ties break to the
/// smallest m1 then smallest m2.
inline vqoe::ClassThresholds naive_search_thresholds(const std::vector<double>& truths,
                                                     const std::vector<double>& preds) {
    std::vector<double> grid;
    for (int cents = 105; cents <= 495; cents += 5) grid.push_back(cents / 100.0);
    std::size_t best_matches = 0;
    bool have_best = false;
    vqoe::ClassThresholds best{};
    for (std::size_t i = 0; i < grid.size(); ++i)
        for (std::size_t j = i + 1; j < grid.size(); ++j) {
            const vqoe::ClassThresholds cand{grid[i], grid[j]};
            std::size_t matches = 0;
            for (std::size_t s = 0; s < truths.size(); ++s)
                if (vqoe::label_for_mos(truths[s], cand) == vqoe::label_for_mos(preds[s], cand))
                    ++matches;
            if (!have_best || matches > best_matches) {
                have_best = true;
                best_matches = matches;
                best = cand;
            }
        }
    return best;
}

/// Unique scratch directory, removed on destruction.
struct TempDir {
    std::filesystem::path path;

    explicit TempDir(const std::string& tag) {
        static std::uint64_t counter = 0;
        path = std::filesystem::temp_directory_path() /
               ("vqoe_" + tag + "_" + std::to_string(++counter) + "_" +
                std::to_string(static_cast<std::uint64_t>(
                    std::chrono::steady_clock::now().time_since_epoch().count())));
        std::filesystem::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;
};

}  // namespace testutil
