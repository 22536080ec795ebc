#pragma once

#include <cstdint>
#include <cstdlib>
#include <span>
#include <vector>

#include "vqoe/blocks.hpp"
#include "vqoe/errors.hpp"
#include "vqoe/frame.hpp"

namespace vqoe {

/// mpdecimate-style duplicate test thresholds, in SAD units per 8x8 block.
struct DecimateThresholds {
    std::uint32_t hi = 64 * 12;
    std::uint32_t lo = 64 * 5;
    double frac = 0.1;
};

inline void check_thresholds(const DecimateThresholds& th) {
    if (th.lo > th.hi) throw Error("decimate thresholds require lo <= hi");
    if (th.frac < 0.0 || th.frac > 1.0) throw Error("frac must be in [0, 1]");
}

/// Maximal run of duplicated frames longer than one second.
struct FreezeEvent {
    std::uint32_t start_frame = 0;
    std::uint32_t end_frame = 0;  // inclusive
    double duration_seconds = 0.0;

    bool operator==(const FreezeEvent&) const = default;
};

struct TemporalResult {
    double freeze_ratio = 0.0;          // duplicated frames / total frames
    std::uint32_t num_freezes = 0;      // events longer than one second
    double total_freeze_seconds = 0.0;  // summed event durations
    std::vector<FreezeEvent> events;
    bool still_clip_warning = false;    // every frame duplicated its predecessor
};

/// True iff curr repeats prev: no luma 8x8 block has SAD > hi, and at most
/// frac of the blocks have SAD > lo. Luma only; edge blocks replicate.
inline bool is_duplicate(const FrameYuv& prev, const FrameYuv& curr,
                         const DecimateThresholds& th = {}) {
    if (prev.width != curr.width || prev.height != curr.height)
        throw DimensionMismatch("duplicate test needs equal frame dimensions");
    check_thresholds(th);
    const std::uint32_t bw = blocks_per_dim(curr.width);
    const std::uint32_t bh = blocks_per_dim(curr.height);
    std::uint32_t changed = 0;
    std::uint8_t a[64];
    std::uint8_t b[64];
    for (std::uint32_t by = 0; by < bh; ++by)
        for (std::uint32_t bx = 0; bx < bw; ++bx) {
            read_block_8x8(prev.y, prev.width, prev.height, bx, by, a);
            read_block_8x8(curr.y, curr.width, curr.height, bx, by, b);
            std::uint32_t sad = 0;
            for (int i = 0; i < 64; ++i)
                sad += static_cast<std::uint32_t>(std::abs(int(a[i]) - int(b[i])));
            if (sad > th.hi) return false;
            if (sad > th.lo) ++changed;
        }
    const double total = static_cast<double>(bw) * bh;
    return static_cast<double>(changed) <= th.frac * total;
}

/// Marks every frame that duplicates its predecessor (frame 0 never does),
/// then segments maximal duplicate runs; runs longer than one second become
/// FreezeEvents. freeze_ratio counts all duplicates, sub-second runs
/// included, since viewers still lose those frames.
inline TemporalResult detect_freezes(std::span<const FrameYuv> frames, const ClipMeta& meta,
                                     const DecimateThresholds& th = {}) {
    if (frames.size() < 2) throw EmptyClip("freeze detection needs at least 2 frames");
    check_thresholds(th);
    const std::size_t n = frames.size();
    std::vector<bool> dup(n, false);
    for (std::size_t i = 1; i < n; ++i) dup[i] = is_duplicate(frames[i - 1], frames[i], th);

    TemporalResult result;
    const double fps = meta.fps.as_double();
    std::size_t duplicates = 0;
    std::size_t i = 1;
    while (i < n) {
        if (!dup[i]) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j + 1 < n && dup[j + 1]) ++j;
        const std::size_t run = j - i + 1;
        duplicates += run;
        const double seconds = static_cast<double>(run) / fps;
        if (seconds > 1.0) {
            result.events.push_back({static_cast<std::uint32_t>(i),
                                     static_cast<std::uint32_t>(j), seconds});
            result.total_freeze_seconds += seconds;
        }
        i = j + 1;
    }
    result.freeze_ratio = static_cast<double>(duplicates) / static_cast<double>(n);
    result.num_freezes = static_cast<std::uint32_t>(result.events.size());
    result.still_clip_warning = duplicates == n - 1;
    return result;
}

}  // namespace vqoe
