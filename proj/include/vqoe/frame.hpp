#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vqoe/errors.hpp"

namespace vqoe {

/// Exact frame rate, e.g. 30000/1001.
struct Fraction {
    std::uint32_t num = 30;
    std::uint32_t den = 1;

    double as_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Fraction&) const = default;
};

/// One decoded planar 4:2:0 picture. Planes are row-major, 8-bit.
/// Invariants: even dimensions >= 8, y.size() == w*h, u/v.size() == (w/2)*(h/2).
struct FrameYuv {
    std::uint32_t width = 0;
    std::uint32_t height = 0;
    std::vector<std::uint8_t> y;
    std::vector<std::uint8_t> u;
    std::vector<std::uint8_t> v;

    std::uint32_t chroma_width() const { return width / 2; }
    std::uint32_t chroma_height() const { return height / 2; }

    bool operator==(const FrameYuv&) const = default;
};

/// Makes a frame with allocated planes, luma filled with `luma`, chroma neutral.
inline FrameYuv make_frame(std::uint32_t width, std::uint32_t height,
                           std::uint8_t luma = 128, std::uint8_t cb = 128,
                           std::uint8_t cr = 128) {
    FrameYuv f;
    f.width = width;
    f.height = height;
    f.y.assign(static_cast<std::size_t>(width) * height, luma);
    const std::size_t csize = static_cast<std::size_t>(width / 2) * (height / 2);
    f.u.assign(csize, cb);
    f.v.assign(csize, cr);
    return f;
}

/// Throws DimensionMismatch if the frame violates the plane-geometry invariants.
inline void check_frame(const FrameYuv& f) {
    if (f.width < 8 || f.height < 8 || (f.width % 2) != 0 || (f.height % 2) != 0)
        throw DimensionMismatch("frame dimensions must be even and at least 8x8");
    if (f.y.size() != static_cast<std::size_t>(f.width) * f.height)
        throw DimensionMismatch("luma plane size does not match dimensions");
    const std::size_t csize = static_cast<std::size_t>(f.chroma_width()) * f.chroma_height();
    if (f.u.size() != csize || f.v.size() != csize)
        throw DimensionMismatch("chroma plane size does not match dimensions");
}

/// Per-clip metadata. recorded_bitrate_bps is the screen-recording bitrate
/// B_rec; raw Y4M files carry none, so it arrives via manifest or CLI flag.
struct ClipMeta {
    std::uint32_t width = 0;
    std::uint32_t height = 0;
    Fraction fps;
    std::uint32_t frame_count = 0;
    std::optional<std::uint64_t> recorded_bitrate_bps;
    std::string clip_id;

    double duration_seconds() const {
        return static_cast<double>(frame_count) * fps.den / fps.num;
    }
};

/// Returns meta with B_rec set; all other fields unchanged.
inline ClipMeta attach_recorded_bitrate(ClipMeta meta, std::uint64_t bitrate_bps) {
    if (bitrate_bps == 0)
        throw NonPositiveBitrate("recorded bitrate must be > 0");
    meta.recorded_bitrate_bps = bitrate_bps;
    return meta;
}

}  // namespace vqoe
