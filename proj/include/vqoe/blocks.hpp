#pragma once

#include <algorithm>
#include <cstdint>
#include <span>

namespace vqoe {

/// Number of 8x8 blocks covering a w x h plane (edge blocks padded).
inline std::uint32_t blocks_per_dim(std::uint32_t extent) {
    return (extent + 7) / 8;
}

/// Copies the 8x8 block at block coordinates (bx, by) out of a row-major
/// plane, replicating edge samples where the block extends past the plane.
inline void read_block_8x8(std::span<const std::uint8_t> plane, std::uint32_t width,
                           std::uint32_t height, std::uint32_t bx, std::uint32_t by,
                           std::uint8_t (&out)[64]) {
    for (std::uint32_t dy = 0; dy < 8; ++dy) {
        const std::uint32_t sy = std::min(by * 8 + dy, height - 1);
        const std::uint8_t* row = plane.data() + static_cast<std::size_t>(sy) * width;
        for (std::uint32_t dx = 0; dx < 8; ++dx) {
            const std::uint32_t sx = std::min(bx * 8 + dx, width - 1);
            out[dy * 8 + dx] = row[sx];
        }
    }
}

}  // namespace vqoe
