#pragma once

#include <bit>
#include <cstdint>

namespace vqoe {

/// Bit length of the order-0 unsigned Exp-Golomb code of k:
/// 2*floor(log2(k+1)) + 1.
inline std::uint32_t ue_bits(std::uint64_t k) {
    return 2u * (std::bit_width(k + 1) - 1) + 1u;
}

/// Bit length of the signed Exp-Golomb code of v.
/// Mapping: 0 -> 0, 1 -> 1, -1 -> 2, 2 -> 3, -2 -> 4, ...
inline std::uint32_t se_bits(std::int64_t v) {
    const std::uint64_t code =
        v > 0 ? 2ull * static_cast<std::uint64_t>(v) - 1
              : 2ull * static_cast<std::uint64_t>(-v);
    return ue_bits(code);
}

}  // namespace vqoe
