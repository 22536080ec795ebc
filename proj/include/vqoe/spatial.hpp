#pragma once

#include <cstdint>
#include <span>

#include "vqoe/blocks.hpp"
#include "vqoe/dct.hpp"
#include "vqoe/errors.hpp"
#include "vqoe/expgolomb.hpp"
#include "vqoe/frame.hpp"

namespace vqoe {

/// Toy intra-only coder settings. The coder is a bit-cost model: it never
/// emits a decodable stream, only deterministic sizes.
struct IntraCoderConfig {
    int qp = 30;
    static constexpr int block_size = 8;

    double q_step() const { return q_step_for_qp(qp); }
};

inline void check_coder_config(const IntraCoderConfig& cfg) {
    if (cfg.qp < 0 || cfg.qp > 51) throw Error("qp must be in [0, 51]");
}

struct PbrResult {
    double intra_bitrate_bps = 0.0;
    double recorded_bitrate_bps = 0.0;
    double pbr_percent = 0.0;
};

namespace detail {

/// Cost in bits of one 8x8 block: level shift, DCT, quantize, zigzag,
/// (zero-run, level) pairs with Exp-Golomb lengths, then a (0, 0) pair as
/// end-of-block. An all-zero block therefore costs ue(0) + se(0) = 2 bits.
inline std::uint64_t block_bit_cost(const std::uint8_t (&samples)[64], double q_step) {
    double shifted[64];
    for (int i = 0; i < 64; ++i) shifted[i] = static_cast<double>(samples[i]) - 128.0;
    double coeffs[64];
    forward_dct_8x8(shifted, coeffs);

    std::uint64_t bits = 0;
    std::uint32_t run = 0;
    for (int z = 0; z < 64; ++z) {
        const std::int32_t level = quantize(coeffs[kZigzag[z]], q_step);
        if (level == 0) {
            ++run;
        } else {
            bits += ue_bits(run) + se_bits(level);
            run = 0;
        }
    }
    return bits + ue_bits(0) + se_bits(0);
}

inline std::uint64_t plane_bit_cost(std::span<const std::uint8_t> plane, std::uint32_t width,
                                    std::uint32_t height, double q_step) {
    const std::uint32_t bw = blocks_per_dim(width);
    const std::uint32_t bh = blocks_per_dim(height);
    std::uint64_t bits = 0;
    std::uint8_t block[64];
    for (std::uint32_t by = 0; by < bh; ++by)
        for (std::uint32_t bx = 0; bx < bw; ++bx) {
            read_block_8x8(plane, width, height, bx, by, block);
            bits += block_bit_cost(block, q_step);
        }
    return bits;
}

}  // namespace detail

inline constexpr std::uint64_t kFrameHeaderBits = 32;

/// Total coded size in bits of the clip under intra-only coding: every
/// plane of every frame is coded standalone, so motion contributes nothing.
inline std::uint64_t intra_encode_size(std::span<const FrameYuv> frames,
                                       const IntraCoderConfig& cfg = {}) {
    check_coder_config(cfg);
    if (frames.empty()) throw EmptyClip("cannot encode an empty clip");
    const FrameYuv& first = frames.front();
    const double q = cfg.q_step();
    std::uint64_t bits = 0;
    for (const FrameYuv& f : frames) {
        if (f.width != first.width || f.height != first.height)
            throw DimensionMismatch("frames in a clip must share dimensions");
        bits += kFrameHeaderBits;
        bits += detail::plane_bit_cost(f.y, f.width, f.height, q);
        bits += detail::plane_bit_cost(f.u, f.chroma_width(), f.chroma_height(), q);
        bits += detail::plane_bit_cost(f.v, f.chroma_width(), f.chroma_height(), q);
    }
    return bits;
}

/// Perceptual bitrate: relative drop from the recorded bitrate to the
/// intra-only re-encode. Blur collapses the intra size at high QP, so
/// blurrier clips score higher.
inline PbrResult compute_pbr(std::span<const FrameYuv> frames, const ClipMeta& meta,
                             const IntraCoderConfig& cfg = {}) {
    if (!meta.recorded_bitrate_bps)
        throw MissingRecordedBitrate("PBR needs the recorded bitrate (B_rec)");
    if (frames.empty() || meta.frame_count == 0) throw EmptyClip("cannot compute PBR of an empty clip");
    const double duration = meta.duration_seconds();
    PbrResult r;
    r.recorded_bitrate_bps = static_cast<double>(*meta.recorded_bitrate_bps);
    r.intra_bitrate_bps = static_cast<double>(intra_encode_size(frames, cfg)) / duration;
    const double rel = (r.recorded_bitrate_bps - r.intra_bitrate_bps) / r.recorded_bitrate_bps;
    r.pbr_percent = rel > 0.0 ? rel * 100.0 : 0.0;
    return r;
}

/// Prior-work blur baseline: fraction of high-frequency luma DCT positions
/// (zigzag index >= 32) quantized to zero at QP 30, averaged over blocks
/// then frames. 1.0 means maximally blurred. Kept for comparison; known to
/// confuse content with quality.
inline double dct_blur_baseline(std::span<const FrameYuv> frames) {
    if (frames.empty()) throw EmptyClip("cannot score an empty clip");
    const double q = q_step_for_qp(30);
    double frame_sum = 0.0;
    for (const FrameYuv& f : frames) {
        const std::uint32_t bw = blocks_per_dim(f.width);
        const std::uint32_t bh = blocks_per_dim(f.height);
        std::uint64_t zeros = 0;
        std::uint8_t block[64];
        double shifted[64];
        double coeffs[64];
        for (std::uint32_t by = 0; by < bh; ++by)
            for (std::uint32_t bx = 0; bx < bw; ++bx) {
                read_block_8x8(f.y, f.width, f.height, bx, by, block);
                for (int i = 0; i < 64; ++i) shifted[i] = static_cast<double>(block[i]) - 128.0;
                forward_dct_8x8(shifted, coeffs);
                for (int z = 32; z < 64; ++z)
                    if (quantize(coeffs[kZigzag[z]], q) == 0) ++zeros;
            }
        const double positions = 32.0 * bw * bh;
        frame_sum += static_cast<double>(zeros) / positions;
    }
    return frame_sum / static_cast<double>(frames.size());
}

}  // namespace vqoe
