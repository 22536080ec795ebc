#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <numeric>
#include <string>
#include <vector>

#include <json.hpp>

#include "vqoe/errors.hpp"
#include "vqoe/frame.hpp"
#include "vqoe/rng.hpp"
#include "vqoe/spatial.hpp"
#include "vqoe/util.hpp"
#include "vqoe/version.hpp"
#include "vqoe/y4m.hpp"

namespace vqoe {

enum class PristineKind : int {
    gradient = 0,
    moving_checker = 1,
    noise_texture = 2,
    talking_head_proxy = 3,
};

inline const char* to_string(PristineKind k) {
    switch (k) {
        case PristineKind::gradient: return "gradient";
        case PristineKind::moving_checker: return "moving_checker";
        case PristineKind::noise_texture: return "noise_texture";
        default: return "talking_head_proxy";
    }
}

struct FreezeSpan {
    std::uint32_t start_frame = 0;   // anchor frame; the copies follow it
    std::uint32_t length_frames = 0; // frames replaced by copies of the anchor

    bool operator==(const FreezeSpan&) const = default;
};

enum class NetworkProfile : int { good = 0, average = 1, bad = 2, custom = 3 };

inline const char* to_string(NetworkProfile p) {
    switch (p) {
        case NetworkProfile::good: return "good";
        case NetworkProfile::average: return "average";
        case NetworkProfile::bad: return "bad";
        default: return "custom";
    }
}

/// Ground-truth degradation recipe for one clip.
struct DegradationSpec {
    double blur_sigma = 0.0;
    std::vector<FreezeSpan> freeze_spans;
    NetworkProfile network_profile = NetworkProfile::custom;

    double frozen_fraction(std::uint32_t frame_count) const {
        std::uint64_t frozen = 0;
        for (const FreezeSpan& s : freeze_spans) frozen += s.length_frames;
        return static_cast<double>(frozen) / static_cast<double>(frame_count);
    }
};

/// Harness-only MOS oracle, monotone non-increasing in blur and freeze
/// amounts. This scores the injected degradation, not human perception.
inline double synth_mos(const DegradationSpec& spec, std::uint32_t frame_count) {
    const double blur_penalty = 3.0 * std::min(1.0, spec.blur_sigma / 5.0);
    const double freeze_penalty = 2.5 * spec.frozen_fraction(frame_count);
    return std::clamp(5.0 - blur_penalty - freeze_penalty, 1.0, 5.0);
}

struct SynthLabel {
    double mos = 5.0;
    DegradationSpec spec;
};

struct PristineOptions {
    int velocity_px_per_frame = 1;  // moving_checker only
};

namespace detail {

/// Binary frame counter stamped into the two top block-rows of the luma
/// plane (bit b set -> tone 225, clear -> 30). Consecutive frames always
/// differ by a full 8x8 block of amplitude 195, far above the duplicate
/// `hi` threshold, so pristine clips never contain accidental duplicates
/// and injected freezes are the only duplicate source.
inline void stamp_frame_counter(FrameYuv& f, std::uint32_t t) {
    const std::uint32_t blocks_per_row = f.width / 8;
    const std::uint32_t nbits = std::min<std::uint32_t>(16, blocks_per_row * 2);
    for (std::uint32_t b = 0; b < nbits; ++b) {
        const std::uint32_t brow = b / blocks_per_row;
        const std::uint32_t bcol = b % blocks_per_row;
        if ((brow + 1) * 8 > f.height) break;
        const std::uint8_t tone = ((t >> b) & 1u) != 0 ? 225 : 30;
        for (std::uint32_t dy = 0; dy < 8; ++dy) {
            std::uint8_t* row =
                f.y.data() + static_cast<std::size_t>(brow * 8 + dy) * f.width + bcol * 8;
            std::fill(row, row + 8, tone);
        }
    }
}

inline std::uint8_t clamp_u8(int v) {
    return static_cast<std::uint8_t>(std::clamp(v, 0, 255));
}

/// Pixel-scale deterministic dither in [-20, 20]; gives smooth generators
/// the high-frequency energy that blur later removes.
inline int dither(std::uint64_t seed, std::uint32_t x, std::uint32_t y) {
    return static_cast<int>(hash_coords(seed, x, y) % 41) - 20;
}

inline void gen_gradient(std::vector<FrameYuv>& frames, const ClipMeta& meta,
                         std::uint64_t seed) {
    const std::uint32_t w = meta.width, h = meta.height;
    FrameYuv base = make_frame(w, h);
    for (std::uint32_t y = 0; y < h; ++y)
        for (std::uint32_t x = 0; x < w; ++x) {
            const int g = static_cast<int>((x * 160) / w + (y * 64) / h + 16);
            base.y[static_cast<std::size_t>(y) * w + x] = clamp_u8(g + dither(seed, x, y));
        }
    for (std::uint32_t y = 0; y < h / 2; ++y)
        for (std::uint32_t x = 0; x < w / 2; ++x) {
            base.u[static_cast<std::size_t>(y) * (w / 2) + x] =
                clamp_u8(96 + static_cast<int>((x * 64) / (w / 2)));
            base.v[static_cast<std::size_t>(y) * (w / 2) + x] =
                clamp_u8(96 + static_cast<int>((y * 64) / (h / 2)));
        }
    for (std::uint32_t t = 0; t < meta.frame_count; ++t) frames.push_back(base);
}

/// Checkerboard pattern band (rows >= 16), binomially smoothed so its coded
/// size is nearly independent of the translation phase, shifted
/// horizontally with wraparound by velocity*t pixels per frame. Rows 0..15
/// stay flat so per-frame histograms are exactly translation-invariant.
inline void gen_moving_checker(std::vector<FrameYuv>& frames, const ClipMeta& meta,
                               int velocity) {
    const std::uint32_t w = meta.width, h = meta.height;
    const std::uint32_t band_top = std::min<std::uint32_t>(16, h);
    const std::uint32_t band_h = h - band_top;

    std::vector<int> pattern(static_cast<std::size_t>(band_h) * w, 128);
    for (std::uint32_t y = 0; y < band_h; ++y)
        for (std::uint32_t x = 0; x < w; ++x)
            pattern[static_cast<std::size_t>(y) * w + x] =
                (((x / 8) + (y / 8)) % 2) != 0 ? 192 : 64;

    auto smooth = [&](bool horizontal) {
        std::vector<int> next(pattern.size());
        for (std::uint32_t y = 0; y < band_h; ++y)
            for (std::uint32_t x = 0; x < w; ++x) {
                long acc = 0;
                static constexpr int kTap[5] = {1, 4, 6, 4, 1};
                for (int d = -2; d <= 2; ++d) {
                    std::uint32_t sx = x, sy = y;
                    if (horizontal) {
                        sx = static_cast<std::uint32_t>((static_cast<long>(x) + d + w) % w);
                    } else {
                        const long yy = std::clamp<long>(static_cast<long>(y) + d, 0,
                                                         static_cast<long>(band_h) - 1);
                        sy = static_cast<std::uint32_t>(yy);
                    }
                    acc += static_cast<long>(kTap[d + 2]) *
                           pattern[static_cast<std::size_t>(sy) * w + sx];
                }
                next[static_cast<std::size_t>(y) * w + x] = static_cast<int>((acc + 8) / 16);
            }
        pattern.swap(next);
    };
    for (int pass = 0; pass < 2; ++pass) {
        smooth(true);
        if (band_h > 0) smooth(false);
    }

    for (std::uint32_t t = 0; t < meta.frame_count; ++t) {
        FrameYuv f = make_frame(w, h);
        const std::uint32_t shift = static_cast<std::uint32_t>(
            ((static_cast<long long>(velocity) * t) % w + w) % w);
        for (std::uint32_t y = 0; y < band_h; ++y)
            for (std::uint32_t x = 0; x < w; ++x)
                f.y[static_cast<std::size_t>(band_top + y) * w + x] = static_cast<std::uint8_t>(
                    pattern[static_cast<std::size_t>(y) * w + (x + shift) % w]);
        frames.push_back(std::move(f));
    }
}

inline void gen_noise_texture(std::vector<FrameYuv>& frames, const ClipMeta& meta,
                              std::uint64_t seed) {
    const std::uint32_t w = meta.width, h = meta.height;
    for (std::uint32_t t = 0; t < meta.frame_count; ++t) {
        FrameYuv f = make_frame(w, h);
        for (std::uint32_t y = 0; y < h; ++y)
            for (std::uint32_t x = 0; x < w; ++x)
                f.y[static_cast<std::size_t>(y) * w + x] =
                    static_cast<std::uint8_t>(hash_coords(seed, x, y, t) & 0xff);
        for (std::uint32_t y = 0; y < h / 2; ++y)
            for (std::uint32_t x = 0; x < w / 2; ++x) {
                const std::uint64_t hv = hash_coords(seed ^ 0x55aa, x, y, t);
                f.u[static_cast<std::size_t>(y) * (w / 2) + x] =
                    static_cast<std::uint8_t>(96 + (hv & 0x3f));
                f.v[static_cast<std::size_t>(y) * (w / 2) + x] =
                    static_cast<std::uint8_t>(96 + ((hv >> 8) & 0x3f));
            }
        frames.push_back(std::move(f));
    }
}

/// Static scene proxy: gradient backdrop, textured hair band, elliptical
/// face with a bobbing offset and a mouth whose tone cycles per frame.
inline void gen_talking_head(std::vector<FrameYuv>& frames, const ClipMeta& meta,
                             std::uint64_t seed) {
    const std::uint32_t w = meta.width, h = meta.height;
    const double cx = w / 2.0;
    const double cy = h * 0.6;
    const double rx = w * 0.30;
    const double ry = h * 0.28;
    for (std::uint32_t t = 0; t < meta.frame_count; ++t) {
        FrameYuv f = make_frame(w, h);
        const int bob = static_cast<int>((t / 8) % 2);
        const int mouth_tone = 60 + 26 * static_cast<int>(t % 5);
        for (std::uint32_t y = 0; y < h; ++y)
            for (std::uint32_t x = 0; x < w; ++x) {
                int tone = 90 + static_cast<int>((y * 60) / h);
                if (y >= 16 && y < 24) tone += dither(seed, x, y);  // hair texture
                const double dx = (x - cx) / rx;
                const double dy = (y - (cy + bob)) / ry;
                const bool in_face = dx * dx + dy * dy <= 1.0;
                if (in_face) {
                    tone = 170 + dither(seed ^ 0x7a11, x, y) / 4;
                    const double ex = std::abs(dx) - 0.4;
                    const double ey = dy + 0.25;
                    if (std::abs(ex) < 0.12 && std::abs(ey) < 0.10) tone = 40;  // eyes
                    if (std::abs(dx) < 0.25 && dy > 0.35 && dy < 0.60)
                        tone = mouth_tone;  // mouth
                }
                f.y[static_cast<std::size_t>(y) * w + x] = clamp_u8(tone);
            }
        for (std::uint32_t y = 0; y < h / 2; ++y)
            for (std::uint32_t x = 0; x < w / 2; ++x) {
                const double dx = (2.0 * x - cx) / rx;
                const double dy = (2.0 * y - (cy + bob)) / ry;
                const bool in_face = dx * dx + dy * dy <= 1.0;
                f.u[static_cast<std::size_t>(y) * (w / 2) + x] =
                    static_cast<std::uint8_t>(in_face ? 110 : 128);
                f.v[static_cast<std::size_t>(y) * (w / 2) + x] =
                    static_cast<std::uint8_t>(in_face ? 150 : 128);
            }
        frames.push_back(std::move(f));
    }
}

}  // namespace detail

/// Deterministic pristine clip of the requested kind. Every generator stamps
/// a per-frame binary counter into the top-left luma blocks, guaranteeing
/// that consecutive frames differ above the duplicate `hi` threshold.
inline std::vector<FrameYuv> generate_pristine(PristineKind kind, const ClipMeta& meta,
                                               std::uint64_t seed,
                                               const PristineOptions& options = {}) {
    if (meta.width < 8 || meta.height < 8 || (meta.width % 2) != 0 || (meta.height % 2) != 0)
        throw DimensionMismatch("clip dimensions must be even and at least 8x8");
    if (meta.frame_count < 2) throw EmptyClip("clips need at least 2 frames");

    std::vector<FrameYuv> frames;
    frames.reserve(meta.frame_count);
    switch (kind) {
        case PristineKind::gradient: detail::gen_gradient(frames, meta, seed); break;
        case PristineKind::moving_checker:
            detail::gen_moving_checker(frames, meta, options.velocity_px_per_frame);
            break;
        case PristineKind::noise_texture: detail::gen_noise_texture(frames, meta, seed); break;
        case PristineKind::talking_head_proxy:
            detail::gen_talking_head(frames, meta, seed);
            break;
    }
    for (std::uint32_t t = 0; t < meta.frame_count; ++t)
        detail::stamp_frame_counter(frames[t], t);
    return frames;
}

namespace detail {

inline void blur_plane(std::vector<std::uint8_t>& plane, std::uint32_t w, std::uint32_t h,
                       const std::vector<double>& kernel) {
    const int r = static_cast<int>(kernel.size() / 2);
    auto reflect = [](long i, long n) {
        while (i < 0 || i >= n) {
            if (i < 0) i = -i - 1;
            if (i >= n) i = 2 * n - 1 - i;
        }
        return i;
    };
    std::vector<double> tmp(plane.size());
    for (std::uint32_t y = 0; y < h; ++y)
        for (std::uint32_t x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int d = -r; d <= r; ++d) {
                const long sx = reflect(static_cast<long>(x) + d, w);
                acc += kernel[static_cast<std::size_t>(d + r)] *
                       plane[static_cast<std::size_t>(y) * w + static_cast<std::size_t>(sx)];
            }
            tmp[static_cast<std::size_t>(y) * w + x] = acc;
        }
    for (std::uint32_t y = 0; y < h; ++y)
        for (std::uint32_t x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int d = -r; d <= r; ++d) {
                const long sy = reflect(static_cast<long>(y) + d, h);
                acc += kernel[static_cast<std::size_t>(d + r)] *
                       tmp[static_cast<std::size_t>(sy) * w + x];
            }
            plane[static_cast<std::size_t>(y) * w + x] =
                clamp_u8(static_cast<int>(std::llround(acc)));
        }
}

}  // namespace detail

/// Separable Gaussian blur, radius ceil(3*sigma), reflected borders, all
/// three planes. sigma <= 0 is the identity.
inline void gaussian_blur(FrameYuv& frame, double sigma) {
    if (sigma <= 0.0) return;
    const int r = static_cast<int>(std::ceil(3.0 * sigma));
    std::vector<double> kernel(static_cast<std::size_t>(2 * r + 1));
    double sum = 0.0;
    for (int d = -r; d <= r; ++d) {
        const double v = std::exp(-(static_cast<double>(d) * d) / (2.0 * sigma * sigma));
        kernel[static_cast<std::size_t>(d + r)] = v;
        sum += v;
    }
    for (double& v : kernel) v /= sum;
    detail::blur_plane(frame.y, frame.width, frame.height, kernel);
    detail::blur_plane(frame.u, frame.chroma_width(), frame.chroma_height(), kernel);
    detail::blur_plane(frame.v, frame.chroma_width(), frame.chroma_height(), kernel);
}

inline void check_spans(const std::vector<FreezeSpan>& spans, std::uint32_t frame_count) {
    std::vector<FreezeSpan> sorted = spans;
    std::sort(sorted.begin(), sorted.end(),
              [](const FreezeSpan& a, const FreezeSpan& b) { return a.start_frame < b.start_frame; });
    std::uint64_t prev_end = 0;
    bool first = true;
    for (const FreezeSpan& s : sorted) {
        if (s.length_frames == 0) throw SpanOutOfBounds("freeze span must be non-empty");
        const std::uint64_t last = static_cast<std::uint64_t>(s.start_frame) + s.length_frames;
        if (s.start_frame >= frame_count || last >= frame_count)
            throw SpanOutOfBounds("freeze span exceeds clip length");
        if (!first && s.start_frame <= prev_end)
            throw OverlappingSpans("freeze spans overlap");
        prev_end = last;
        first = false;
    }
}

/// Applies blur first, then replaces frames [start+1, start+length] of each
/// span with copies of frame[start].
inline void apply_degradation(std::vector<FrameYuv>& frames, const DegradationSpec& spec) {
    check_spans(spec.freeze_spans, static_cast<std::uint32_t>(frames.size()));
    if (spec.blur_sigma > 0.0)
        for (FrameYuv& f : frames) gaussian_blur(f, spec.blur_sigma);
    for (const FreezeSpan& s : spec.freeze_spans)
        for (std::uint32_t k = 1; k <= s.length_frames; ++k)
            frames[s.start_frame + k] = frames[s.start_frame];
}

inline std::vector<FrameYuv> degraded_copy(std::vector<FrameYuv> frames,
                                           const DegradationSpec& spec) {
    apply_degradation(frames, spec);
    return frames;
}

struct CorpusClip {
    std::string clip_id;
    std::filesystem::path path;
    PristineKind kind = PristineKind::gradient;
    DegradationSpec spec;
    double mos = 5.0;
    std::uint64_t recorded_bitrate_bps = 0;
};

struct BuildCorpusOptions {
    std::size_t n_clips = 300;
    std::uint64_t seed = 7;
    std::filesystem::path out_dir;
    std::uint32_t width = 64;
    std::uint32_t height = 64;
    Fraction fps{30, 1};
    std::uint32_t frame_count = 240;
    unsigned threads = 1;
};

struct CorpusResult {
    std::filesystem::path manifest_path;
    std::vector<CorpusClip> clips;
};

namespace detail {

/// Splits target_frozen frames into k spans separated by at least 2 plain
/// frames, with slack spread pseudo-randomly. Lengths shrink if the clip
/// cannot fit the request.
inline std::vector<FreezeSpan> make_spans(Rng& rng, std::uint32_t frame_count,
                                          std::uint32_t target_frozen, std::uint32_t k) {
    if (target_frozen == 0 || k == 0) return {};
    k = std::min(k, std::max(1u, target_frozen / 2));
    const std::uint32_t overhead = 2 * (k - 1);
    std::uint32_t budget = frame_count - 1;  // frame 0 is never frozen
    if (budget <= overhead + k) return {};
    std::uint32_t frozen = std::min(target_frozen, budget - overhead);

    std::vector<std::uint32_t> lengths(k, frozen / k);
    for (std::uint32_t i = 0; i < frozen % k; ++i) ++lengths[i];

    std::uint32_t slack = budget - frozen - overhead;
    std::vector<std::uint32_t> gaps(k + 1, 0);
    for (std::uint32_t i = 0; i < k + 1 && slack > 0; ++i) {
        const std::uint32_t g = static_cast<std::uint32_t>(rng.below(slack + 1));
        gaps[i] = g;
        slack -= g;
    }
    gaps[k] += slack;

    std::vector<FreezeSpan> spans;
    std::uint32_t cursor = gaps[0];  // first anchor frame index
    for (std::uint32_t i = 0; i < k; ++i) {
        if (lengths[i] == 0) continue;
        spans.push_back({cursor, lengths[i]});
        cursor += lengths[i] + 2 + gaps[i + 1];
    }
    return spans;
}

inline DegradationSpec spec_for_profile(NetworkProfile profile, Rng& rng,
                                        std::uint32_t frame_count) {
    DegradationSpec spec;
    spec.network_profile = profile;
    switch (profile) {
        case NetworkProfile::good:
            break;
        case NetworkProfile::average: {
            spec.blur_sigma = rng.uniform(1.0, 2.0);
            const double ff = rng.uniform(0.0, 0.20);
            const auto frozen = static_cast<std::uint32_t>(ff * frame_count);
            if (frozen >= 4) spec.freeze_spans = make_spans(rng, frame_count, frozen, 1);
            break;
        }
        case NetworkProfile::bad: {
            spec.blur_sigma = rng.uniform(3.0, 5.0);
            const double ff = rng.uniform(0.78, 0.92);
            const auto frozen = static_cast<std::uint32_t>(ff * frame_count);
            const std::uint32_t k = 2 + static_cast<std::uint32_t>(rng.below(2));
            spec.freeze_spans = make_spans(rng, frame_count, frozen, k);
            break;
        }
        case NetworkProfile::custom:
            break;
    }
    return spec;
}

}  // namespace detail

/// Generates a stratified corpus (~30/40/30 bad/average/good), writes Y4M
/// clips plus the training manifest, and returns per-clip ground truth.
///
/// The manifest's recorded_bitrate_bps is the toy coder's rate on the
/// *undegraded* clip, so PBR measures injected degradation rather than
/// content: pristine clips get PBR ~ 0, blurred ones strictly positive.
inline CorpusResult build_corpus(const BuildCorpusOptions& options) {
    if (options.n_clips < 10) throw Error("corpus needs at least 10 clips");
    if (options.out_dir.empty()) throw Error("corpus needs an output directory");
    std::filesystem::create_directories(options.out_dir);

    const std::size_t n = options.n_clips;
    const auto n_bad = static_cast<std::size_t>(std::llround(0.3 * static_cast<double>(n)));
    const auto n_good = static_cast<std::size_t>(std::llround(0.3 * static_cast<double>(n)));

    ClipMeta proto;
    proto.width = options.width;
    proto.height = options.height;
    proto.fps = options.fps;
    proto.frame_count = options.frame_count;

    CorpusResult result;
    result.clips.resize(n);
    parallel_for_index(n, options.threads, [&](std::size_t i) {
        const std::uint64_t clip_seed = Rng::derive(options.seed, i);
        Rng rng(Rng::derive(clip_seed, 0xdeca7));

        const NetworkProfile profile = i < n_bad               ? NetworkProfile::bad
                                       : i < n - n_good        ? NetworkProfile::average
                                                               : NetworkProfile::good;
        const auto kind = static_cast<PristineKind>(i % 4);
        PristineOptions popts;
        popts.velocity_px_per_frame = 1 + static_cast<int>(rng.below(4));

        std::vector<FrameYuv> frames = generate_pristine(kind, proto, clip_seed, popts);
        const double duration = static_cast<double>(proto.frame_count) * proto.fps.den /
                                proto.fps.num;
        const std::uint64_t b_rec = std::max<std::uint64_t>(
            1, static_cast<std::uint64_t>(std::llround(
                   static_cast<double>(intra_encode_size(frames)) / duration)));

        const DegradationSpec spec =
            detail::spec_for_profile(profile, rng, proto.frame_count);
        apply_degradation(frames, spec);

        char name[32];
        std::snprintf(name, sizeof name, "clip_%04zu", i);
        CorpusClip& clip = result.clips[i];
        clip.clip_id = name;
        clip.path = options.out_dir / (std::string(name) + ".y4m");
        clip.kind = kind;
        clip.spec = spec;
        clip.mos = synth_mos(spec, proto.frame_count);
        clip.recorded_bitrate_bps = b_rec;
        write_y4m(clip.path, frames, proto.fps);
    });

    // clip ids are zero-padded, so index order is already id order
    std::string manifest = "clip_id,path,recorded_bitrate_bps,mos\n";
    for (const CorpusClip& c : result.clips) {
        char mos_buf[32];
        std::snprintf(mos_buf, sizeof mos_buf, "%.9g", c.mos);
        manifest += c.clip_id + "," + c.path.filename().string() + "," +
                    std::to_string(c.recorded_bitrate_bps) + "," + mos_buf + "\n";
    }
    result.manifest_path = options.out_dir / "manifest.csv";
    atomic_write_file(result.manifest_path, manifest);

    nlohmann::json meta;
    meta["schema_version"] = kCorpusSchemaVersion;
    meta["generator_version"] = kExtractorVersion;
    meta["seed"] = options.seed;
    meta["n_clips"] = options.n_clips;
    meta["width"] = options.width;
    meta["height"] = options.height;
    meta["fps"] = {{"num", options.fps.num}, {"den", options.fps.den}};
    meta["frame_count"] = options.frame_count;
    nlohmann::json clips = nlohmann::json::array();
    for (const CorpusClip& c : result.clips) {
        nlohmann::json spans = nlohmann::json::array();
        for (const FreezeSpan& s : c.spec.freeze_spans)
            spans.push_back({{"start_frame", s.start_frame}, {"length_frames", s.length_frames}});
        clips.push_back({{"clip_id", c.clip_id},
                         {"kind", to_string(c.kind)},
                         {"profile", to_string(c.spec.network_profile)},
                         {"blur_sigma", c.spec.blur_sigma},
                         {"freeze_spans", std::move(spans)},
                         {"mos", c.mos},
                         {"recorded_bitrate_bps", c.recorded_bitrate_bps}});
    }
    meta["clips"] = std::move(clips);
    atomic_write_file(options.out_dir / "corpus_meta.json", meta.dump(2) + "\n");
    return result;
}

}  // namespace vqoe
