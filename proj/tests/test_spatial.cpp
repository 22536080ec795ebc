#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "helpers.hpp"
#include "vqoe/frame.hpp"
#include "vqoe/rng.hpp"
#include "vqoe/spatial.hpp"
#include "vqoe/synth.hpp"

using namespace vqoe;

namespace {

// filled in by freeze_fixtures (see test target docs); value printed by the
// implementation on a seeded input and pinned here
constexpr double kNoiseBaselineFixture = 0.0;  // placeholder until frozen

ClipMeta meta_64(std::uint32_t frame_count, Fraction fps = {30, 1}) {
    ClipMeta m;
    m.width = 64;
    m.height = 64;
    m.fps = fps;
    m.frame_count = frame_count;
    m.clip_id = "test";
    return m;
}

}  // namespace

TEST_CASE("all-zero blocks cost exactly the end-of-block code", "[spatial]") {
    // 10 mid-gray frames: level shift zeroes every sample, so all blocks
    // quantize to zero. Hand count: EOB = ue(0) + se(0) = 1 + 1 = 2 bits per
    // block; a 64x64 frame has 64 luma + 16 + 16 chroma blocks.
    const std::vector<FrameYuv> frames(10, make_frame(64, 64, 128, 128, 128));
    const std::uint64_t per_frame = 32 + (64 + 16 + 16) * 2;
    const std::uint64_t expected = 10 * per_frame;
    CHECK(intra_encode_size(frames, {.qp = 30}) == expected);
    CHECK(intra_encode_size(frames, {.qp = 0}) == expected);
    CHECK(intra_encode_size(frames, {.qp = 51}) == expected);
}

TEST_CASE("larger QP never increases the coded size", "[spatial]") {
    ClipMeta meta = meta_64(6);
    const auto frames = generate_pristine(PristineKind::noise_texture, meta, 99);
    const std::uint64_t at_30 = intra_encode_size(frames, {.qp = 30});
    const std::uint64_t at_40 = intra_encode_size(frames, {.qp = 40});
    CHECK(at_40 <= at_30);
    // and across the whole QP range
    std::uint64_t prev = intra_encode_size(frames, {.qp = 0});
    for (int qp = 5; qp <= 50; qp += 5) {
        const std::uint64_t cur = intra_encode_size(frames, {.qp = qp});
        CHECK(cur <= prev);
        prev = cur;
    }
}

TEST_CASE("blur strictly shrinks a sharp clip", "[spatial]") {
    ClipMeta meta = meta_64(4);
    const auto sharp = generate_pristine(PristineKind::noise_texture, meta, 5);
    DegradationSpec blur3;
    blur3.blur_sigma = 3.0;
    const auto blurred = degraded_copy(sharp, blur3);
    CHECK(intra_encode_size(blurred) < intra_encode_size(sharp));
}

TEST_CASE("coded size is monotone in blur radius", "[spatial]") {
    ClipMeta meta = meta_64(3);
    for (const auto kind : {PristineKind::gradient, PristineKind::talking_head_proxy}) {
        const auto pristine = generate_pristine(kind, meta, 11);
        std::uint64_t prev = intra_encode_size(pristine);
        for (double sigma : {1.0, 2.0, 3.0, 4.0, 5.0}) {
            DegradationSpec spec;
            spec.blur_sigma = sigma;
            const std::uint64_t size = intra_encode_size(degraded_copy(pristine, spec));
            CHECK(size <= prev);
            prev = size;
        }
    }
}

TEST_CASE("intra size ignores motion", "[spatial]") {
    ClipMeta meta = meta_64(64);
    const auto slow =
        generate_pristine(PristineKind::moving_checker, meta, 0, {.velocity_px_per_frame = 1});
    const auto fast =
        generate_pristine(PristineKind::moving_checker, meta, 0, {.velocity_px_per_frame = 4});
    const auto s1 = static_cast<double>(intra_encode_size(slow));
    const auto s4 = static_cast<double>(intra_encode_size(fast));
    CHECK(std::abs(s1 - s4) / s1 < 0.02);
}

TEST_CASE("coded size is deterministic", "[spatial]") {
    ClipMeta meta = meta_64(3);
    const auto frames = generate_pristine(PristineKind::noise_texture, meta, 21);
    CHECK(intra_encode_size(frames) == intra_encode_size(frames));
}

TEST_CASE("coder rejects bad input", "[spatial]") {
    CHECK_THROWS_AS(intra_encode_size({}), EmptyClip);
    std::vector<FrameYuv> mixed{make_frame(64, 64), make_frame(32, 32)};
    CHECK_THROWS_AS(intra_encode_size(mixed), DimensionMismatch);
    const std::vector<FrameYuv> ok(2, make_frame(16, 16));
    CHECK_THROWS_AS(intra_encode_size(ok, {.qp = 52}), Error);
    CHECK_THROWS_AS(intra_encode_size(ok, {.qp = -1}), Error);
}

TEST_CASE("PBR orientation and degenerate cases", "[spatial]") {
    // duration of exactly 1 s makes the intra rate an integer, so B_rec can
    // match it exactly and PBR must be exactly zero
    ClipMeta meta = meta_64(30);
    auto frames = generate_pristine(PristineKind::gradient, meta, 3);
    const std::uint64_t bits = intra_encode_size(frames);
    meta = attach_recorded_bitrate(meta, bits);
    const PbrResult equal = compute_pbr(frames, meta);
    CHECK(equal.pbr_percent == 0.0);
    CHECK(equal.intra_bitrate_bps == Catch::Approx(static_cast<double>(bits)));

    // intra above recorded clamps to zero rather than going negative
    const PbrResult clamped = compute_pbr(frames, attach_recorded_bitrate(meta, bits / 2));
    CHECK(clamped.pbr_percent == 0.0);

    ClipMeta no_rate = meta_64(30);
    CHECK_THROWS_AS(compute_pbr(frames, no_rate), MissingRecordedBitrate);
}

TEST_CASE("PBR separates pristine from heavily blurred", "[spatial]") {
    ClipMeta meta = meta_64(30);
    const auto pristine = generate_pristine(PristineKind::noise_texture, meta, 8);
    const std::uint64_t b_rec = intra_encode_size(pristine);  // 1 s clip
    meta = attach_recorded_bitrate(meta, b_rec);

    CHECK(compute_pbr(pristine, meta).pbr_percent < 5.0);

    DegradationSpec heavy;
    heavy.blur_sigma = 4.0;
    const auto blurred = degraded_copy(pristine, heavy);
    CHECK(compute_pbr(blurred, meta).pbr_percent > 20.0);
}

TEST_CASE("DCT blur baseline saturates on flat content", "[spatial]") {
    const std::vector<FrameYuv> flat(3, make_frame(64, 64, 200, 100, 90));
    CHECK(dct_blur_baseline(flat) == 1.0);
    CHECK_THROWS_AS(dct_blur_baseline({}), EmptyClip);
}

TEST_CASE("DCT blur baseline on white noise stays low", "[spatial]") {
    Rng rng(2024);
    std::vector<FrameYuv> noise;
    for (int i = 0; i < 4; ++i) noise.push_back(testutil::random_frame(rng, 64, 64));
    const double score = dct_blur_baseline(noise);
    CHECK(score < 0.5);
    // regression fixture, frozen from this implementation's first run
    CHECK(score == Catch::Approx(kNoiseBaselineFixture).margin(1e-12));
}

TEST_CASE("DCT blur baseline confuses content with quality", "[spatial]") {
    // Characterization of the known failure: a pristine smooth clip scores
    // blurrier than a genuinely blurred textured clip, inverting the
    // quality ordering.
    FrameYuv smooth = make_frame(64, 64);
    for (std::uint32_t y = 0; y < 64; ++y)
        for (std::uint32_t x = 0; x < 64; ++x)
            smooth.y[y * 64 + x] = static_cast<std::uint8_t>(60 + x + y / 2);
    const std::vector<FrameYuv> smooth_pristine(3, smooth);

    ClipMeta meta = meta_64(3);
    DegradationSpec spec;
    spec.blur_sigma = 2.0;
    const auto blurred_noise =
        degraded_copy(generate_pristine(PristineKind::noise_texture, meta, 4), spec);
    CHECK(dct_blur_baseline(smooth_pristine) > dct_blur_baseline(blurred_noise));
}
