#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>

#include "helpers.hpp"
#include "vqoe/frame.hpp"
#include "vqoe/rng.hpp"
#include "vqoe/y4m.hpp"

using namespace vqoe;

namespace {

std::string payload_for(std::uint32_t w, std::uint32_t h, int frames) {
    const std::size_t frame_bytes =
        static_cast<std::size_t>(w) * h + 2 * (static_cast<std::size_t>(w / 2) * (h / 2));
    std::string s;
    for (int i = 0; i < frames; ++i) {
        s += "FRAME\n";
        s.append(frame_bytes, '\x80');
    }
    return s;
}

}  // namespace

TEST_CASE("header transcribes into ClipMeta", "[y4m]") {
    std::istringstream in("YUV4MPEG2 W64 H64 F30:1 C420\n" + payload_for(64, 64, 90));
    const LoadedClip clip = read_y4m_stream(in, "probe");
    CHECK(clip.meta.width == 64);
    CHECK(clip.meta.height == 64);
    CHECK(clip.meta.fps == Fraction{30, 1});
    CHECK(clip.meta.frame_count == 90);
    CHECK(clip.frames.size() == 90);
    CHECK_FALSE(clip.meta.recorded_bitrate_bps.has_value());
    CHECK(clip.meta.clip_id == "probe");
    CHECK(clip.meta.duration_seconds() == Catch::Approx(3.0));
}

TEST_CASE("full HD header dimensions parse", "[y4m]") {
    std::istringstream in("YUV4MPEG2 W1920 H1280 F60:1 Ip A1:1 C420jpeg\n");
    Y4mReader reader(in);
    CHECK(reader.meta().width == 1920);
    CHECK(reader.meta().height == 1280);
    CHECK(reader.meta().fps == Fraction{60, 1});
    CHECK_FALSE(reader.next().has_value());
}

TEST_CASE("non-4:2:0 chroma is rejected", "[y4m]") {
    std::istringstream c444("YUV4MPEG2 W64 H64 F30:1 C444\n");
    CHECK_THROWS_AS(Y4mReader(c444), UnsupportedChroma);
    std::istringstream c422("YUV4MPEG2 W64 H64 F30:1 C422\n");
    CHECK_THROWS_AS(Y4mReader(c422), UnsupportedChroma);
    std::istringstream mono("YUV4MPEG2 W64 H64 F30:1 Cmono\n");
    CHECK_THROWS_AS(Y4mReader(mono), UnsupportedChroma);
}

TEST_CASE("malformed headers are rejected", "[y4m]") {
    auto expect_malformed = [](const std::string& header) {
        std::istringstream in(header);
        CHECK_THROWS_AS(Y4mReader(in), MalformedHeader);
    };
    expect_malformed("YUV4MPEG3 W64 H64 F30:1\n");       // bad magic
    expect_malformed("YUV4MPEG2 W64 H64\n");             // missing F
    expect_malformed("YUV4MPEG2 H64 F30:1\n");           // missing W
    expect_malformed("YUV4MPEG2 W64 H64 F30:0\n");       // zero denominator
    expect_malformed("YUV4MPEG2 W64 H64 F30\n");         // no colon
    expect_malformed("YUV4MPEG2 W63 H64 F30:1\n");       // odd width
    expect_malformed("YUV4MPEG2 W64 H42x F30:1\n");      // junk digits
    expect_malformed("YUV4MPEG2 W64 H64 F30:1 It\n");    // interlaced
    expect_malformed("YUV4MPEG2 W4 H64 F30:1\n");        // below 8x8
    expect_malformed("YUV4MPEG2 W64 H64 F30:1 Z9\n");    // unknown tag
}

TEST_CASE("truncated payloads are reported", "[y4m]") {
    std::string data = "YUV4MPEG2 W64 H64 F30:1 C420\n" + payload_for(64, 64, 2);
    data.resize(data.size() - 100);
    std::istringstream in(data);
    Y4mReader reader(in);
    CHECK(reader.next().has_value());
    CHECK_THROWS_AS(reader.next(), TruncatedFrame);

    std::istringstream garbled("YUV4MPEG2 W64 H64 F30:1\nFRAMEX\n");
    Y4mReader r2(garbled);
    CHECK_THROWS_AS(r2.next(), TruncatedFrame);
}

TEST_CASE("clips need at least two frames", "[y4m]") {
    std::istringstream one("YUV4MPEG2 W64 H64 F30:1 C420\n" + payload_for(64, 64, 1));
    CHECK_THROWS_AS(read_y4m_stream(one), EmptyClip);
    std::istringstream zero("YUV4MPEG2 W64 H64 F30:1 C420\n");
    CHECK_THROWS_AS(read_y4m_stream(zero), EmptyClip);
}

TEST_CASE("write/read round-trip is byte-identical", "[y4m]") {
    Rng rng(1234);
    for (const auto [w, h] : {std::pair{16u, 16u}, std::pair{20u, 12u}, std::pair{64u, 48u}}) {
        std::vector<FrameYuv> frames;
        for (int i = 0; i < 3; ++i) frames.push_back(testutil::random_frame(rng, w, h));
        std::ostringstream out;
        write_y4m(out, frames, Fraction{30000, 1001});
        std::istringstream in(out.str());
        const LoadedClip clip = read_y4m_stream(in);
        REQUIRE(clip.frames.size() == frames.size());
        CHECK(clip.meta.width == w);
        CHECK(clip.meta.height == h);
        CHECK(clip.meta.fps == Fraction{30000, 1001});
        for (std::size_t i = 0; i < frames.size(); ++i) CHECK(clip.frames[i] == frames[i]);
    }
}

TEST_CASE("frame order is stable across reads", "[y4m]") {
    Rng rng(77);
    std::vector<FrameYuv> frames;
    for (int i = 0; i < 5; ++i) frames.push_back(testutil::random_frame(rng, 16, 16));
    std::ostringstream out;
    write_y4m(out, frames, Fraction{30, 1});
    const std::string bytes = out.str();
    std::istringstream a(bytes), b(bytes);
    const LoadedClip ca = read_y4m_stream(a), cb = read_y4m_stream(b);
    for (std::size_t i = 0; i < frames.size(); ++i) {
        CHECK(ca.frames[i] == frames[i]);
        CHECK(cb.frames[i] == frames[i]);
    }
}

TEST_CASE("attach_recorded_bitrate sets only B_rec", "[y4m]") {
    ClipMeta meta;
    meta.width = 64;
    meta.height = 64;
    meta.fps = {30, 1};
    meta.frame_count = 90;
    meta.clip_id = "x";

    const ClipMeta two_m = attach_recorded_bitrate(meta, 2'000'000);
    CHECK(two_m.recorded_bitrate_bps == 2'000'000ull);
    CHECK(two_m.width == meta.width);
    CHECK(two_m.frame_count == meta.frame_count);
    CHECK(two_m.clip_id == meta.clip_id);

    const ClipMeta bad_case = attach_recorded_bitrate(meta, 512'000);
    CHECK(bad_case.recorded_bitrate_bps == 512'000ull);

    CHECK_THROWS_AS(attach_recorded_bitrate(meta, 0), NonPositiveBitrate);
}
