#pragma once

#include <filesystem>
#include <fstream>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "vqoe/errors.hpp"
#include "vqoe/frame.hpp"

namespace vqoe {

/// Streaming YUV4MPEG2 reader, 4:2:0 progressive only.
///
/// Header tags W, H, F are required; C must be a 420 variant or absent;
/// I must be "Ip" or absent; A and X tags are ignored. Odd dimensions are
/// rejected because 4:2:0 chroma geometry would be undefined.
class Y4mReader {
public:
    explicit Y4mReader(std::istream& in, std::string clip_id = "")
        : in_(in) {
        parse_header();
        meta_.clip_id = std::move(clip_id);
    }

    /// Header-derived metadata. frame_count stays 0 until the stream is
    /// drained; load_y4m fills it in.
    const ClipMeta& meta() const { return meta_; }

    /// Next frame in presentation order, or nullopt at end of stream.
    std::optional<FrameYuv> next() {
        std::string line;
        if (!read_line(line)) return std::nullopt;
        if (line.rfind("FRAME", 0) != 0)
            throw TruncatedFrame("expected FRAME marker, got: " + line.substr(0, 32));
        if (line.size() > 5 && line[5] != ' ')
            throw TruncatedFrame("bad FRAME marker");
        FrameYuv f = make_frame(meta_.width, meta_.height);
        read_plane(f.y);
        read_plane(f.u);
        read_plane(f.v);
        return f;
    }

private:
    bool read_line(std::string& line) {
        line.clear();
        char c;
        while (in_.get(c)) {
            if (c == '\n') return true;
            line.push_back(c);
            if (line.size() > 2048) throw MalformedHeader("header line too long");
        }
        if (!line.empty()) throw TruncatedFrame("unterminated line at end of stream");
        return false;
    }

    void read_plane(std::vector<std::uint8_t>& plane) {
        in_.read(reinterpret_cast<char*>(plane.data()),
                 static_cast<std::streamsize>(plane.size()));
        if (static_cast<std::size_t>(in_.gcount()) != plane.size())
            throw TruncatedFrame("frame payload shorter than declared size");
    }

    void parse_header() {
        std::string line;
        if (!read_line(line)) throw MalformedHeader("empty stream");
        std::istringstream tokens(line);
        std::string tok;
        tokens >> tok;
        if (tok != "YUV4MPEG2") throw MalformedHeader("bad magic: " + tok.substr(0, 16));

        bool have_w = false, have_h = false, have_f = false;
        while (tokens >> tok) {
            switch (tok[0]) {
                case 'W':
                    meta_.width = parse_uint(tok.substr(1), "W");
                    have_w = true;
                    break;
                case 'H':
                    meta_.height = parse_uint(tok.substr(1), "H");
                    have_h = true;
                    break;
                case 'F': {
                    const auto colon = tok.find(':');
                    if (colon == std::string::npos || colon < 2)
                        throw MalformedHeader("bad F tag: " + tok);
                    meta_.fps.num = parse_uint(tok.substr(1, colon - 1), "F");
                    meta_.fps.den = parse_uint(tok.substr(colon + 1), "F");
                    have_f = true;
                    break;
                }
                case 'C':
                    if (tok.rfind("C420", 0) != 0)
                        throw UnsupportedChroma("only 4:2:0 is supported, got " + tok);
                    break;
                case 'I':
                    if (tok != "Ip") throw MalformedHeader("interlaced input not supported: " + tok);
                    break;
                case 'A':
                case 'X':
                    break;  // aspect ratio and comments carry no pixel data
                default:
                    throw MalformedHeader("unknown header tag: " + tok);
            }
        }
        if (!have_w || !have_h || !have_f)
            throw MalformedHeader("header must carry W, H and F tags");
        if (meta_.fps.num == 0 || meta_.fps.den == 0)
            throw MalformedHeader("frame rate must be positive");
        if (meta_.width < 8 || meta_.height < 8)
            throw MalformedHeader("dimensions must be at least 8x8");
        if ((meta_.width % 2) != 0 || (meta_.height % 2) != 0)
            throw MalformedHeader("4:2:0 requires even dimensions");
    }

    static std::uint32_t parse_uint(const std::string& s, const char* tag) {
        if (s.empty()) throw MalformedHeader(std::string("empty ") + tag + " tag");
        std::uint64_t v = 0;
        for (char c : s) {
            if (c < '0' || c > '9')
                throw MalformedHeader(std::string("non-numeric ") + tag + " tag: " + s);
            v = v * 10 + static_cast<std::uint64_t>(c - '0');
            if (v > 0xffffffffull) throw MalformedHeader(std::string(tag) + " tag out of range");
        }
        return static_cast<std::uint32_t>(v);
    }

    std::istream& in_;
    ClipMeta meta_;
};

struct LoadedClip {
    ClipMeta meta;
    std::vector<FrameYuv> frames;
};

/// Reads a whole stream; meta.frame_count reflects the payload.
/// Clips need at least two frames (temporal metrics read consecutive pairs).
inline LoadedClip read_y4m_stream(std::istream& in, std::string clip_id = "") {
    Y4mReader reader(in, std::move(clip_id));
    LoadedClip clip;
    clip.meta = reader.meta();
    while (auto f = reader.next()) clip.frames.push_back(std::move(*f));
    clip.meta.frame_count = static_cast<std::uint32_t>(clip.frames.size());
    if (clip.meta.frame_count < 2)
        throw EmptyClip("clip has fewer than 2 frames");
    return clip;
}

inline LoadedClip load_y4m(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MissingFile("cannot open video file: " + path.string());
    return read_y4m_stream(in, path.stem().string());
}

inline void write_y4m(std::ostream& out, std::span<const FrameYuv> frames, Fraction fps) {
    if (frames.empty()) throw EmptyClip("nothing to write");
    const FrameYuv& first = frames.front();
    out << "YUV4MPEG2 W" << first.width << " H" << first.height << " F" << fps.num << ':'
        << fps.den << " Ip A1:1 C420\n";
    for (const FrameYuv& f : frames) {
        if (f.width != first.width || f.height != first.height)
            throw DimensionMismatch("frames in a clip must share dimensions");
        out << "FRAME\n";
        out.write(reinterpret_cast<const char*>(f.y.data()),
                  static_cast<std::streamsize>(f.y.size()));
        out.write(reinterpret_cast<const char*>(f.u.data()),
                  static_cast<std::streamsize>(f.u.size()));
        out.write(reinterpret_cast<const char*>(f.v.data()),
                  static_cast<std::streamsize>(f.v.size()));
    }
    if (!out) throw Error("y4m write failed");
}

inline void write_y4m(const std::filesystem::path& path, std::span<const FrameYuv> frames,
                      Fraction fps) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot create file: " + path.string());
    write_y4m(out, frames, fps);
}

}  // namespace vqoe
