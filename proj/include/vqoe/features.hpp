#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "vqoe/errors.hpp"
#include "vqoe/frame.hpp"
#include "vqoe/spatial.hpp"
#include "vqoe/temporal.hpp"
#include "vqoe/util.hpp"
#include "vqoe/version.hpp"
#include "vqoe/y4m.hpp"

namespace vqoe {

inline constexpr std::array<const char*, 4> kFeatureNames = {
    "pbr_percent", "freeze_ratio", "num_freezes", "total_freeze_seconds"};

/// The 4-dimensional per-clip feature vector, in the fixed model order.
struct QoeFeatures {
    double pbr_percent = 0.0;
    double freeze_ratio = 0.0;
    double num_freezes = 0.0;
    double total_freeze_seconds = 0.0;

    std::array<double, 4> as_array() const {
        return {pbr_percent, freeze_ratio, num_freezes, total_freeze_seconds};
    }
    static QoeFeatures from_array(const std::array<double, 4>& a) {
        return {a[0], a[1], a[2], a[3]};
    }
    bool operator==(const QoeFeatures&) const = default;
};

inline void to_json(nlohmann::json& j, const QoeFeatures& f) {
    j = nlohmann::json{{"pbr_percent", f.pbr_percent},
                       {"freeze_ratio", f.freeze_ratio},
                       {"num_freezes", f.num_freezes},
                       {"total_freeze_seconds", f.total_freeze_seconds}};
}

inline void from_json(const nlohmann::json& j, QoeFeatures& f) {
    j.at("pbr_percent").get_to(f.pbr_percent);
    j.at("freeze_ratio").get_to(f.freeze_ratio);
    j.at("num_freezes").get_to(f.num_freezes);
    j.at("total_freeze_seconds").get_to(f.total_freeze_seconds);
}

/// One training unit: features plus the clip's ground-truth MOS.
struct MosSample {
    std::string clip_id;
    QoeFeatures features;
    double mos = 0.0;
};

inline void check_mos(double mos, const std::string& where) {
    if (!(mos >= 1.0 && mos <= 5.0))
        throw MosOutOfRange("MOS must be in [1, 5] (" + where + ")");
}

/// Runs both metric passes over an in-memory frame buffer and assembles the
/// feature vector. meta must carry the recorded bitrate.
inline QoeFeatures extract_features(std::span<const FrameYuv> frames, const ClipMeta& meta,
                                    const IntraCoderConfig& coder = {},
                                    const DecimateThresholds& thresholds = {}) {
    const PbrResult pbr = compute_pbr(frames, meta, coder);
    const TemporalResult temporal = detect_freezes(frames, meta, thresholds);
    QoeFeatures f;
    f.pbr_percent = pbr.pbr_percent;
    f.freeze_ratio = temporal.freeze_ratio;
    f.num_freezes = static_cast<double>(temporal.num_freezes);
    f.total_freeze_seconds = temporal.total_freeze_seconds;
    return f;
}

struct ManifestRow {
    std::string clip_id;
    std::filesystem::path path;
    std::uint64_t recorded_bitrate_bps = 0;
    double mos = 0.0;
};

/// Parses the dataset manifest: a CSV with header
/// clip_id,path,recorded_bitrate_bps,mos. Paths are resolved relative to
/// the manifest's directory. Fields must not contain commas.
inline std::vector<ManifestRow> load_manifest(const std::filesystem::path& manifest_path) {
    std::ifstream in(manifest_path);
    if (!in) throw MissingFile("cannot open manifest: " + manifest_path.string());
    const std::filesystem::path base = manifest_path.parent_path();

    auto split = [](const std::string& line) {
        std::vector<std::string> fields;
        std::size_t start = 0;
        for (;;) {
            const std::size_t comma = line.find(',', start);
            if (comma == std::string::npos) {
                fields.push_back(line.substr(start));
                return fields;
            }
            fields.push_back(line.substr(start, comma - start));
            start = comma + 1;
        }
    };

    std::string line;
    if (!std::getline(in, line)) throw MalformedRow("manifest is empty (row 0)");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "clip_id,path,recorded_bitrate_bps,mos")
        throw MalformedRow("bad manifest header (row 0): " + line);

    std::vector<ManifestRow> rows;
    for (std::size_t idx = 1; std::getline(in, line); ++idx) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split(line);
        const std::string where = "row " + std::to_string(idx);
        if (fields.size() != 4)
            throw MalformedRow("expected 4 fields (" + where + "): " + line);
        ManifestRow row;
        row.clip_id = fields[0];
        if (row.clip_id.empty()) throw MalformedRow("empty clip_id (" + where + ")");
        std::filesystem::path p = fields[1];
        row.path = p.is_absolute() ? p : base / p;
        try {
            std::size_t pos = 0;
            row.recorded_bitrate_bps = std::stoull(fields[2], &pos);
            if (pos != fields[2].size()) throw std::invalid_argument(fields[2]);
            pos = 0;
            row.mos = std::stod(fields[3], &pos);
            if (pos != fields[3].size()) throw std::invalid_argument(fields[3]);
        } catch (const std::logic_error&) {
            throw MalformedRow("non-numeric field (" + where + "): " + line);
        }
        if (row.recorded_bitrate_bps == 0)
            throw MalformedRow("recorded_bitrate_bps must be > 0 (" + where + ")");
        check_mos(row.mos, where);
        rows.push_back(std::move(row));
    }
    return rows;
}

struct DatasetOptions {
    IntraCoderConfig coder;
    DecimateThresholds thresholds;
    bool use_cache = true;
    unsigned threads = 1;
};

namespace detail {

inline bool is_default_extraction(const DatasetOptions& opts) {
    const DecimateThresholds def;
    return opts.coder.qp == IntraCoderConfig{}.qp && opts.thresholds.hi == def.hi &&
           opts.thresholds.lo == def.lo && opts.thresholds.frac == def.frac;
}

inline std::filesystem::path cache_path_for(const std::filesystem::path& clip) {
    return clip.string() + ".features.json";
}

/// Sidecar cache hit requires matching clip_id, extractor version and B_rec
/// (PBR depends on it). Anything unreadable is treated as a miss.
inline std::optional<QoeFeatures> try_read_cache(const std::filesystem::path& clip,
                                                 const std::string& clip_id,
                                                 std::uint64_t recorded_bitrate_bps) {
    std::ifstream in(cache_path_for(clip));
    if (!in) return std::nullopt;
    try {
        const nlohmann::json j = nlohmann::json::parse(in);
        if (j.at("extractor_version").get<std::string>() != kExtractorVersion)
            return std::nullopt;
        if (j.at("clip_id").get<std::string>() != clip_id) return std::nullopt;
        if (j.value("recorded_bitrate_bps", std::uint64_t{0}) != recorded_bitrate_bps)
            return std::nullopt;
        return j.get<QoeFeatures>();
    } catch (const nlohmann::json::exception&) {
        return std::nullopt;
    }
}

inline void write_cache(const std::filesystem::path& clip, const std::string& clip_id,
                        std::uint64_t recorded_bitrate_bps, const QoeFeatures& f) {
    nlohmann::json j = f;
    j["clip_id"] = clip_id;
    j["extractor_version"] = kExtractorVersion;
    j["recorded_bitrate_bps"] = recorded_bitrate_bps;
    atomic_write_file(cache_path_for(clip), j.dump(2) + "\n");
}

}  // namespace detail

/// Features for a single manifest row, consulting the sidecar cache.
inline QoeFeatures extract_row_features(const ManifestRow& row, const DatasetOptions& opts = {}) {
    const bool cacheable = opts.use_cache && detail::is_default_extraction(opts);
    if (cacheable)
        if (auto hit = detail::try_read_cache(row.path, row.clip_id, row.recorded_bitrate_bps))
            return *hit;
    LoadedClip clip = load_y4m(row.path);
    clip.meta = attach_recorded_bitrate(clip.meta, row.recorded_bitrate_bps);
    const QoeFeatures f = extract_features(clip.frames, clip.meta, opts.coder, opts.thresholds);
    if (cacheable) detail::write_cache(row.path, row.clip_id, row.recorded_bitrate_bps, f);
    return f;
}

/// Loads a manifest and extracts (or reads cached) features per clip.
/// Extraction is independent per clip and runs on opts.threads workers;
/// sample order always matches manifest order.
inline std::vector<MosSample> load_dataset(const std::filesystem::path& manifest_path,
                                           const DatasetOptions& opts = {}) {
    const std::vector<ManifestRow> rows = load_manifest(manifest_path);
    std::vector<MosSample> samples(rows.size());
    parallel_for_index(rows.size(), opts.threads, [&](std::size_t i) {
        samples[i].clip_id = rows[i].clip_id;
        samples[i].mos = rows[i].mos;
        samples[i].features = extract_row_features(rows[i], opts);
    });
    return samples;
}

}  // namespace vqoe
