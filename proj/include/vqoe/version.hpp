#pragma once

namespace vqoe {

inline constexpr int kModelSchemaVersion = 1;
inline constexpr int kReportSchemaVersion = 1;
inline constexpr int kCorpusSchemaVersion = 1;
inline constexpr const char* kExtractorVersion = "vqoe-features/1";

}  // namespace vqoe
