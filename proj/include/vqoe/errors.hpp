#pragma once

#include <stdexcept>

namespace vqoe {

// Base type for everything this library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// video I/O
struct MalformedHeader : Error { using Error::Error; };
struct UnsupportedChroma : Error { using Error::Error; };
struct TruncatedFrame : Error { using Error::Error; };
struct NonPositiveBitrate : Error { using Error::Error; };

// metrics
struct DimensionMismatch : Error { using Error::Error; };
struct EmptyClip : Error { using Error::Error; };
struct MissingRecordedBitrate : Error { using Error::Error; };

// datasets
struct MosOutOfRange : Error { using Error::Error; };
struct MissingFile : Error { using Error::Error; };
struct MalformedRow : Error { using Error::Error; };

// learning
struct DegenerateTargets : Error { using Error::Error; };
struct TooFewSamples : Error { using Error::Error; };
struct UntrainedModel : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct EmptyInput : Error { using Error::Error; };
struct SchemaVersionMismatch : Error { using Error::Error; };
struct CorruptModel : Error { using Error::Error; };

// synthesis
struct SpanOutOfBounds : Error { using Error::Error; };
struct OverlappingSpans : Error { using Error::Error; };

}  // namespace vqoe
