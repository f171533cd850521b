#include "bgaug/error.hpp"

namespace bgaug {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::OutOfBounds: return "OutOfBounds";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonPositiveSmoothing: return "NonPositiveSmoothing";
    case ErrorCode::EmptySequence: return "EmptySequence";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::FrameIdOutOfRange: return "FrameIdOutOfRange";
    case ErrorCode::MissingDonor: return "MissingDonor";
    case ErrorCode::EmptyDonorPool: return "EmptyDonorPool";
    case ErrorCode::MismatchedCategories: return "MismatchedCategories";
    case ErrorCode::UnknownFold: return "UnknownFold";
    case ErrorCode::MissingDirectory: return "MissingDirectory";
    case ErrorCode::MissingFile: return "MissingFile";
    case ErrorCode::CorruptImage: return "CorruptImage";
    case ErrorCode::InconsistentFrameCount: return "InconsistentFrameCount";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::BadMagic: return "BadMagic";
    case ErrorCode::VersionUnsupported: return "VersionUnsupported";
    case ErrorCode::TruncatedFile: return "TruncatedFile";
    case ErrorCode::FormatMismatch: return "FormatMismatch";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

} // namespace bgaug
