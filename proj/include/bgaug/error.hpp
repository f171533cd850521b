#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bgaug {

enum class ErrorCode {
    OutOfBounds,
    DimensionMismatch,
    InvalidArgument,
    NonPositiveSmoothing,
    EmptySequence,
    EmptyInput,
    FrameIdOutOfRange,
    MissingDonor,
    EmptyDonorPool,
    MismatchedCategories,
    UnknownFold,
    MissingDirectory,
    MissingFile,
    CorruptImage,
    InconsistentFrameCount,
    UnknownLabel,
    BadMagic,
    VersionUnsupported,
    TruncatedFile,
    FormatMismatch,
    InvalidConfig,
    Io,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so that
/// the CLI and bindings can map it without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace bgaug
