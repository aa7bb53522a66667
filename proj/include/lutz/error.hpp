#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lutz {

enum class ErrorCode {
    InvalidCodeChar,
    UnknownSymbol,
    CorruptPrecoded,
    MalformedNRun,
    NRunOverflow,
    CorruptTokenStream,
    EmptyAlphabet,
    UncodableSymbol,
    TruncatedStream,
    InvalidCodeword,
    InvalidCodeLengths,
    BadMagic,
    UnsupportedVersion,
    ReservedFlagBits,
    ChecksumMismatch,
    TruncatedContainer,
    BaseCountMismatch,
    DivisionByZero,
    EntryUnreadable,
    ManifestSyntax,
    RoundTripFailure,
    Io,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. `offset()` is set when the error can
/// be pinned to a byte position in the input being processed.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what, std::optional<std::uint64_t> offset = std::nullopt)
        : std::runtime_error(what), code_(code), offset_(offset) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }
    [[nodiscard]] std::optional<std::uint64_t> offset() const noexcept { return offset_; }

private:
    ErrorCode code_;
    std::optional<std::uint64_t> offset_;
};

}  // namespace lutz
