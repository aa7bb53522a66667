#include "lutz/error.hpp"

namespace lutz {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidCodeChar: return "InvalidCodeChar";
        case ErrorCode::UnknownSymbol: return "UnknownSymbol";
        case ErrorCode::CorruptPrecoded: return "CorruptPrecoded";
        case ErrorCode::MalformedNRun: return "MalformedNRun";
        case ErrorCode::NRunOverflow: return "NRunOverflow";
        case ErrorCode::CorruptTokenStream: return "CorruptTokenStream";
        case ErrorCode::EmptyAlphabet: return "EmptyAlphabet";
        case ErrorCode::UncodableSymbol: return "UncodableSymbol";
        case ErrorCode::TruncatedStream: return "TruncatedStream";
        case ErrorCode::InvalidCodeword: return "InvalidCodeword";
        case ErrorCode::InvalidCodeLengths: return "InvalidCodeLengths";
        case ErrorCode::BadMagic: return "BadMagic";
        case ErrorCode::UnsupportedVersion: return "UnsupportedVersion";
        case ErrorCode::ReservedFlagBits: return "ReservedFlagBits";
        case ErrorCode::ChecksumMismatch: return "ChecksumMismatch";
        case ErrorCode::TruncatedContainer: return "TruncatedContainer";
        case ErrorCode::BaseCountMismatch: return "BaseCountMismatch";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::EntryUnreadable: return "EntryUnreadable";
        case ErrorCode::ManifestSyntax: return "ManifestSyntax";
        case ErrorCode::RoundTripFailure: return "RoundTripFailure";
        case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

}  // namespace lutz
