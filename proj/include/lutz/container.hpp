#pragma once

// On-disk format, version 1. All integers little-endian.
//
//   offset size  field
//   0      4     magic "LUTZ"
//   4      1     version (1)
//   5      1     flags: bit0 stage 2 applied, bit1 FASTA headers stripped,
//                bit2 unknown bytes mapped to N; other bits zero
//   6      8     base count (including N)
//   14     4     CRC-32 of the payload
//   18     ...   payload
//
// Without stage 2 the payload is the pre-coded ASCII stream. With stage 2:
//
//   u32 token_count
//   ceil(token_count/8) bytes of token flags, LSB-first (0 literal, 1 match)
//   u32 literal_count
//   128 bytes of literal code lengths, symbol 2i in the low nibble of byte i,
//       symbol 2i+1 in the high nibble
//   u32 literal bit count, then ceil(bits/8) bytes of MSB-first codewords
//   3 bytes per match in token order: u16 distance-1, u8 length-3

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "lutz/huffman.hpp"
#include "lutz/lz77.hpp"

namespace lutz {

inline constexpr std::array<std::uint8_t, 4> kMagic{'L', 'U', 'T', 'Z'};
inline constexpr std::uint8_t kFormatVersion = 1;
inline constexpr std::size_t kHeaderSize = 18;

inline constexpr std::uint8_t kFlagStage2 = 0x01;
inline constexpr std::uint8_t kFlagFastaStripped = 0x02;
inline constexpr std::uint8_t kFlagUnknownAsN = 0x04;
inline constexpr std::uint8_t kKnownFlags = kFlagStage2 | kFlagFastaStripped | kFlagUnknownAsN;

struct ContainerHeader {
    std::uint8_t version = kFormatVersion;
    std::uint8_t flags = 0;
    std::uint64_t base_count = 0;
    std::uint32_t payload_crc = 0;

    [[nodiscard]] bool stage2() const noexcept { return (flags & kFlagStage2) != 0; }

    [[nodiscard]] static ContainerHeader for_payload(std::uint8_t flags, std::uint64_t base_count,
                                                     std::span<const std::uint8_t> payload) noexcept;

    friend bool operator==(const ContainerHeader&, const ContainerHeader&) = default;
};

struct Container {
    ContainerHeader header;
    std::vector<std::uint8_t> payload;

    friend bool operator==(const Container&, const Container&) = default;
};

/// Writes `header` verbatim followed by `payload`.
[[nodiscard]] std::vector<std::uint8_t> write_container(const ContainerHeader& header,
                                                        std::span<const std::uint8_t> payload);

/// Validates magic, version, reserved flag bits and payload CRC.
[[nodiscard]] Container read_container(std::span<const std::uint8_t> bytes);

struct MatchRecord {
    std::uint16_t distance_minus_one = 0;
    std::uint8_t length_minus_three = 0;

    friend bool operator==(const MatchRecord&, const MatchRecord&) = default;
};

struct Stage2Payload {
    std::uint32_t token_count = 0;
    std::vector<std::uint8_t> token_flags;
    std::uint32_t literal_count = 0;
    CodeLengths literal_code;
    BitStream literal_bits;
    std::vector<MatchRecord> matches;

    friend bool operator==(const Stage2Payload&, const Stage2Payload&) = default;
};

[[nodiscard]] Stage2Payload pack_tokens(std::span<const Lz77Token> tokens);
[[nodiscard]] std::vector<Lz77Token> unpack_tokens(const Stage2Payload& payload);

[[nodiscard]] std::vector<std::uint8_t> serialize_stage2(const Stage2Payload& payload);
[[nodiscard]] Stage2Payload parse_stage2(std::span<const std::uint8_t> bytes);

[[nodiscard]] std::array<std::uint8_t, 128> pack_code_lengths(const CodeLengths& code) noexcept;
[[nodiscard]] CodeLengths unpack_code_lengths(std::span<const std::uint8_t, 128> packed) noexcept;

/// LZ77 + Huffman over a byte stream, serialized as a stage-2 payload.
[[nodiscard]] std::vector<std::uint8_t> stage2_compress(std::span<const std::uint8_t> data, const Lz77Params& params = {});
[[nodiscard]] std::vector<std::uint8_t> stage2_expand(std::span<const std::uint8_t> payload);

}  // namespace lutz
