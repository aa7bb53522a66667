#pragma once

// Order-0 canonical Huffman coding, code lengths capped at 15 bits.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace lutz {

inline constexpr unsigned kMaxCodeLength = 15;

/// Per-symbol code lengths; 0 means the symbol is absent from the code.
struct CodeLengths {
    std::array<std::uint8_t, 256> lengths{};

    [[nodiscard]] unsigned symbol_count() const noexcept;
    friend bool operator==(const CodeLengths&, const CodeLengths&) = default;
};

/// Packed MSB-first; trailing pad bits of the last byte are zero and never
/// decoded because `bit_count` is carried alongside.
struct BitStream {
    std::vector<std::uint8_t> bytes;
    std::uint64_t bit_count = 0;

    friend bool operator==(const BitStream&, const BitStream&) = default;
};

class BitWriter {
public:
    void put(std::uint32_t code, unsigned length);
    [[nodiscard]] BitStream take() &&;

private:
    BitStream stream_;
    std::uint64_t acc_ = 0;
    unsigned acc_bits_ = 0;
};

class BitReader {
public:
    explicit BitReader(const BitStream& stream) : stream_(&stream) {}
    /// Returns -1 once all `bit_count` bits have been read.
    [[nodiscard]] int get() noexcept;
    [[nodiscard]] std::uint64_t position() const noexcept { return pos_; }

private:
    const BitStream* stream_;
    std::uint64_t pos_ = 0;
};

/// Optimal length-limited prefix code. Ties between equal weights are broken
/// by symbol value, so equal frequency tables always give equal codes.
/// A lone symbol gets length 1. Throws EmptyAlphabet when all counts are zero.
[[nodiscard]] CodeLengths build_code(std::span<const std::uint64_t, 256> freqs);

/// build_code with an arbitrary cap; `max_len` must allow every present
/// symbol a codeword (2^max_len >= symbol count) and be at most 15.
[[nodiscard]] CodeLengths build_code_limited(std::span<const std::uint64_t, 256> freqs, unsigned max_len);

/// Canonical codewords in (length, symbol) order. Throws InvalidCodeLengths
/// when the lengths over-subscribe the code space or exceed 15.
[[nodiscard]] std::array<std::uint32_t, 256> canonical_codes(const CodeLengths& code);

/// Sum of 2^-len over present symbols, scaled by 2^15.
[[nodiscard]] std::uint64_t kraft_sum_scaled(const CodeLengths& code) noexcept;

[[nodiscard]] BitStream huff_encode(std::span<const std::uint8_t> data, const CodeLengths& code);
[[nodiscard]] std::vector<std::uint8_t> huff_decode(const BitStream& bits, const CodeLengths& code, std::uint64_t count);

[[nodiscard]] std::array<std::uint64_t, 256> byte_histogram(std::span<const std::uint8_t> data) noexcept;

}  // namespace lutz
