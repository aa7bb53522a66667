#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace lutz {

inline constexpr std::uint32_t kLzWindow = 32768;
inline constexpr std::uint32_t kLzMinMatch = 3;
inline constexpr std::uint32_t kLzMaxMatch = 258;
inline constexpr std::uint32_t kUnboundedChain = std::numeric_limits<std::uint32_t>::max();

struct Lz77Params {
    std::uint32_t max_chain = 128;  ///< candidates examined per position, >= 1
};

/// Literal when length == 0; otherwise a back-reference of `length` bytes
/// starting `distance` bytes before the current output position.
struct Lz77Token {
    std::uint16_t length = 0;
    std::uint16_t distance = 0;
    std::uint8_t literal = 0;

    [[nodiscard]] static constexpr Lz77Token make_literal(std::uint8_t b) noexcept { return {0, 0, b}; }
    [[nodiscard]] static constexpr Lz77Token make_match(std::uint32_t length, std::uint32_t distance) noexcept {
        return {static_cast<std::uint16_t>(length), static_cast<std::uint16_t>(distance), 0};
    }
    [[nodiscard]] constexpr bool is_match() const noexcept { return length != 0; }

    friend constexpr bool operator==(const Lz77Token&, const Lz77Token&) = default;
};

/// Greedy parse over a 32 KiB window using hash chains on 3-byte prefixes.
/// Among equally long candidates the smallest distance wins. The output is
/// a pure function of (data, params); the tables are reused across calls
/// without being cleared.
class Lz77Compressor {
public:
    explicit Lz77Compressor(Lz77Params params = {});

    [[nodiscard]] std::vector<Lz77Token> compress(std::span<const std::uint8_t> data);

private:
    Lz77Params params_;
    // Entries store epoch_ + position; anything below the current epoch is empty.
    std::vector<std::uint64_t> head_;
    std::vector<std::uint64_t> prev_;
    std::uint64_t epoch_ = 1;
};

[[nodiscard]] std::vector<Lz77Token> lz77_compress(std::span<const std::uint8_t> data, const Lz77Params& params = {});

/// Throws CorruptTokenStream on a token that violates the length/distance
/// bounds or reaches before the start of the output.
[[nodiscard]] std::vector<std::uint8_t> lz77_expand(std::span<const Lz77Token> tokens);

}  // namespace lutz
