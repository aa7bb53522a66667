#pragma once

#include <cstdint>
#include <span>

namespace lutz::testing {

// Bit-at-a-time CRC-32 straight from the polynomial definition (no tables).
inline std::uint32_t crc32_bitwise(std::span<const std::uint8_t> bytes) {
    std::uint32_t crc = 0xFFFFFFFFu;
    for (const std::uint8_t byte : bytes) {
        crc ^= byte;
        for (int bit = 0; bit < 8; ++bit) {
            const std::uint32_t mask = 0u - (crc & 1u);
            crc = (crc >> 1) ^ (0xEDB88320u & mask);
        }
    }
    return crc ^ 0xFFFFFFFFu;
}

}  // namespace lutz::testing
