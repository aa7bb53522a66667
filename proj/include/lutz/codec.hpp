#pragma once

// End-to-end pipeline: raw sequence bytes <-> version-1 container.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lutz/container.hpp"
#include "lutz/kernels.hpp"
#include "lutz/lz77.hpp"
#include "lutz/precoder.hpp"

namespace lutz {

struct EncodeOptions {
    NormalizationOptions normalization;
    bool stage2 = true;
    Lz77Params lz77;
    std::size_t chunk = kernels::kDefaultChunk;  ///< pre-coding split granularity
};

struct EncodeResult {
    std::vector<std::uint8_t> bytes;  ///< the complete container
    ContainerHeader header;
    std::uint64_t base_count = 0;
    std::size_t precoded_size = 0;
};

[[nodiscard]] EncodeResult encode_bases(std::span<const Base> bases, const EncodeOptions& opts = {},
                                        std::uint8_t extra_flags = 0);
[[nodiscard]] EncodeResult encode(std::span<const std::uint8_t> raw, const EncodeOptions& opts = {});

struct DecodeResult {
    ContainerHeader header;
    std::vector<Base> bases;
};

/// Throws BaseCountMismatch when the payload does not expand to exactly the
/// header's base count.
[[nodiscard]] DecodeResult decode(std::span<const std::uint8_t> container, std::size_t chunk = kernels::kDefaultChunk);

/// The pre-coded ASCII stream carried by a container, expanding stage 2 if present.
[[nodiscard]] std::string extract_precoded(const Container& container);

}  // namespace lutz
