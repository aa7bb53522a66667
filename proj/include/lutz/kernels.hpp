#pragma once

// Whole-buffer pre-coding kernels. The serial versions drive the streaming
// state machines directly and serve as the reference; the OpenMP versions
// split the buffer at points where the state machine is idle, run each chunk
// independently, and concatenate. Both produce identical bytes.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "lutz/lut.hpp"

namespace lutz::kernels {

inline constexpr std::size_t kDefaultChunk = std::size_t{1} << 18;

[[nodiscard]] std::string precode_serial(std::span<const Base> bases);
[[nodiscard]] std::string precode_parallel(std::span<const Base> bases, std::size_t chunk = kDefaultChunk);

[[nodiscard]] std::vector<Base> predecode_serial(std::span<const std::uint8_t> precoded,
                                                 std::uint64_t max_bases = std::numeric_limits<std::uint64_t>::max());
[[nodiscard]] std::vector<Base> predecode_parallel(std::span<const std::uint8_t> precoded,
                                                   std::uint64_t max_bases = std::numeric_limits<std::uint64_t>::max(),
                                                   std::size_t chunk = kDefaultChunk);

/// Split points for precode_parallel: every interior point sits where the
/// encoder has no pending bases and no open N-run. Always starts at 0 and ends
/// at bases.size().
[[nodiscard]] std::vector<std::size_t> precode_split_points(std::span<const Base> bases, std::size_t chunk);

/// Split points for predecode_parallel: every interior point directly follows
/// a byte that cannot belong to an N-run escape (not '/', not a digit).
[[nodiscard]] std::vector<std::size_t> predecode_split_points(std::span<const std::uint8_t> precoded, std::size_t chunk);

}  // namespace lutz::kernels
