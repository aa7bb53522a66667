#pragma once

// Exhaustive greedy LZ77 parse: at each position try every distance in the
// window and keep the longest match, preferring the smallest distance.

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "lutz/lz77.hpp"

namespace lutz::testing {

inline std::vector<Lz77Token> greedy_oracle(std::span<const std::uint8_t> data) {
    std::vector<Lz77Token> out;
    std::size_t pos = 0;
    while (pos < data.size()) {
        const std::size_t limit = std::min<std::size_t>(kLzMaxMatch, data.size() - pos);
        std::size_t best_len = 0;
        std::size_t best_dist = 0;
        const std::size_t max_dist = std::min<std::size_t>(pos, kLzWindow);
        for (std::size_t dist = 1; dist <= max_dist; ++dist) {
            std::size_t len = 0;
            while (len < limit && data[pos - dist + len] == data[pos + len]) ++len;
            if (len > best_len) {
                best_len = len;
                best_dist = dist;
            }
        }
        if (best_len >= kLzMinMatch) {
            out.push_back(Lz77Token::make_match(static_cast<std::uint32_t>(best_len), static_cast<std::uint32_t>(best_dist)));
            pos += best_len;
        } else {
            out.push_back(Lz77Token::make_literal(data[pos]));
            ++pos;
        }
    }
    return out;
}

}  // namespace lutz::testing
