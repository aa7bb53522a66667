#include "lutz/lz77.hpp"

#include <algorithm>
#include <string>

#include "lutz/error.hpp"

namespace lutz {

namespace {

constexpr unsigned kHashBits = 15;
constexpr std::uint32_t kHashSize = 1u << kHashBits;
constexpr std::uint32_t kWindowMask = kLzWindow - 1;

[[nodiscard]] inline std::uint32_t hash3(const std::uint8_t* p) noexcept {
    const std::uint32_t key = (std::uint32_t{p[0]} << 16) | (std::uint32_t{p[1]} << 8) | p[2];
    return (key * 2654435761u) >> (32 - kHashBits);
}

}  // namespace

Lz77Compressor::Lz77Compressor(Lz77Params params)
    : params_(params), head_(kHashSize, 0), prev_(kLzWindow, 0) {
    params_.max_chain = std::max<std::uint32_t>(params_.max_chain, 1);
}

std::vector<Lz77Token> Lz77Compressor::compress(std::span<const std::uint8_t> data) {
    const std::size_t n = data.size();
    const std::uint8_t* bytes = data.data();
    const std::uint64_t epoch = epoch_;
    epoch_ += n + 1;

    auto insert = [&](std::size_t pos) {
        const std::uint32_t h = hash3(bytes + pos);
        prev_[pos & kWindowMask] = head_[h];
        head_[h] = epoch + pos;
    };

    std::vector<Lz77Token> tokens;
    tokens.reserve(n / 2 + 1);

    std::size_t pos = 0;
    while (pos < n) {
        std::uint32_t best_len = 0;
        std::uint32_t best_dist = 0;
        if (pos + kLzMinMatch <= n) {
            const auto limit = static_cast<std::uint32_t>(std::min<std::size_t>(kLzMaxMatch, n - pos));
            std::uint64_t ticket = head_[hash3(bytes + pos)];
            std::uint32_t budget = params_.max_chain;
            while (ticket >= epoch && budget-- > 0) {
                const std::size_t cand = ticket - epoch;
                const std::size_t dist = pos - cand;
                if (dist > kLzWindow) break;
                const std::uint8_t* a = bytes + cand;
                const std::uint8_t* b = bytes + pos;
                if (best_len == 0 || a[best_len] == b[best_len]) {
                    std::uint32_t len = 0;
                    while (len < limit && a[len] == b[len]) ++len;
                    if (len > best_len) {
                        best_len = len;
                        best_dist = static_cast<std::uint32_t>(dist);
                        if (len == limit) break;
                    }
                }
                const std::uint64_t next = prev_[cand & kWindowMask];
                if (next >= ticket) break;
                ticket = next;
            }
        }

        if (best_len >= kLzMinMatch) {
            tokens.push_back(Lz77Token::make_match(best_len, best_dist));
            for (const std::size_t end = pos + best_len; pos < end; ++pos) {
                if (pos + kLzMinMatch <= n) insert(pos);
            }
        } else {
            tokens.push_back(Lz77Token::make_literal(bytes[pos]));
            if (pos + kLzMinMatch <= n) insert(pos);
            ++pos;
        }
    }
    return tokens;
}

std::vector<Lz77Token> lz77_compress(std::span<const std::uint8_t> data, const Lz77Params& params) {
    Lz77Compressor compressor(params);
    return compressor.compress(data);
}

std::vector<std::uint8_t> lz77_expand(std::span<const Lz77Token> tokens) {
    std::vector<std::uint8_t> out;
    out.reserve(tokens.size() * 2);
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const Lz77Token& t = tokens[i];
        if (!t.is_match()) {
            out.push_back(t.literal);
            continue;
        }
        if (t.length < kLzMinMatch || t.length > kLzMaxMatch || t.distance == 0 || t.distance > kLzWindow ||
            t.distance > out.size()) {
            throw Error(ErrorCode::CorruptTokenStream,
                        "token " + std::to_string(i) + " references (length " + std::to_string(t.length) + ", distance " +
                            std::to_string(t.distance) + ") with " + std::to_string(out.size()) + " bytes produced",
                        i);
        }
        std::size_t from = out.size() - t.distance;
        for (std::uint32_t k = 0; k < t.length; ++k) {
            const std::uint8_t b = out[from++];
            out.push_back(b);
        }
    }
    return out;
}

}  // namespace lutz
