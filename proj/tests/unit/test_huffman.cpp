#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "huffman_oracle.hpp"
#include "lutz/error.hpp"
#include "lutz/huffman.hpp"

namespace lutz {
namespace {

using Freqs = std::array<std::uint64_t, 256>;

CodeLengths abc_code() {
    Freqs f{};
    f['a'] = 3;
    f['b'] = 1;
    f['c'] = 1;
    return build_code(f);
}

std::vector<std::uint8_t> bytes(std::string_view s) { return {s.begin(), s.end()}; }

TEST(Huffman, BuildExamples) {
    const CodeLengths abc = abc_code();
    EXPECT_EQ(abc.lengths['a'], 1);
    EXPECT_EQ(abc.lengths['b'], 2);
    EXPECT_EQ(abc.lengths['c'], 2);
    EXPECT_EQ(abc.symbol_count(), 3u);

    Freqs single{};
    single['x'] = 7;
    const CodeLengths x = build_code(single);
    EXPECT_EQ(x.lengths['x'], 1);
    EXPECT_EQ(x.symbol_count(), 1u);

    Freqs uniform{};
    for (unsigned s = 0; s < 64; ++s) uniform[s + 33] = 10;
    const CodeLengths u = build_code(uniform);
    for (unsigned s = 0; s < 64; ++s) EXPECT_EQ(u.lengths[s + 33], 6);
}

TEST(Huffman, EmptyAlphabet) {
    try {
        (void)build_code(Freqs{});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::EmptyAlphabet);
    }
}

TEST(Huffman, CanonicalCodewords) {
    const auto codes = canonical_codes(abc_code());
    EXPECT_EQ(codes['a'], 0b0u);
    EXPECT_EQ(codes['b'], 0b10u);
    EXPECT_EQ(codes['c'], 0b11u);
}

TEST(Huffman, EncodeExamples) {
    const CodeLengths code = abc_code();
    const BitStream aab = huff_encode(bytes("aab"), code);
    EXPECT_EQ(aab.bit_count, 4u);
    EXPECT_EQ(aab.bytes, std::vector<std::uint8_t>{0b00100000});
    EXPECT_EQ(huff_decode(aab, code, 3), bytes("aab"));

    const BitStream empty = huff_encode({}, code);
    EXPECT_EQ(empty.bit_count, 0u);
    EXPECT_TRUE(empty.bytes.empty());
    EXPECT_TRUE(huff_decode(empty, code, 0).empty());

    Freqs ab{};
    ab['a'] = 1;
    ab['b'] = 1;
    try {
        (void)huff_encode(bytes("abc"), build_code(ab));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::UncodableSymbol);
        EXPECT_EQ(e.offset(), 2u);
    }
}

TEST(Huffman, TruncatedStream) {
    const CodeLengths code = abc_code();
    const BitStream aab = huff_encode(bytes("aab"), code);
    try {
        (void)huff_decode(aab, code, 5);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::TruncatedStream);
    }
}

TEST(Huffman, SingleSymbolRoundTrip) {
    Freqs f{};
    f['q'] = 9;
    const CodeLengths code = build_code(f);
    const auto data = bytes("qqqqqqqqq");
    const BitStream bits = huff_encode(data, code);
    EXPECT_EQ(bits.bit_count, 9u);
    EXPECT_EQ(huff_decode(bits, code, 9), data);

    BitStream bogus{{0xFF}, 8};
    try {
        (void)huff_decode(bogus, code, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidCodeword);
    }
}

TEST(Huffman, OptimalAgainstBruteForceSmallAlphabets) {
    std::mt19937_64 rng(41);
    for (unsigned k = 1; k <= 6; ++k) {
        const auto candidates = testing::prefix_length_vectors(k, k);
        std::uniform_int_distribution<unsigned> total_dist(k, 20);
        for (int iter = 0; iter < 300; ++iter) {
            // Random composition of `total` into k positive counts.
            const unsigned total = total_dist(rng);
            std::vector<std::uint64_t> counts(k, 1);
            std::uniform_int_distribution<unsigned> which(0, k - 1);
            for (unsigned r = k; r < total; ++r) ++counts[which(rng)];

            Freqs f{};
            std::vector<std::uint8_t> data;
            for (unsigned s = 0; s < k; ++s) {
                const auto sym = static_cast<std::uint8_t>(100 + 7 * s);
                f[sym] = counts[s];
                data.insert(data.end(), counts[s], sym);
            }
            std::shuffle(data.begin(), data.end(), rng);
            const CodeLengths code = build_code(f);
            const BitStream bits = huff_encode(data, code);
            EXPECT_EQ(bits.bit_count, testing::brute_force_cost(counts, candidates));
            EXPECT_EQ(huff_decode(bits, code, data.size()), data);
        }
    }
}

TEST(Huffman, LengthCapUsesOptimalLimitedCode) {
    // Fibonacci weights give a maximally skewed tree.
    Freqs fib{};
    std::uint64_t a = 1, b = 1;
    for (unsigned s = 0; s < 30; ++s) {
        fib[s] = a;
        const std::uint64_t c = a + b;
        a = b;
        b = c;
    }
    const CodeLengths capped = build_code(fib);
    unsigned max_len = 0;
    for (const auto len : capped.lengths) max_len = std::max<unsigned>(max_len, len);
    EXPECT_EQ(max_len, kMaxCodeLength);
    EXPECT_EQ(kraft_sum_scaled(capped), 1u << kMaxCodeLength);

    // Against brute force with a small cap.
    for (unsigned cap = 3; cap <= 4; ++cap) {
        for (unsigned k = 5; k <= 6; ++k) {
            Freqs f{};
            std::vector<std::uint64_t> counts;
            std::uint64_t x = 1, y = 1;
            for (unsigned s = 0; s < k; ++s) {
                f[s] = x;
                counts.push_back(x);
                const std::uint64_t z = x + y;
                x = y;
                y = z;
            }
            const CodeLengths code = build_code_limited(f, cap);
            std::uint64_t cost = 0;
            for (unsigned s = 0; s < k; ++s) {
                EXPECT_LE(code.lengths[s], cap);
                cost += counts[s] * code.lengths[s];
            }
            EXPECT_EQ(cost, testing::brute_force_cost(counts, testing::prefix_length_vectors(k, cap)));
            EXPECT_EQ(kraft_sum_scaled(code), 1u << kMaxCodeLength);
        }
    }
}

TEST(Huffman, KraftAndDeterminism) {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<std::uint64_t> weight(0, 1000);
    for (int iter = 0; iter < 200; ++iter) {
        Freqs f{};
        for (auto& w : f) w = weight(rng) < 700 ? 0 : weight(rng);
        f[iter % 256] += 1;
        f[(iter + 1) % 256] += 1;
        const CodeLengths code = build_code(f);
        EXPECT_EQ(kraft_sum_scaled(code), 1u << kMaxCodeLength);
        EXPECT_EQ(build_code(f), code);
        for (unsigned s = 0; s < 256; ++s) EXPECT_EQ(code.lengths[s] != 0, f[s] != 0);
    }
}

TEST(Huffman, RejectsOversubscribedLengths) {
    CodeLengths bad;
    bad.lengths[0] = 1;
    bad.lengths[1] = 1;
    bad.lengths[2] = 1;
    try {
        (void)canonical_codes(bad);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidCodeLengths);
    }
}

}  // namespace
}  // namespace lutz
