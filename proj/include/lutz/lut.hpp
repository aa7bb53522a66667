#pragma once

// Fixed 64-entry bijection between non-N base triplets and single printable
// ASCII bytes. Bytes 47 ('/') and 65/67/71/84 ('A','C','G','T') never appear
// as codes; the pre-coded stream uses them for N-run escapes and raw bases.

#include <array>
#include <cstdint>
#include <string>

namespace lutz {

enum class Base : char { A = 'A', C = 'C', G = 'G', T = 'T', N = 'N' };

[[nodiscard]] constexpr char to_char(Base b) noexcept { return static_cast<char>(b); }
[[nodiscard]] constexpr bool is_n(Base b) noexcept { return b == Base::N; }

/// Row/column order of the table: A, T, C, G.
[[nodiscard]] constexpr unsigned base_rank(Base b) noexcept {
    switch (b) {
        case Base::A: return 0;
        case Base::T: return 1;
        case Base::C: return 2;
        case Base::G: return 3;
        case Base::N: break;
    }
    return 4;
}

inline constexpr std::array<Base, 4> kRankedBases{Base::A, Base::T, Base::C, Base::G};

struct Triplet {
    Base b0{Base::A};
    Base b1{Base::A};
    Base b2{Base::A};

    /// 16*rank(b0) + 4*rank(b1) + rank(b2); only meaningful without N.
    [[nodiscard]] constexpr unsigned index() const noexcept {
        return 16 * base_rank(b0) + 4 * base_rank(b1) + base_rank(b2);
    }
    [[nodiscard]] static constexpr Triplet from_index(unsigned idx) noexcept {
        return {kRankedBases[(idx >> 4) & 3], kRankedBases[(idx >> 2) & 3], kRankedBases[idx & 3]};
    }
    [[nodiscard]] std::string str() const { return {to_char(b0), to_char(b1), to_char(b2)}; }

    friend constexpr bool operator==(const Triplet&, const Triplet&) = default;
};

struct CodeChar {
    std::uint8_t value{};
    friend constexpr bool operator==(const CodeChar&, const CodeChar&) = default;
};

namespace lut_detail {

inline constexpr std::array<std::uint8_t, 64> kIndexToCode{
    33,  98,  34,  100,  // AA*
    101, 102, 35,  104,  // AT*
    105, 106, 107, 108,  // AC*
    109, 110, 111, 112,  // AG*
    113, 114, 115, 36,   // TA*
    117, 118, 119, 120,  // TT*
    121, 122, 37,  66,   // TC*
    38,  68,  69,  70,   // TG*
    39,  72,  73,  74,   // CA*
    75,  76,  77,  78,   // CT*
    79,  80,  81,  82,   // CC*
    83,  40,  85,  86,   // CG*
    87,  88,  89,  90,   // GA*
    48,  49,  50,  51,   // GT*
    52,  53,  54,  55,   // GC*
    56,  57,  43,  45,   // GG*
};

inline constexpr std::uint8_t kNotACode = 0xFF;

consteval std::array<std::uint8_t, 256> make_code_to_index() {
    std::array<std::uint8_t, 256> inverse{};
    for (auto& v : inverse) v = kNotACode;
    for (unsigned i = 0; i < kIndexToCode.size(); ++i) inverse[kIndexToCode[i]] = static_cast<std::uint8_t>(i);
    return inverse;
}

inline constexpr std::array<std::uint8_t, 256> kCodeToIndex = make_code_to_index();

}  // namespace lut_detail

/// Precondition: no component of `t` is N.
[[nodiscard]] constexpr CodeChar encode_triplet(const Triplet& t) noexcept {
    return CodeChar{lut_detail::kIndexToCode[t.index() & 63]};
}

[[nodiscard]] constexpr bool is_code_char(std::uint8_t byte) noexcept {
    return lut_detail::kCodeToIndex[byte] != lut_detail::kNotACode;
}

/// Throws Error{InvalidCodeChar} for bytes outside the 64-byte code set.
[[nodiscard]] Triplet decode_code(std::uint8_t byte);

struct LutRow {
    char character;
    std::uint8_t ascii;
    Triplet triplet;
};

/// All 64 entries in table order (A,T,C,G-major).
[[nodiscard]] std::array<LutRow, 64> lut_rows();

/// One line per entry: "<char>\t<ascii>\t<bases>".
[[nodiscard]] std::string dump_lut();

}  // namespace lutz
