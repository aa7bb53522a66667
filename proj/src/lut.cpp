#include "lutz/lut.hpp"

#include "lutz/error.hpp"

namespace lutz {

Triplet decode_code(std::uint8_t byte) {
    const std::uint8_t idx = lut_detail::kCodeToIndex[byte];
    if (idx == lut_detail::kNotACode) {
        throw Error(ErrorCode::InvalidCodeChar, "byte " + std::to_string(byte) + " is not a triplet code");
    }
    return Triplet::from_index(idx);
}

std::array<LutRow, 64> lut_rows() {
    std::array<LutRow, 64> rows{};
    for (unsigned i = 0; i < rows.size(); ++i) {
        const std::uint8_t code = lut_detail::kIndexToCode[i];
        rows[i] = LutRow{static_cast<char>(code), code, Triplet::from_index(i)};
    }
    return rows;
}

std::string dump_lut() {
    std::string out;
    for (const auto& row : lut_rows()) {
        out += row.character;
        out += '\t';
        out += std::to_string(row.ascii);
        out += '\t';
        out += row.triplet.str();
        out += '\n';
    }
    return out;
}

}  // namespace lutz
