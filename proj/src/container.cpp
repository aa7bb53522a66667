#include "lutz/container.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "lutz/crc32.hpp"
#include "lutz/error.hpp"

namespace lutz {

namespace {

void put_le(std::vector<std::uint8_t>& out, std::uint64_t value, unsigned width) {
    for (unsigned i = 0; i < width; ++i) out.push_back(static_cast<std::uint8_t>(value >> (8 * i)));
}

class Cursor {
public:
    Cursor(std::span<const std::uint8_t> bytes, ErrorCode short_error) : bytes_(bytes), short_error_(short_error) {}

    std::span<const std::uint8_t> take(std::size_t count, const char* what) {
        if (count > bytes_.size() - pos_) {
            throw Error(short_error_, std::string("input ends inside ") + what, pos_);
        }
        auto out = bytes_.subspan(pos_, count);
        pos_ += count;
        return out;
    }

    std::uint64_t le(unsigned width, const char* what) {
        const auto raw = take(width, what);
        std::uint64_t value = 0;
        for (unsigned i = 0; i < width; ++i) value |= std::uint64_t{raw[i]} << (8 * i);
        return value;
    }

    [[nodiscard]] std::size_t remaining() const noexcept { return bytes_.size() - pos_; }
    [[nodiscard]] std::size_t position() const noexcept { return pos_; }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
    ErrorCode short_error_;
};

}  // namespace

ContainerHeader ContainerHeader::for_payload(std::uint8_t flags, std::uint64_t base_count,
                                             std::span<const std::uint8_t> payload) noexcept {
    return ContainerHeader{kFormatVersion, flags, base_count, crc32(payload)};
}

std::vector<std::uint8_t> write_container(const ContainerHeader& header, std::span<const std::uint8_t> payload) {
    std::vector<std::uint8_t> out;
    out.reserve(kHeaderSize + payload.size());
    out.insert(out.end(), kMagic.begin(), kMagic.end());
    out.push_back(header.version);
    out.push_back(header.flags);
    put_le(out, header.base_count, 8);
    put_le(out, header.payload_crc, 4);
    out.insert(out.end(), payload.begin(), payload.end());
    return out;
}

Container read_container(std::span<const std::uint8_t> bytes) {
    if (bytes.size() >= kMagic.size() && !std::equal(kMagic.begin(), kMagic.end(), bytes.begin())) {
        throw Error(ErrorCode::BadMagic, "not a LUTZ container (bad magic)", 0);
    }
    Cursor cursor(bytes, ErrorCode::TruncatedContainer);
    (void)cursor.take(kMagic.size(), "magic");
    Container c;
    c.header.version = static_cast<std::uint8_t>(cursor.le(1, "header"));
    if (c.header.version != kFormatVersion) {
        throw Error(ErrorCode::UnsupportedVersion, "unsupported container version " + std::to_string(c.header.version), 4);
    }
    c.header.flags = static_cast<std::uint8_t>(cursor.le(1, "header"));
    if ((c.header.flags & ~kKnownFlags) != 0) {
        throw Error(ErrorCode::ReservedFlagBits, "reserved flag bits set in container header", 5);
    }
    c.header.base_count = cursor.le(8, "header");
    c.header.payload_crc = static_cast<std::uint32_t>(cursor.le(4, "header"));
    const auto payload = cursor.take(cursor.remaining(), "payload");
    const std::uint32_t actual = crc32(payload);
    if (actual != c.header.payload_crc) {
        throw Error(ErrorCode::ChecksumMismatch, "payload CRC mismatch: header says " + std::to_string(c.header.payload_crc) +
                                                     ", payload has " + std::to_string(actual));
    }
    c.payload.assign(payload.begin(), payload.end());
    return c;
}

std::array<std::uint8_t, 128> pack_code_lengths(const CodeLengths& code) noexcept {
    std::array<std::uint8_t, 128> packed{};
    for (std::size_t i = 0; i < packed.size(); ++i) {
        packed[i] = static_cast<std::uint8_t>((code.lengths[2 * i] & 0x0F) | ((code.lengths[2 * i + 1] & 0x0F) << 4));
    }
    return packed;
}

CodeLengths unpack_code_lengths(std::span<const std::uint8_t, 128> packed) noexcept {
    CodeLengths code;
    for (std::size_t i = 0; i < packed.size(); ++i) {
        code.lengths[2 * i] = packed[i] & 0x0F;
        code.lengths[2 * i + 1] = packed[i] >> 4;
    }
    return code;
}

Stage2Payload pack_tokens(std::span<const Lz77Token> tokens) {
    if (tokens.size() > std::numeric_limits<std::uint32_t>::max()) {
        throw Error(ErrorCode::CorruptTokenStream, "too many tokens for a version-1 container");
    }
    Stage2Payload p;
    p.token_count = static_cast<std::uint32_t>(tokens.size());
    p.token_flags.assign((tokens.size() + 7) / 8, 0);
    std::vector<std::uint8_t> literals;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const Lz77Token& t = tokens[i];
        if (t.is_match()) {
            p.token_flags[i / 8] |= static_cast<std::uint8_t>(1u << (i % 8));
            p.matches.push_back({static_cast<std::uint16_t>(t.distance - 1), static_cast<std::uint8_t>(t.length - 3)});
        } else {
            literals.push_back(t.literal);
        }
    }
    p.literal_count = static_cast<std::uint32_t>(literals.size());
    if (!literals.empty()) {
        const auto freqs = byte_histogram(literals);
        p.literal_code = build_code(freqs);
        p.literal_bits = huff_encode(literals, p.literal_code);
        if (p.literal_bits.bit_count > std::numeric_limits<std::uint32_t>::max()) {
            throw Error(ErrorCode::CorruptTokenStream, "literal bit stream too long for a version-1 container");
        }
    }
    return p;
}

std::vector<Lz77Token> unpack_tokens(const Stage2Payload& p) {
    const auto literals = huff_decode(p.literal_bits, p.literal_code, p.literal_count);
    std::vector<Lz77Token> tokens;
    tokens.reserve(p.token_count);
    std::size_t next_literal = 0;
    std::size_t next_match = 0;
    for (std::size_t i = 0; i < p.token_count; ++i) {
        const bool is_match = (p.token_flags[i / 8] >> (i % 8)) & 1;
        if (is_match) {
            if (next_match >= p.matches.size()) throw Error(ErrorCode::CorruptTokenStream, "match records exhausted", i);
            const MatchRecord& m = p.matches[next_match++];
            tokens.push_back(Lz77Token::make_match(m.length_minus_three + 3u, m.distance_minus_one + 1u));
        } else {
            if (next_literal >= literals.size()) throw Error(ErrorCode::CorruptTokenStream, "literals exhausted", i);
            tokens.push_back(Lz77Token::make_literal(literals[next_literal++]));
        }
    }
    return tokens;
}

std::vector<std::uint8_t> serialize_stage2(const Stage2Payload& p) {
    std::vector<std::uint8_t> out;
    out.reserve(4 + p.token_flags.size() + 4 + 128 + 4 + p.literal_bits.bytes.size() + 3 * p.matches.size());
    put_le(out, p.token_count, 4);
    out.insert(out.end(), p.token_flags.begin(), p.token_flags.end());
    put_le(out, p.literal_count, 4);
    const auto packed = pack_code_lengths(p.literal_code);
    out.insert(out.end(), packed.begin(), packed.end());
    put_le(out, p.literal_bits.bit_count, 4);
    out.insert(out.end(), p.literal_bits.bytes.begin(), p.literal_bits.bytes.end());
    for (const MatchRecord& m : p.matches) {
        put_le(out, m.distance_minus_one, 2);
        out.push_back(m.length_minus_three);
    }
    return out;
}

Stage2Payload parse_stage2(std::span<const std::uint8_t> bytes) {
    Cursor cursor(bytes, ErrorCode::TruncatedContainer);
    Stage2Payload p;
    p.token_count = static_cast<std::uint32_t>(cursor.le(4, "token count"));
    const auto flags = cursor.take((std::size_t{p.token_count} + 7) / 8, "token flags");
    p.token_flags.assign(flags.begin(), flags.end());
    std::uint64_t match_count = 0;
    for (std::size_t i = 0; i < p.token_count; ++i) match_count += (p.token_flags[i / 8] >> (i % 8)) & 1;
    if (p.token_count % 8 != 0 && (p.token_flags.back() >> (p.token_count % 8)) != 0) {
        throw Error(ErrorCode::CorruptTokenStream, "token flag padding bits are not zero");
    }
    p.literal_count = static_cast<std::uint32_t>(cursor.le(4, "literal count"));
    if (p.literal_count != p.token_count - match_count) {
        throw Error(ErrorCode::CorruptTokenStream, "literal count " + std::to_string(p.literal_count) +
                                                       " disagrees with token flags");
    }
    p.literal_code = unpack_code_lengths(cursor.take(128, "code lengths").first<128>());
    p.literal_bits.bit_count = cursor.le(4, "literal bit count");
    const auto bits = cursor.take(static_cast<std::size_t>((p.literal_bits.bit_count + 7) / 8), "literal bits");
    p.literal_bits.bytes.assign(bits.begin(), bits.end());
    const auto records = cursor.take(static_cast<std::size_t>(match_count) * 3, "match records");
    p.matches.reserve(static_cast<std::size_t>(match_count));
    for (std::size_t i = 0; i < records.size(); i += 3) {
        p.matches.push_back({static_cast<std::uint16_t>(records[i] | (records[i + 1] << 8)), records[i + 2]});
    }
    if (cursor.remaining() != 0) {
        throw Error(ErrorCode::CorruptTokenStream,
                    std::to_string(cursor.remaining()) + " trailing bytes after stage-2 payload", cursor.position());
    }
    return p;
}

std::vector<std::uint8_t> stage2_compress(std::span<const std::uint8_t> data, const Lz77Params& params) {
    const auto tokens = lz77_compress(data, params);
    return serialize_stage2(pack_tokens(tokens));
}

std::vector<std::uint8_t> stage2_expand(std::span<const std::uint8_t> payload) {
    const auto tokens = unpack_tokens(parse_stage2(payload));
    return lz77_expand(tokens);
}

}  // namespace lutz
