#include "lutz/precoder.hpp"

#include <charconv>

namespace lutz {

namespace {

enum class ByteClass : std::uint8_t { Base, Skip, Unknown };

struct ByteInfo {
    ByteClass cls = ByteClass::Unknown;
    Base base = Base::N;
};

consteval std::array<ByteInfo, 256> make_byte_table() {
    std::array<ByteInfo, 256> table{};
    auto set = [&](char upper, Base b) {
        table[static_cast<unsigned char>(upper)] = {ByteClass::Base, b};
        table[static_cast<unsigned char>(upper + ('a' - 'A'))] = {ByteClass::Base, b};
    };
    set('A', Base::A);
    set('C', Base::C);
    set('G', Base::G);
    set('T', Base::T);
    set('N', Base::N);
    table['\n'] = {ByteClass::Skip, Base::N};
    table['\r'] = {ByteClass::Skip, Base::N};
    return table;
}

constexpr std::array<ByteInfo, 256> kByteTable = make_byte_table();

}  // namespace

void Normalizer::feed(std::span<const std::uint8_t> chunk, std::vector<Base>& out) {
    for (const std::uint8_t byte : chunk) {
        const std::uint64_t offset = offset_++;
        if (in_header_) {
            if (byte == '\n') {
                in_header_ = false;
                at_line_start_ = true;
            }
            continue;
        }
        if (opts_.fasta_mode && at_line_start_ && byte == '>') {
            in_header_ = true;
            ++headers_;
            continue;
        }
        at_line_start_ = byte == '\n';
        const ByteInfo info = kByteTable[byte];
        switch (info.cls) {
            case ByteClass::Base:
                out.push_back(info.base);
                break;
            case ByteClass::Skip:
                break;
            case ByteClass::Unknown:
                if (opts_.unknown_policy == UnknownPolicy::TreatAsN) {
                    out.push_back(Base::N);
                    break;
                }
                throw Error(ErrorCode::UnknownSymbol,
                            "unknown symbol byte " + std::to_string(byte) + " at offset " + std::to_string(offset),
                            offset);
        }
    }
}

std::vector<Base> normalize(std::span<const std::uint8_t> raw, const NormalizationOptions& opts) {
    std::vector<Base> out;
    out.reserve(raw.size());
    Normalizer normalizer(opts);
    normalizer.feed(raw, out);
    return out;
}

std::vector<PrecodedToken> precode(std::span<const Base> bases) {
    std::vector<PrecodedToken> tokens;
    tokens.reserve(bases.size() / 3 + 4);
    auto sink = [&](const PrecodedToken& t) { tokens.push_back(t); };
    Precoder precoder;
    for (const Base b : bases) precoder.push(b, sink);
    precoder.finish(sink);
    return tokens;
}

void serialize_token(const PrecodedToken& token, std::string& out) {
    if (const auto* coded = std::get_if<Coded>(&token)) {
        out.push_back(static_cast<char>(coded->code.value));
    } else if (const auto* raw = std::get_if<Raw>(&token)) {
        out.push_back(to_char(raw->base));
    } else {
        std::array<char, 24> digits{};
        const auto [end, ec] = std::to_chars(digits.data(), digits.data() + digits.size(), std::get<NRun>(token).count);
        out.push_back(static_cast<char>(kRunDelimiter));
        out.append(digits.data(), end);
        out.push_back(static_cast<char>(kRunDelimiter));
    }
}

std::string serialize_precoded(std::span<const PrecodedToken> tokens) {
    std::string out;
    out.reserve(tokens.size());
    for (const auto& token : tokens) serialize_token(token, out);
    return out;
}

void Predecoder::reserve_output(std::uint64_t count) {
    if (count > max_bases_ - produced_) {
        throw Error(ErrorCode::BaseCountMismatch,
                    "pre-coded stream expands beyond " + std::to_string(max_bases_) + " bases", offset_);
    }
    produced_ += count;
}

void Predecoder::feed(std::span<const std::uint8_t> chunk, std::vector<Base>& out) {
    for (const std::uint8_t byte : chunk) {
        const std::uint64_t offset = offset_;
        switch (state_) {
            case State::Plain:
                if (is_code_char(byte)) {
                    reserve_output(3);
                    const Triplet t = decode_code(byte);
                    out.push_back(t.b0);
                    out.push_back(t.b1);
                    out.push_back(t.b2);
                } else if (byte == 'A' || byte == 'C' || byte == 'G' || byte == 'T') {
                    reserve_output(1);
                    out.push_back(static_cast<Base>(byte));
                } else if (byte == kRunDelimiter) {
                    state_ = State::RunFirstDigit;
                    escape_offset_ = offset;
                    run_ = 0;
                } else {
                    throw Error(ErrorCode::CorruptPrecoded,
                                "byte " + std::to_string(byte) + " is not valid in a pre-coded stream at offset " +
                                    std::to_string(offset),
                                offset);
                }
                break;
            case State::RunFirstDigit:
                // Counts are positive and carry no leading zero.
                if (byte < '1' || byte > '9') {
                    throw Error(ErrorCode::MalformedNRun, "malformed N-run escape at offset " + std::to_string(escape_offset_),
                                escape_offset_);
                }
                run_ = byte - '0';
                state_ = State::RunDigits;
                break;
            case State::RunDigits:
                if (byte >= '0' && byte <= '9') {
                    const std::uint64_t digit = byte - '0';
                    if (run_ > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
                        throw Error(ErrorCode::NRunOverflow,
                                    "N-run count overflows 64 bits at offset " + std::to_string(escape_offset_),
                                    escape_offset_);
                    }
                    run_ = run_ * 10 + digit;
                } else if (byte == kRunDelimiter) {
                    reserve_output(run_);
                    out.insert(out.end(), run_, Base::N);
                    state_ = State::Plain;
                } else {
                    throw Error(ErrorCode::MalformedNRun, "malformed N-run escape at offset " + std::to_string(escape_offset_),
                                escape_offset_);
                }
                break;
        }
        ++offset_;
    }
}

void Predecoder::finish() {
    if (state_ != State::Plain) {
        throw Error(ErrorCode::MalformedNRun, "unterminated N-run escape at offset " + std::to_string(escape_offset_),
                    escape_offset_);
    }
}

std::vector<Base> predecode(std::span<const std::uint8_t> precoded, std::uint64_t max_bases) {
    std::vector<Base> out;
    out.reserve(precoded.size() * 3);
    Predecoder decoder(max_bases);
    decoder.feed(precoded, out);
    decoder.finish();
    return out;
}

std::string to_string(std::span<const Base> bases) {
    std::string s;
    s.reserve(bases.size());
    for (const Base b : bases) s.push_back(to_char(b));
    return s;
}

std::vector<Base> bases_from(std::string_view letters) {
    std::vector<Base> out;
    out.reserve(letters.size());
    for (std::size_t i = 0; i < letters.size(); ++i) {
        const char c = letters[i];
        if (c != 'A' && c != 'C' && c != 'G' && c != 'T' && c != 'N') {
            throw Error(ErrorCode::UnknownSymbol, std::string("not a base letter: ") + c, i);
        }
        out.push_back(static_cast<Base>(c));
    }
    return out;
}

}  // namespace lutz
