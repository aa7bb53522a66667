#include "lutz/codec.hpp"

#include <string>

#include "lutz/error.hpp"

namespace lutz {

EncodeResult encode_bases(std::span<const Base> bases, const EncodeOptions& opts, std::uint8_t extra_flags) {
    const std::string precoded = kernels::precode_parallel(bases, opts.chunk);
    std::uint8_t flags = extra_flags & static_cast<std::uint8_t>(~kFlagStage2);
    std::vector<std::uint8_t> payload;
    if (opts.stage2) {
        flags |= kFlagStage2;
        payload = stage2_compress(as_bytes(precoded), opts.lz77);
    } else {
        const auto view = as_bytes(precoded);
        payload.assign(view.begin(), view.end());
    }
    EncodeResult result;
    result.header = ContainerHeader::for_payload(flags, bases.size(), payload);
    result.bytes = write_container(result.header, payload);
    result.base_count = bases.size();
    result.precoded_size = precoded.size();
    return result;
}

EncodeResult encode(std::span<const std::uint8_t> raw, const EncodeOptions& opts) {
    std::vector<Base> bases;
    bases.reserve(raw.size());
    Normalizer normalizer(opts.normalization);
    normalizer.feed(raw, bases);
    std::uint8_t flags = 0;
    if (normalizer.headers_skipped() > 0) flags |= kFlagFastaStripped;
    if (opts.normalization.unknown_policy == UnknownPolicy::TreatAsN) flags |= kFlagUnknownAsN;
    return encode_bases(bases, opts, flags);
}

std::string extract_precoded(const Container& container) {
    if (!container.header.stage2()) return {container.payload.begin(), container.payload.end()};
    const auto expanded = stage2_expand(container.payload);
    return {expanded.begin(), expanded.end()};
}

DecodeResult decode(std::span<const std::uint8_t> bytes, std::size_t chunk) {
    const Container container = read_container(bytes);
    const std::string precoded = extract_precoded(container);
    DecodeResult result;
    result.header = container.header;
    result.bases = kernels::predecode_parallel(as_bytes(precoded), container.header.base_count, chunk);
    if (result.bases.size() != container.header.base_count) {
        throw Error(ErrorCode::BaseCountMismatch, "payload holds " + std::to_string(result.bases.size()) +
                                                      " bases, header says " + std::to_string(container.header.base_count));
    }
    return result;
}

}  // namespace lutz
