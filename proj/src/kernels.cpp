#include "lutz/kernels.hpp"

#include <exception>
#include <optional>

#include "lutz/precoder.hpp"

namespace lutz::kernels {

std::string precode_serial(std::span<const Base> bases) {
    std::string out;
    out.reserve(bases.size() / 3 + 16);
    auto sink = [&](const PrecodedToken& t) { serialize_token(t, out); };
    Precoder precoder;
    for (const Base b : bases) precoder.push(b, sink);
    precoder.finish(sink);
    return out;
}

std::vector<std::size_t> precode_split_points(std::span<const Base> bases, std::size_t chunk) {
    const std::size_t n = bases.size();
    if (chunk == 0) chunk = 1;
    const std::size_t nominal = (n + chunk - 1) / chunk;

    // Length (mod 3) of the non-N run ending just before each nominal boundary.
    // Chunks are summarized in parallel, then folded left to right.
    struct Summary {
        bool has_n = false;
        std::size_t trailing = 0;  // non-N bases after the last N (or whole chunk)
    };
    std::vector<Summary> summary(nominal);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(nominal); ++k) {
        const std::size_t begin = static_cast<std::size_t>(k) * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        Summary s;
        for (std::size_t i = begin; i < end; ++i) {
            if (bases[i] == Base::N) {
                s.has_n = true;
                s.trailing = 0;
            } else {
                ++s.trailing;
            }
        }
        summary[static_cast<std::size_t>(k)] = s;
    }

    std::vector<std::size_t> points{0};
    std::size_t phase = 0;  // non-N run length mod 3 at the current nominal boundary
    for (std::size_t k = 0; k + 1 < nominal; ++k) {
        phase = summary[k].has_n ? summary[k].trailing % 3 : (phase + summary[k].trailing) % 3;
        std::size_t i = (k + 1) * chunk;
        if (i <= points.back()) continue;  // swallowed by a long N-run walk
        // Walk forward until the previous base is non-N and closes a triplet.
        bool prev_n = bases[i - 1] == Base::N;
        std::size_t run = prev_n ? 0 : phase;
        while (i < n && (prev_n || run != 0)) {
            if (bases[i] == Base::N) {
                prev_n = true;
                run = 0;
            } else {
                run = prev_n ? 1 : (run + 1) % 3;
                prev_n = false;
            }
            ++i;
        }
        if (i < n) points.push_back(i);
    }
    if (n > 0) points.push_back(n);
    return points;
}

std::string precode_parallel(std::span<const Base> bases, std::size_t chunk) {
    const auto points = precode_split_points(bases, chunk);
    if (points.size() <= 2) return precode_serial(bases);

    const std::size_t parts = points.size() - 1;
    std::vector<std::string> pieces(parts);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(parts); ++k) {
        const auto idx = static_cast<std::size_t>(k);
        pieces[idx] = precode_serial(bases.subspan(points[idx], points[idx + 1] - points[idx]));
    }

    std::vector<std::size_t> offsets(parts + 1, 0);
    for (std::size_t k = 0; k < parts; ++k) offsets[k + 1] = offsets[k] + pieces[k].size();
    std::string out(offsets[parts], '\0');
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(parts); ++k) {
        const auto idx = static_cast<std::size_t>(k);
        pieces[idx].copy(out.data() + offsets[idx], pieces[idx].size());
    }
    return out;
}

std::vector<Base> predecode_serial(std::span<const std::uint8_t> precoded, std::uint64_t max_bases) {
    return predecode(precoded, max_bases);
}

std::vector<std::size_t> predecode_split_points(std::span<const std::uint8_t> precoded, std::size_t chunk) {
    const std::size_t n = precoded.size();
    if (chunk == 0) chunk = 1;
    std::vector<std::size_t> points{0};
    for (std::size_t i = chunk; i < n; i += chunk) {
        std::size_t j = std::max(i, points.back() + 1);
        while (j < n) {
            const std::uint8_t prev = precoded[j - 1];
            if (prev != kRunDelimiter && (prev < '0' || prev > '9')) break;
            ++j;
        }
        if (j < n && j > points.back()) points.push_back(j);
    }
    if (n > 0) points.push_back(n);
    return points;
}

std::vector<Base> predecode_parallel(std::span<const std::uint8_t> precoded, std::uint64_t max_bases,
                                     std::size_t chunk) {
    const auto points = predecode_split_points(precoded, chunk);
    if (points.size() <= 2) return predecode_serial(precoded, max_bases);

    struct Piece {
        std::vector<Base> bases;
        std::exception_ptr error;
        std::uint64_t produced_before_error = 0;
    };
    const std::size_t parts = points.size() - 1;
    std::vector<Piece> pieces(parts);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(parts); ++k) {
        const auto idx = static_cast<std::size_t>(k);
        Piece& piece = pieces[idx];
        Predecoder decoder(max_bases);
        try {
            decoder.feed(precoded.subspan(points[idx], points[idx + 1] - points[idx]), piece.bases);
            if (idx + 1 == parts) decoder.finish();
        } catch (...) {
            piece.error = std::current_exception();
            piece.produced_before_error = decoder.produced();
        }
    }

    // Replay results in stream order so the first failure wins, as it would serially.
    std::uint64_t total = 0;
    for (std::size_t k = 0; k < parts; ++k) {
        const std::uint64_t produced = pieces[k].error ? pieces[k].produced_before_error : pieces[k].bases.size();
        if (produced > max_bases - total) {
            throw Error(ErrorCode::BaseCountMismatch,
                        "pre-coded stream expands beyond " + std::to_string(max_bases) + " bases");
        }
        if (pieces[k].error) {
            try {
                std::rethrow_exception(pieces[k].error);
            } catch (const Error& e) {
                if (e.code() == ErrorCode::BaseCountMismatch) throw;
                // Offsets inside a piece are relative to its first byte.
                const std::optional<std::uint64_t> offset =
                    e.offset() ? std::optional<std::uint64_t>(*e.offset() + points[k]) : std::nullopt;
                std::string what = e.what();
                if (e.offset()) {
                    const std::string local = "offset " + std::to_string(*e.offset());
                    if (const auto pos = what.rfind(local); pos != std::string::npos) {
                        what.replace(pos, local.size(), "offset " + std::to_string(*offset));
                    }
                }
                throw Error(e.code(), what, offset);
            }
        }
        total += produced;
    }

    std::vector<std::uint64_t> offsets(parts + 1, 0);
    for (std::size_t k = 0; k < parts; ++k) offsets[k + 1] = offsets[k] + pieces[k].bases.size();
    std::vector<Base> out(offsets[parts]);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(parts); ++k) {
        const auto idx = static_cast<std::size_t>(k);
        std::copy(pieces[idx].bases.begin(), pieces[idx].bases.end(), out.begin() + static_cast<std::ptrdiff_t>(offsets[idx]));
    }
    return out;
}

}  // namespace lutz::kernels
