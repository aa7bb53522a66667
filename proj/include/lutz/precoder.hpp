#pragma once

// First phase: raw bytes -> bases -> pre-coded ASCII stream, and back.
//
// Pre-coded byte grammar:
//   code byte (one of the 64 LUT bytes)  -> three bases
//   'A' | 'C' | 'G' | 'T'                 -> one base (fewer than three non-N
//                                            bases before an N-run or EOF)
//   '/' <decimal, no leading zero> '/'    -> that many N bases
//
// The encoder and decoder are streaming state machines holding O(1) state.

#include <array>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lutz/error.hpp"
#include "lutz/lut.hpp"

namespace lutz {

inline constexpr std::uint8_t kRunDelimiter = '/';

enum class UnknownPolicy { Reject, TreatAsN };

struct NormalizationOptions {
    bool fasta_mode = false;  ///< skip every line whose first byte is '>'
    UnknownPolicy unknown_policy = UnknownPolicy::Reject;
};

/// Folds case, drops LF/CR (and FASTA header lines when enabled), and applies
/// the unknown-byte policy. Offsets reported in errors are absolute across
/// successive feed() calls.
class Normalizer {
public:
    explicit Normalizer(NormalizationOptions opts = {}) : opts_(opts) {}

    void feed(std::span<const std::uint8_t> chunk, std::vector<Base>& out);

    [[nodiscard]] std::uint64_t bytes_consumed() const noexcept { return offset_; }
    [[nodiscard]] std::uint64_t headers_skipped() const noexcept { return headers_; }

private:
    NormalizationOptions opts_;
    std::uint64_t offset_ = 0;
    std::uint64_t headers_ = 0;
    bool at_line_start_ = true;
    bool in_header_ = false;
};

[[nodiscard]] std::vector<Base> normalize(std::span<const std::uint8_t> raw, const NormalizationOptions& opts = {});

struct Coded {
    CodeChar code;
    friend bool operator==(const Coded&, const Coded&) = default;
};
struct Raw {
    Base base;  ///< never N
    friend bool operator==(const Raw&, const Raw&) = default;
};
struct NRun {
    std::uint64_t count;  ///< >= 1
    friend bool operator==(const NRun&, const NRun&) = default;
};

using PrecodedToken = std::variant<Coded, Raw, NRun>;

/// Groups non-N bases three at a time. Pending bases are flushed raw when an
/// N arrives, and framing restarts after every N-run.
class Precoder {
public:
    template <typename Sink>
    void push(Base b, Sink&& sink) {
        ++bases_;
        if (b == Base::N) {
            flush_pending(sink);
            ++run_;
            return;
        }
        if (run_ != 0) {
            sink(PrecodedToken{NRun{run_}});
            run_ = 0;
        }
        if (pending_size_ == 2) {
            sink(PrecodedToken{Coded{encode_triplet({pending_[0], pending_[1], b})}});
            pending_size_ = 0;
        } else {
            pending_[pending_size_++] = b;
        }
    }

    template <typename Sink>
    void finish(Sink&& sink) {
        if (run_ != 0) {
            sink(PrecodedToken{NRun{run_}});
            run_ = 0;
        }
        flush_pending(sink);
    }

    [[nodiscard]] std::uint64_t base_count() const noexcept { return bases_; }
    /// True when no bases are buffered and no N-run is open.
    [[nodiscard]] bool idle() const noexcept { return pending_size_ == 0 && run_ == 0; }

private:
    template <typename Sink>
    void flush_pending(Sink& sink) {
        for (unsigned i = 0; i < pending_size_; ++i) sink(PrecodedToken{Raw{pending_[i]}});
        pending_size_ = 0;
    }

    std::array<Base, 2> pending_{};
    unsigned pending_size_ = 0;
    std::uint64_t run_ = 0;
    std::uint64_t bases_ = 0;
};

[[nodiscard]] std::vector<PrecodedToken> precode(std::span<const Base> bases);

void serialize_token(const PrecodedToken& token, std::string& out);
[[nodiscard]] std::string serialize_precoded(std::span<const PrecodedToken> tokens);

/// Inverse of serialize_precoded(precode(.)). Decoding stops with
/// BaseCountMismatch once more than `max_bases` would be produced.
class Predecoder {
public:
    explicit Predecoder(std::uint64_t max_bases = std::numeric_limits<std::uint64_t>::max())
        : max_bases_(max_bases) {}

    void feed(std::span<const std::uint8_t> chunk, std::vector<Base>& out);
    /// Throws MalformedNRun if the stream ends inside an escape.
    void finish();

    [[nodiscard]] std::uint64_t produced() const noexcept { return produced_; }
    [[nodiscard]] std::uint64_t bytes_consumed() const noexcept { return offset_; }

private:
    enum class State { Plain, RunFirstDigit, RunDigits };

    void reserve_output(std::uint64_t count);

    std::uint64_t max_bases_;
    std::uint64_t produced_ = 0;
    std::uint64_t offset_ = 0;
    std::uint64_t escape_offset_ = 0;
    std::uint64_t run_ = 0;
    State state_ = State::Plain;
};

[[nodiscard]] std::vector<Base> predecode(std::span<const std::uint8_t> precoded,
                                          std::uint64_t max_bases = std::numeric_limits<std::uint64_t>::max());

[[nodiscard]] inline std::uint64_t base_count(std::span<const Base> bases) noexcept { return bases.size(); }

[[nodiscard]] std::string to_string(std::span<const Base> bases);
[[nodiscard]] std::vector<Base> bases_from(std::string_view letters);  // uppercase ACGTN only

[[nodiscard]] inline std::span<const std::uint8_t> as_bytes(std::string_view s) noexcept {
    return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

}  // namespace lutz
