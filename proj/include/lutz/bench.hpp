#pragma once

// Corpus benchmark: per-sequence sizes, bits per base and timings.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lutz/precoder.hpp"

namespace lutz::bench {

struct CorpusEntry {
    std::string name;
    std::filesystem::path path;
    std::optional<std::uint64_t> expected_bases;
    std::optional<std::string> expected_sha256;  ///< lowercase hex
};

/// One entry per line: name<TAB>path[<TAB>expected_bases[<TAB>sha256]].
/// Blank lines and lines starting with '#' are ignored. Relative paths are
/// resolved against `base_dir`.
[[nodiscard]] std::vector<CorpusEntry> parse_manifest(std::istream& in, const std::filesystem::path& base_dir = {});
[[nodiscard]] std::vector<CorpusEntry> load_manifest(const std::filesystem::path& manifest);

/// 8 * compressed_bytes / bases. Throws DivisionByZero when bases == 0.
[[nodiscard]] double bits_per_base(std::uint64_t compressed_bytes, std::uint64_t bases);
/// Fixed four decimal places.
[[nodiscard]] std::string format_ratio(double r_bar);

struct BenchOptions {
    bool stage2 = true;
    unsigned repeat = 5;
    NormalizationOptions normalization;
};

struct BenchRow {
    std::string name;
    std::uint64_t base_count = 0;
    std::uint64_t precoded_bytes = 0;
    std::uint64_t final_bytes = 0;  ///< whole container, header included
    double r_bar = 0.0;
    double encode_ms = 0.0;  ///< median
    double decode_ms = 0.0;  ///< median
    unsigned repeats = 0;
    bool failed = false;
    std::string failure;

    [[nodiscard]] std::uint64_t final_bits() const noexcept { return final_bytes * 8; }
};

/// Encodes, decodes and verifies one sequence, then times both directions
/// `repeat` times. A failed round trip yields a row with `failed` set and no ratio.
[[nodiscard]] BenchRow bench_bytes(const std::string& name, std::span<const std::uint8_t> raw, const BenchOptions& opts);

/// Verification runs on parallel workers; timed sections run one at a time.
[[nodiscard]] std::vector<BenchRow> run_corpus(std::span<const CorpusEntry> manifest, const BenchOptions& opts);

/// Mean r_bar over rows that did not fail, if any.
[[nodiscard]] std::optional<double> average_r_bar(std::span<const BenchRow> rows);

enum class ReportStyle { Tsv, Aligned };

/// Columns: name, base_number, precoded_bytes, file_size_bytes,
/// file_size_bits, r_bar, encode_ms, decode_ms, repeats, status; followed by
/// an Average row when at least one row succeeded.
[[nodiscard]] std::string format_report(std::span<const BenchRow> rows, ReportStyle style = ReportStyle::Tsv);

[[nodiscard]] std::string sha256_hex(std::span<const std::uint8_t> bytes);

[[nodiscard]] std::vector<std::uint8_t> read_file(const std::filesystem::path& path);

}  // namespace lutz::bench
