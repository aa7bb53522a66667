#include "lutz/bench.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iomanip>
#include <istream>
#include <sstream>

#include "lutz/codec.hpp"
#include "lutz/error.hpp"

namespace lutz::bench {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const auto tab = line.find('\t', start);
        fields.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
        if (tab == std::string::npos) break;
        start = tab + 1;
    }
    return fields;
}

double median(std::vector<double> samples) {
    if (samples.empty()) return 0.0;
    std::sort(samples.begin(), samples.end());
    const std::size_t mid = samples.size() / 2;
    return samples.size() % 2 == 1 ? samples[mid] : 0.5 * (samples[mid - 1] + samples[mid]);
}

template <typename Fn>
double time_ms(Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

EncodeOptions encode_options(const BenchOptions& opts) {
    EncodeOptions e;
    e.normalization = opts.normalization;
    e.stage2 = opts.stage2;
    return e;
}

// Sizes and round-trip check, no timing.
BenchRow verify(const std::string& name, std::span<const std::uint8_t> raw, const BenchOptions& opts) {
    BenchRow row;
    row.name = name;
    try {
        const auto expected = normalize(raw, opts.normalization);
        const auto encoded = encode_bases(expected, encode_options(opts));
        const auto decoded = decode(encoded.bytes);
        row.base_count = encoded.base_count;
        row.precoded_bytes = encoded.precoded_size;
        row.final_bytes = encoded.bytes.size();
        if (decoded.bases != expected) {
            throw Error(ErrorCode::RoundTripFailure, "decoded bases differ from the input");
        }
        row.r_bar = row.base_count == 0 ? 0.0 : bits_per_base(row.final_bytes, row.base_count);
    } catch (const std::exception& e) {
        row.failed = true;
        row.failure = e.what();
        row.r_bar = 0.0;
    }
    return row;
}

void time_row(BenchRow& row, std::span<const std::uint8_t> raw, const BenchOptions& opts) {
    const auto options = encode_options(opts);
    const unsigned repeat = std::max(1u, opts.repeat);
    std::vector<double> enc;
    std::vector<double> dec;
    EncodeResult encoded;
    for (unsigned i = 0; i < repeat; ++i) {
        enc.push_back(time_ms([&] { encoded = encode(raw, options); }));
        dec.push_back(time_ms([&] { (void)decode(encoded.bytes); }));
    }
    row.encode_ms = median(enc);
    row.decode_ms = median(dec);
    row.repeats = repeat;
}

}  // namespace

std::vector<CorpusEntry> parse_manifest(std::istream& in, const std::filesystem::path& base_dir) {
    std::vector<CorpusEntry> entries;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        const auto fields = split_tabs(line);
        auto fail = [&](const std::string& why) {
            throw Error(ErrorCode::ManifestSyntax, "manifest line " + std::to_string(line_no) + ": " + why, line_no);
        };
        if (fields.size() < 2 || fields.size() > 4) fail("expected 2 to 4 tab-separated fields");
        CorpusEntry entry;
        entry.name = fields[0];
        if (entry.name.empty()) fail("empty name");
        if (fields[1].empty()) fail("empty path");
        entry.path = fields[1];
        if (entry.path.is_relative() && !base_dir.empty()) entry.path = base_dir / entry.path;
        if (fields.size() >= 3 && !fields[2].empty()) {
            std::uint64_t value = 0;
            const auto* first = fields[2].data();
            const auto* last = first + fields[2].size();
            const auto [ptr, ec] = std::from_chars(first, last, value);
            if (ec != std::errc{} || ptr != last) fail("expected_bases is not a non-negative integer");
            entry.expected_bases = value;
        }
        if (fields.size() == 4 && !fields[3].empty()) {
            std::string digest = fields[3];
            std::transform(digest.begin(), digest.end(), digest.begin(), [](unsigned char c) { return std::tolower(c); });
            if (digest.size() != 64 || digest.find_first_not_of("0123456789abcdef") != std::string::npos) {
                fail("sha256 must be 64 hex digits");
            }
            entry.expected_sha256 = digest;
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

std::vector<CorpusEntry> load_manifest(const std::filesystem::path& manifest) {
    std::ifstream in(manifest);
    if (!in) throw Error(ErrorCode::Io, "cannot open manifest " + manifest.string());
    return parse_manifest(in, manifest.parent_path());
}

double bits_per_base(std::uint64_t compressed_bytes, std::uint64_t bases) {
    if (bases == 0) throw Error(ErrorCode::DivisionByZero, "bits per base of an empty sequence");
    return 8.0 * static_cast<double>(compressed_bytes) / static_cast<double>(bases);
}

std::string format_ratio(double r_bar) {
    std::array<char, 32> buf{};
    std::snprintf(buf.data(), buf.size(), "%.4f", r_bar);
    return buf.data();
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::EntryUnreadable, "cannot read " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw Error(ErrorCode::EntryUnreadable, "error while reading " + path.string());
    return bytes;
}

std::string sha256_hex(std::span<const std::uint8_t> bytes) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
        throw Error(ErrorCode::Io, "SHA-256 computation failed");
    }
    std::ostringstream hex;
    for (unsigned i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << unsigned{digest[i]};
    return hex.str();
}

BenchRow bench_bytes(const std::string& name, std::span<const std::uint8_t> raw, const BenchOptions& opts) {
    BenchRow row = verify(name, raw, opts);
    if (!row.failed) time_row(row, raw, opts);
    return row;
}

std::vector<BenchRow> run_corpus(std::span<const CorpusEntry> manifest, const BenchOptions& opts) {
    const std::size_t n = manifest.size();
    std::vector<BenchRow> rows(n);
    std::vector<std::vector<std::uint8_t>> inputs(n);

#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(n); ++k) {
        const auto i = static_cast<std::size_t>(k);
        const CorpusEntry& entry = manifest[i];
        try {
            inputs[i] = read_file(entry.path);
        } catch (const std::exception& e) {
            rows[i].name = entry.name;
            rows[i].failed = true;
            rows[i].failure = e.what();
            continue;
        }
        if (entry.expected_sha256 && sha256_hex(inputs[i]) != *entry.expected_sha256) {
            rows[i].name = entry.name;
            rows[i].failed = true;
            rows[i].failure = "sha256 mismatch for " + entry.path.string();
            continue;
        }
        rows[i] = verify(entry.name, inputs[i], opts);
        if (!rows[i].failed && entry.expected_bases && *entry.expected_bases != rows[i].base_count) {
            rows[i].failed = true;
            rows[i].failure = "expected " + std::to_string(*entry.expected_bases) + " bases, measured " +
                              std::to_string(rows[i].base_count);
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        if (!rows[i].failed) time_row(rows[i], inputs[i], opts);
        inputs[i] = {};
    }
    return rows;
}

std::optional<double> average_r_bar(std::span<const BenchRow> rows) {
    double sum = 0.0;
    std::size_t count = 0;
    for (const auto& row : rows) {
        if (row.failed) continue;
        sum += row.r_bar;
        ++count;
    }
    if (count == 0) return std::nullopt;
    return sum / static_cast<double>(count);
}

std::string format_report(std::span<const BenchRow> rows, ReportStyle style) {
    using Line = std::vector<std::string>;
    std::vector<Line> table;
    table.push_back({"name", "base_number", "precoded_bytes", "file_size_bytes", "file_size_bits", "r_bar", "encode_ms",
                     "decode_ms", "repeats", "status"});
    auto ms = [](double v) {
        std::array<char, 32> buf{};
        std::snprintf(buf.data(), buf.size(), "%.3f", v);
        return std::string(buf.data());
    };
    for (const auto& r : rows) {
        if (r.failed) {
            table.push_back({r.name, "--", "--", "--", "--", "--", "--", "--", "--", "FAILED: " + r.failure});
            continue;
        }
        table.push_back({r.name, std::to_string(r.base_count), std::to_string(r.precoded_bytes),
                         std::to_string(r.final_bytes), std::to_string(r.final_bits()), format_ratio(r.r_bar),
                         ms(r.encode_ms), ms(r.decode_ms), std::to_string(r.repeats), "ok"});
    }
    if (const auto avg = average_r_bar(rows)) {
        table.push_back({"Average", "--", "--", "--", "--", format_ratio(*avg), "--", "--", "--", "--"});
    }

    std::string out;
    if (style == ReportStyle::Tsv) {
        for (const auto& line : table) {
            for (std::size_t c = 0; c < line.size(); ++c) {
                if (c) out += '\t';
                out += line[c];
            }
            out += '\n';
        }
        return out;
    }
    std::vector<std::size_t> width(table.front().size(), 0);
    for (const auto& line : table) {
        for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
    }
    for (const auto& line : table) {
        std::string text;
        for (std::size_t c = 0; c < line.size(); ++c) {
            if (c) text += "  ";
            if (c == 0 || c + 1 == line.size()) {
                text += line[c];
                if (c + 1 != line.size()) text.append(width[c] - line[c].size(), ' ');
            } else {
                text.append(width[c] - line[c].size(), ' ');
                text += line[c];
            }
        }
        out += text;
        out += '\n';
    }
    return out;
}

}  // namespace lutz::bench
