#include "cli.hpp"

#include <CLI11.hpp>

#include <exception>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include "lutz/bench.hpp"
#include "lutz/codec.hpp"
#include "lutz/container.hpp"
#include "lutz/error.hpp"

namespace lutz::cli {

namespace {

struct Settings {
    std::string input = "-";
    std::string output = "-";
    bool precode_only = false;
    bool raw = false;
    bool fasta = false;
    UnknownPolicy unknown = UnknownPolicy::Reject;
    unsigned wrap = 0;
    bool stage2 = true;
    unsigned repeat = 5;
    std::string format = "tsv";
};

struct Streams {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

std::vector<std::uint8_t> read_input(const std::string& path, std::istream& in) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error(ErrorCode::Io, "cannot open input " + path);
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, std::ostream& out, std::string_view data) {
    if (path == "-") {
        out.write(data.data(), static_cast<std::streamsize>(data.size()));
        out.flush();
        if (!out) throw Error(ErrorCode::Io, "write to standard output failed");
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw Error(ErrorCode::Io, "cannot open output " + path);
    file.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!file) throw Error(ErrorCode::Io, "write to " + path + " failed");
}

std::string_view as_text(const std::vector<std::uint8_t>& bytes) {
    return {reinterpret_cast<const char*>(bytes.data()), bytes.size()};
}

NormalizationOptions normalization(const Settings& s) {
    return NormalizationOptions{s.fasta, s.unknown};
}

int cmd_encode(const Settings& s, Streams io) {
    const auto raw = read_input(s.input, io.in);
    if (s.raw) {
        const auto bases = normalize(raw, normalization(s));
        const std::string precoded = kernels::precode_parallel(bases);
        write_output(s.output, io.out, precoded);
        io.err << "bases: " << bases.size() << "\toutput_bytes: " << precoded.size();
        if (!bases.empty()) io.err << "\tr_bar: " << bench::format_ratio(bench::bits_per_base(precoded.size(), bases.size()));
        io.err << '\n';
        return 0;
    }
    EncodeOptions opts;
    opts.normalization = normalization(s);
    opts.stage2 = !s.precode_only;
    const auto result = encode(raw, opts);
    write_output(s.output, io.out, as_text(result.bytes));
    io.err << "bases: " << result.base_count << "\toutput_bytes: " << result.bytes.size();
    if (result.base_count != 0) {
        io.err << "\tr_bar: " << bench::format_ratio(bench::bits_per_base(result.bytes.size(), result.base_count));
    }
    io.err << '\n';
    return 0;
}

int cmd_decode(const Settings& s, Streams io) {
    const auto input = read_input(s.input, io.in);
    std::vector<Base> bases = s.raw ? kernels::predecode_parallel(input) : decode(input).bases;
    std::string text = to_string(bases);
    if (s.wrap > 0) {
        std::string wrapped;
        wrapped.reserve(text.size() + text.size() / s.wrap + 1);
        for (std::size_t i = 0; i < text.size(); i += s.wrap) {
            wrapped.append(text, i, s.wrap);
            wrapped += '\n';
        }
        text = std::move(wrapped);
    }
    write_output(s.output, io.out, text);
    return 0;
}

int cmd_inspect(const Settings& s, Streams io) {
    const auto input = read_input(s.input, io.in);
    const Container c = read_container(input);
    const auto& h = c.header;
    auto yes_no = [](bool v) { return v ? "yes" : "no"; };
    std::ostringstream report;
    report << "magic: LUTZ\n"
           << "version: " << unsigned{h.version} << '\n'
           << "flags: 0x" << std::hex << unsigned{h.flags} << std::dec << '\n'
           << "stage2: " << (h.stage2() ? "on" : "off") << '\n'
           << "fasta_headers_stripped: " << yes_no(h.flags & kFlagFastaStripped) << '\n'
           << "unknown_as_n: " << yes_no(h.flags & kFlagUnknownAsN) << '\n'
           << "base_count: " << h.base_count << '\n'
           << "payload_crc: 0x" << std::hex << h.payload_crc << std::dec << '\n'
           << "payload_bytes: " << c.payload.size() << '\n';
    if (h.stage2()) {
        const Stage2Payload p = parse_stage2(c.payload);
        const auto tokens = unpack_tokens(p);
        std::uint64_t matched_bytes = 0;
        for (const auto& t : tokens) matched_bytes += t.length;
        report << "token_count: " << p.token_count << '\n'
               << "literal_count: " << p.literal_count << '\n'
               << "match_count: " << p.matches.size() << '\n'
               << "matched_bytes: " << matched_bytes << '\n'
               << "literal_symbols: " << p.literal_code.symbol_count() << '\n'
               << "literal_bits: " << p.literal_bits.bit_count << '\n'
               << "precoded_bytes: " << (p.literal_count + matched_bytes) << '\n';
    } else {
        report << "precoded_bytes: " << c.payload.size() << '\n';
    }
    if (h.base_count != 0) {
        report << "r_bar: " << bench::format_ratio(bench::bits_per_base(input.size(), h.base_count)) << '\n';
    }
    const std::string text = report.str();
    io.out << text;
    io.out.flush();
    return 0;
}

int cmd_bench(const Settings& s, Streams io) {
    const auto manifest = bench::load_manifest(s.input);
    if (s.repeat == 1) io.err << "warning: --repeat=1 reports single-sample timings, not medians\n";
    bench::BenchOptions opts;
    opts.stage2 = s.stage2;
    opts.repeat = s.repeat;
    opts.normalization = normalization(s);
    const auto rows = bench::run_corpus(manifest, opts);
    const auto style = s.format == "text" ? bench::ReportStyle::Aligned : bench::ReportStyle::Tsv;
    write_output(s.output, io.out, bench::format_report(rows, style));
    int status = 0;
    for (const auto& row : rows) {
        if (row.failed) {
            io.err << "error: " << row.name << ": " << row.failure << '\n';
            status = 1;
        }
    }
    return status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Lossless DNA sequence compressor: triplet look-up-table pre-coding plus LZ77/Huffman", "lutz"};
    app.require_subcommand(1);
    Settings s;

    const std::map<std::string, UnknownPolicy> unknown_map{{"reject", UnknownPolicy::Reject},
                                                           {"as-n", UnknownPolicy::TreatAsN}};
    const std::map<std::string, bool> on_off{{"on", true}, {"off", false}};

    auto* encode_cmd = app.add_subcommand("encode", "Compress a sequence file into a container");
    encode_cmd->add_option("input", s.input, "Input sequence file, '-' for stdin")->required();
    encode_cmd->add_option("-o,--output", s.output, "Output file, '-' for stdout");
    encode_cmd->add_flag("--precode-only", s.precode_only, "Skip the LZ77/Huffman stage");
    encode_cmd->add_flag("--raw", s.raw, "Write the bare pre-coded ASCII stream instead of a container");
    encode_cmd->add_flag("--fasta", s.fasta, "Skip lines starting with '>'");
    encode_cmd->add_option("--unknown", s.unknown, "Policy for non-ACGTN bytes: reject or as-n")
        ->transform(CLI::CheckedTransformer(unknown_map, CLI::ignore_case));

    auto* decode_cmd = app.add_subcommand("decode", "Restore the base sequence from a container");
    decode_cmd->add_option("input", s.input, "Container file, '-' for stdin")->required();
    decode_cmd->add_option("-o,--output", s.output, "Output file, '-' for stdout");
    decode_cmd->add_option("--wrap", s.wrap, "Insert a line feed every N bases (0: no wrapping)");
    decode_cmd->add_flag("--raw", s.raw, "Input is a bare pre-coded ASCII stream");

    auto* inspect_cmd = app.add_subcommand("inspect", "Print container header and payload statistics");
    inspect_cmd->add_option("input", s.input, "Container file, '-' for stdin")->required();

    auto* bench_cmd = app.add_subcommand("bench", "Benchmark a corpus manifest");
    bench_cmd->add_option("manifest", s.input, "name<TAB>path[<TAB>bases[<TAB>sha256]] per line")->required();
    bench_cmd->add_option("-o,--output", s.output, "Report file, '-' for stdout");
    bench_cmd->add_option("--stage2", s.stage2, "Apply the LZ77/Huffman stage: on or off")
        ->transform(CLI::CheckedTransformer(on_off, CLI::ignore_case));
    bench_cmd->add_option("--repeat", s.repeat, "Timing repetitions per entry")->check(CLI::Range(1u, 1000000u));
    bench_cmd->add_option("--format", s.format, "Report style: tsv or text")->check(CLI::IsMember({"tsv", "text"}));
    bench_cmd->add_flag("--fasta", s.fasta, "Skip lines starting with '>'");
    bench_cmd->add_option("--unknown", s.unknown, "Policy for non-ACGTN bytes: reject or as-n")
        ->transform(CLI::CheckedTransformer(unknown_map, CLI::ignore_case));

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    const Streams io{in, out, err};
    try {
        if (*encode_cmd) return cmd_encode(s, io);
        if (*decode_cmd) return cmd_decode(s, io);
        if (*inspect_cmd) return cmd_inspect(s, io);
        if (*bench_cmd) return cmd_bench(s, io);
    } catch (const Error& e) {
        err << "lutz: error: " << e.what() << " [" << to_string(e.code()) << "]\n";
        return 1;
    } catch (const std::exception& e) {
        err << "lutz: error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace lutz::cli
