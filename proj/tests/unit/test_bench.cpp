#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "generators.hpp"
#include "lutz/bench.hpp"
#include "lutz/error.hpp"

namespace lutz::bench {
namespace {

namespace fs = std::filesystem;

class TempDir {
public:
    TempDir() {
        std::random_device rd;
        path_ = fs::temp_directory_path() / ("lutz-bench-" + std::to_string(rd()));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    [[nodiscard]] const fs::path& path() const { return path_; }

    fs::path write(const std::string& name, const std::string& content) const {
        const fs::path p = path_ / name;
        std::ofstream(p, std::ios::binary) << content;
        return p;
    }

private:
    fs::path path_;
};

TEST(BitsPerBase, Examples) {
    EXPECT_EQ(format_ratio(bits_per_base(29718, 121024)), "1.9644");
    EXPECT_EQ(format_ratio(bits_per_base(2342, 9647)), "1.9422");
    EXPECT_EQ(bits_per_base(0, 100), 0.0);
    try {
        (void)bits_per_base(10, 0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DivisionByZero);
    }
}

TEST(Manifest, Parse) {
    std::istringstream in(
        "# comment\n"
        "\n"
        "chmpxx\tchmpxx.seq\t121024\n"
        "abs\t/data/x.seq\n"
        "hashed\th.seq\t\t" + std::string(64, 'A') + "\r\n");
    const auto entries = parse_manifest(in, "/corpus");
    ASSERT_EQ(entries.size(), 3u);
    EXPECT_EQ(entries[0].name, "chmpxx");
    EXPECT_EQ(entries[0].path, fs::path("/corpus/chmpxx.seq"));
    EXPECT_EQ(entries[0].expected_bases, 121024u);
    EXPECT_EQ(entries[1].path, fs::path("/data/x.seq"));
    EXPECT_FALSE(entries[1].expected_bases);
    EXPECT_FALSE(entries[2].expected_bases);
    EXPECT_EQ(entries[2].expected_sha256, std::string(64, 'a'));
}

TEST(Manifest, SyntaxErrors) {
    for (const char* bad : {"onlyname\n", "a\tb\tnotanumber\n", "a\tb\t1\tnothex\n", "\tpath\n", "a\tb\t1\t2\t3\n"}) {
        std::istringstream in(bad);
        try {
            (void)parse_manifest(in);
            FAIL() << bad;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::ManifestSyntax) << bad;
        }
    }
}

TEST(Sha256, KnownVector) {
    const std::string abc = "abc";
    EXPECT_EQ(sha256_hex(as_bytes(abc)), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(RunCorpus, EmptyManifest) {
    EXPECT_TRUE(run_corpus({}, {}).empty());
    EXPECT_EQ(format_report({}), "name\tbase_number\tprecoded_bytes\tfile_size_bytes\tfile_size_bits\tr_bar\tencode_ms\t"
                                 "decode_ms\trepeats\tstatus\n");
}

TEST(RunCorpus, RowsAndFailures) {
    TempDir dir;
    std::mt19937_64 rng(71);
    const std::string seq = testing::random_sequence(rng, {30000, 0.05, false, true});
    const auto good = dir.write("good.seq", seq);
    const auto bad = dir.write("bad.seq", "ACGTXX");
    const std::uint64_t bases = normalize(as_bytes(seq)).size();

    std::vector<CorpusEntry> manifest{
        {"good", good, bases, sha256_hex(as_bytes(seq))},
        {"wrongcount", good, bases + 1, std::nullopt},
        {"missing", dir.path() / "nope.seq", std::nullopt, std::nullopt},
        {"badsymbol", bad, std::nullopt, std::nullopt},
        {"badhash", good, std::nullopt, std::string(64, '0')},
    };
    BenchOptions opts;
    opts.repeat = 3;
    const auto rows = run_corpus(manifest, opts);
    ASSERT_EQ(rows.size(), 5u);
    EXPECT_FALSE(rows[0].failed) << rows[0].failure;
    EXPECT_EQ(rows[0].base_count, bases);
    EXPECT_EQ(rows[0].repeats, 3u);
    EXPECT_NEAR(rows[0].r_bar, 8.0 * static_cast<double>(rows[0].final_bytes) / static_cast<double>(bases), 1e-12);
    EXPECT_GT(rows[0].encode_ms, 0.0);
    for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_TRUE(rows[i].failed) << rows[i].name;

    const std::string report = format_report(rows);
    EXPECT_NE(report.find("FAILED"), std::string::npos);
    EXPECT_NE(report.find("Average\t"), std::string::npos);
    const std::string text = format_report(rows, ReportStyle::Aligned);
    EXPECT_NE(text.find("Average"), std::string::npos);
    EXPECT_EQ(text.find('\t'), std::string::npos);
}

TEST(RunCorpus, StageTwoOffSizeLaw) {
    TempDir dir;
    std::mt19937_64 rng(72);
    const auto bases = testing::random_acgt(rng, 10001);
    const auto path = dir.write("acgt.seq", to_string(bases));
    BenchOptions opts;
    opts.stage2 = false;
    opts.repeat = 1;
    const std::vector<CorpusEntry> manifest{{"acgt", path, std::nullopt, std::nullopt}};
    const auto rows = run_corpus(manifest, opts);
    ASSERT_FALSE(rows[0].failed);
    EXPECT_EQ(rows[0].precoded_bytes, 10001u / 3 + 10001u % 3);
    EXPECT_EQ(rows[0].final_bytes, rows[0].precoded_bytes + 18);
}

TEST(RunCorpus, UniformRandomSequenceRatio) {
    std::mt19937_64 rng(73);
    const std::string seq = to_string(testing::random_acgt(rng, 100000));
    BenchOptions opts;
    opts.repeat = 1;
    const BenchRow row = bench_bytes("uniform", as_bytes(seq), opts);
    ASSERT_FALSE(row.failed);
    // Near-uniform literals cost about 6 code bits plus a flag bit per three bases.
    EXPECT_GE(row.r_bar, 2.30);
    EXPECT_LE(row.r_bar, 2.50);
}

TEST(Report, SingleRow) {
    BenchRow row;
    row.name = "x";
    row.base_count = 9647;
    row.precoded_bytes = 3300;
    row.final_bytes = 2342;
    row.r_bar = bits_per_base(2342, 9647);
    row.repeats = 5;
    const std::string report = format_report(std::vector<BenchRow>{row});
    std::istringstream lines(report);
    std::string header, line, avg;
    std::getline(lines, header);
    std::getline(lines, line);
    std::getline(lines, avg);
    EXPECT_EQ(line.substr(0, line.find("\t0.000")), "x\t9647\t3300\t2342\t18736\t1.9422");
    EXPECT_EQ(avg.substr(0, 8), "Average\t");
}

}  // namespace
}  // namespace lutz::bench
