#include <gtest/gtest.h>

#include <omp.h>

#include <random>

#include "generators.hpp"
#include "lutz/error.hpp"
#include "lutz/kernels.hpp"
#include "lutz/precoder.hpp"

namespace lutz {
namespace {

class Kernels : public ::testing::Test {
protected:
    void SetUp() override {
        saved_ = omp_get_max_threads();
        omp_set_num_threads(4);
    }
    void TearDown() override { omp_set_num_threads(saved_); }

private:
    int saved_ = 1;
};

TEST_F(Kernels, PrecodeSplitPointsAreIdleStates) {
    std::mt19937_64 rng(21);
    for (double density : {0.0, 0.05, 0.5, 0.9}) {
        const auto bases = testing::random_bases(rng, 5000, density);
        const auto points = kernels::precode_split_points(bases, 97);
        ASSERT_GE(points.size(), 2u);
        EXPECT_EQ(points.front(), 0u);
        EXPECT_EQ(points.back(), bases.size());

        Precoder p;
        auto sink = [](const PrecodedToken&) {};
        std::size_t next = 1;
        for (std::size_t i = 0; i < bases.size(); ++i) {
            if (next + 1 < points.size() && i == points[next]) {
                EXPECT_TRUE(p.idle()) << "split at " << i;
                ++next;
            }
            p.push(bases[i], sink);
        }
        EXPECT_EQ(next + 1, points.size());
    }
}

TEST_F(Kernels, PrecodeParallelMatchesSerial) {
    std::mt19937_64 rng(22);
    std::uniform_int_distribution<std::size_t> len(0, 20000);
    std::uniform_real_distribution<double> density(0.0, 0.9);
    for (int iter = 0; iter < 200; ++iter) {
        const auto bases = testing::random_bases(rng, len(rng), density(rng));
        const std::string serial = kernels::precode_serial(bases);
        for (std::size_t chunk : {1, 2, 3, 7, 64, 1000}) {
            ASSERT_EQ(kernels::precode_parallel(bases, chunk), serial) << "chunk " << chunk;
        }
    }
}

TEST_F(Kernels, PrecodeParallelLongNRunAcrossChunks) {
    std::vector<Base> bases(10, Base::A);
    bases.insert(bases.end(), 1000, Base::N);
    bases.insert(bases.end(), 5, Base::C);
    EXPECT_EQ(kernels::precode_parallel(bases, 16), "!!!A/1000/QCC");
}

TEST_F(Kernels, PredecodeParallelMatchesSerial) {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<std::size_t> len(0, 20000);
    std::uniform_real_distribution<double> density(0.0, 0.9);
    for (int iter = 0; iter < 200; ++iter) {
        const auto bases = testing::random_bases(rng, len(rng), density(rng));
        const std::string text = kernels::precode_serial(bases);
        for (std::size_t chunk : {1, 2, 5, 64, 999}) {
            ASSERT_EQ(kernels::predecode_parallel(as_bytes(text), bases.size(), chunk), bases) << "chunk " << chunk;
        }
    }
}

TEST_F(Kernels, PredecodeParallelReportsFirstErrorLikeSerial) {
    const std::vector<std::string> corrupt{"!!!!/12/!!!!a!!!!/0/", "!!!!/12!!!", "!!!!!!!!!!!!/3", "!!!!/5/!!!!!!!c!!!!!/7/"};
    for (const auto& text : corrupt) {
        ErrorCode serial_code{};
        std::optional<std::uint64_t> serial_offset;
        try {
            (void)kernels::predecode_serial(as_bytes(text));
            FAIL() << text;
        } catch (const Error& e) {
            serial_code = e.code();
            serial_offset = e.offset();
        }
        for (std::size_t chunk : {1, 2, 3, 4}) {
            try {
                (void)kernels::predecode_parallel(as_bytes(text), std::numeric_limits<std::uint64_t>::max(), chunk);
                FAIL() << text;
            } catch (const Error& e) {
                EXPECT_EQ(e.code(), serial_code) << text << " chunk " << chunk;
                EXPECT_EQ(e.offset(), serial_offset) << text << " chunk " << chunk;
            }
        }
    }
}

TEST_F(Kernels, PredecodeParallelHonorsBaseLimit) {
    const std::string text(1000, '!');  // 3000 bases
    EXPECT_EQ(kernels::predecode_parallel(as_bytes(text), 3000, 10).size(), 3000u);
    try {
        (void)kernels::predecode_parallel(as_bytes(text), 2999, 10);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::BaseCountMismatch);
    }
}

TEST_F(Kernels, EmptyInput) {
    EXPECT_EQ(kernels::precode_parallel({}, 4), "");
    EXPECT_TRUE(kernels::predecode_parallel({}, 0, 4).empty());
}

}  // namespace
}  // namespace lutz
