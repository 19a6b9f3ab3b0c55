#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>

#include "holz/bitio.hpp"

using namespace holz;

namespace {

std::string bits_of(const BitStream& s) {
    std::string out;
    BitStream copy = s;
    copy.seek(0);
    for (size_t i = 0; i < copy.bit_size(); ++i) {
        out.push_back(copy.get_bit() ? '1' : '0');
    }
    return out;
}

std::string gamma_str(uint64_t x) {
    BitStream s;
    gamma_encode(x, s);
    return bits_of(s);
}

std::string delta_str(uint64_t x) {
    BitStream s;
    delta_encode(x, s);
    return bits_of(s);
}

} // namespace

TEST_CASE("gamma codewords match the textbook table") {
    CHECK(gamma_str(1) == "1");
    CHECK(gamma_str(2) == "010");
    CHECK(gamma_str(3) == "011");
    CHECK(gamma_str(5) == "00101");
    CHECK(gamma_str(4) == "00100");
}

TEST_CASE("delta codewords match the textbook table") {
    CHECK(delta_str(1) == "1");
    CHECK(delta_str(2) == "0100");
    CHECK(delta_str(3) == "0101");
    CHECK(delta_str(17) == "001010001");
}

TEST_CASE("encoding zero is rejected") {
    BitStream s;
    CHECK_THROWS_AS(gamma_encode(0, s), std::invalid_argument);
    CHECK_THROWS_AS(delta_encode(0, s), std::invalid_argument);
    CHECK_THROWS_AS(signed_encode(0, CodeKind::gamma, s), std::invalid_argument);
    CHECK_THROWS_AS(code_len(CodeKind::gamma, 0), std::invalid_argument);
}

TEST_CASE("binary length cost model emits nothing and prices ceil(log2(x+1))") {
    BitStream s;
    CHECK_THROWS_AS(code_encode(CodeKind::binary_length, 3, s), std::invalid_argument);
    CHECK(!code_decodable(CodeKind::binary_length));
    CHECK(code_len(CodeKind::binary_length, 1) == 1);
    CHECK(code_len(CodeKind::binary_length, 3) == 2);
    CHECK(code_len(CodeKind::binary_length, 7) == 3);
    CHECK(code_len(CodeKind::binary_length, 8) == 4);
}

TEST_CASE("code_len matches emitted widths and is monotone") {
    CHECK(code_len(CodeKind::gamma, 1) == 1);
    CHECK(code_len(CodeKind::delta, 17) == 9);
    for (CodeKind kind : {CodeKind::gamma, CodeKind::delta}) {
        unsigned prev = 0;
        for (uint64_t x = 1; x <= 4096; ++x) {
            BitStream s;
            code_encode(kind, x, s);
            CHECK(s.bit_size() == code_len(kind, x));
            CHECK(code_len(kind, x) >= prev);
            prev = code_len(kind, x);
        }
    }
    unsigned prev = 0;
    for (uint64_t x = 1; x <= 4096; ++x) {
        CHECK(code_len(CodeKind::binary_length, x) >= prev);
        prev = code_len(CodeKind::binary_length, x);
    }
}

TEST_CASE("round-trip with exact consumption over a dense and a random range") {
    for (CodeKind kind : {CodeKind::gamma, CodeKind::delta}) {
        BitStream s;
        for (uint64_t x = 1; x <= (1u << 14); ++x) {
            code_encode(kind, x, s);
        }
        for (uint64_t x = 1; x <= (1u << 14); ++x) {
            size_t before = s.cursor();
            CHECK(code_decode(kind, s) == x);
            CHECK(s.cursor() - before == code_len(kind, x));
        }
        CHECK(s.bits_left() == 0);

        std::mt19937_64 rng(7);
        std::uniform_int_distribution<uint64_t> dist(1, 1'000'000);
        std::vector<uint64_t> values(2000);
        BitStream r;
        for (auto& v : values) {
            v = dist(rng);
            code_encode(kind, v, r);
        }
        for (uint64_t v : values) {
            CHECK(code_decode(kind, r) == v);
        }
    }
}

TEST_CASE("signed layout: sign bit first, zero means positive") {
    BitStream pos;
    signed_encode(+1, CodeKind::gamma, pos);
    CHECK(bits_of(pos) == "01");
    BitStream neg;
    signed_encode(-1, CodeKind::gamma, neg);
    CHECK(bits_of(neg) == "11");

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int64_t> dist(-1'000'000, 1'000'000);
    for (CodeKind kind : {CodeKind::gamma, CodeKind::delta}) {
        BitStream s;
        std::vector<int64_t> values;
        for (int i = 0; i < 2000; ++i) {
            int64_t off = dist(rng);
            if (off == 0) off = 1;
            values.push_back(off);
            signed_encode(off, kind, s);
        }
        for (int64_t off : values) {
            CHECK(signed_decode(kind, s) == off);
        }
    }
}

TEST_CASE("truncated streams raise DecodeError") {
    BitStream s;
    gamma_encode(300, s);
    BitStream cut = BitStream::from_bytes(s.bytes(), s.bit_size() - 3);
    CHECK_THROWS_AS(gamma_decode(cut), DecodeError);
    BitStream zeros = BitStream::from_bytes(std::vector<uint8_t>(12, 0), 96);
    CHECK_THROWS_AS(gamma_decode(zeros), DecodeError);
}

TEST_CASE("cost classes partition the magnitude range with strictly increasing bits") {
    auto g7 = cost_classes(CodeKind::gamma, 7);
    REQUIRE(g7.size() == 3);
    CHECK((g7[0].lo == 1 && g7[0].hi == 1 && g7[0].bits == 1));
    CHECK((g7[1].lo == 2 && g7[1].hi == 3 && g7[1].bits == 3));
    CHECK((g7[2].lo == 4 && g7[2].hi == 7 && g7[2].bits == 5));

    auto b7 = cost_classes(CodeKind::binary_length, 7);
    REQUIRE(b7.size() == 3);
    CHECK((b7[0].lo == 1 && b7[0].hi == 1 && b7[0].bits == 1));
    CHECK((b7[1].lo == 2 && b7[1].hi == 3 && b7[1].bits == 2));
    CHECK((b7[2].lo == 4 && b7[2].hi == 7 && b7[2].bits == 3));

    auto g1 = cost_classes(CodeKind::gamma, 1);
    REQUIRE(g1.size() == 1);
    CHECK((g1[0].lo == 1 && g1[0].hi == 1 && g1[0].bits == 1));

    for (CodeKind kind : {CodeKind::gamma, CodeKind::delta, CodeKind::binary_length}) {
        for (uint64_t max : {1ull, 2ull, 1000ull, 123456ull}) {
            auto classes = cost_classes(kind, max);
            uint64_t expect_lo = 1;
            unsigned prev_bits = 0;
            for (const auto& c : classes) {
                CHECK(c.lo == expect_lo);
                CHECK(c.hi >= c.lo);
                CHECK(c.bits > prev_bits);
                CHECK(code_len(kind, c.lo) == c.bits);
                CHECK(code_len(kind, c.hi) == c.bits);
                prev_bits = c.bits;
                expect_lo = c.hi + 1;
            }
            CHECK(expect_lo == max + 1);
        }
    }
}

TEST_CASE("bit stream survives byte boundaries and interleaved widths") {
    std::mt19937_64 rng(3);
    BitStream s;
    std::vector<std::pair<uint64_t, unsigned>> written;
    for (int i = 0; i < 5000; ++i) {
        unsigned width = 1 + static_cast<unsigned>(rng() % 33);
        uint64_t value = rng() & ((width == 64) ? ~0ull : ((1ull << width) - 1));
        written.emplace_back(value, width);
        s.put_bits(value, width);
    }
    // Padding bits in the final byte stay zero.
    if (s.bit_size() % 8 != 0) {
        uint8_t last = s.bytes().back();
        uint8_t mask = static_cast<uint8_t>(0xFFu >> (s.bit_size() % 8));
        CHECK((last & mask) == 0);
    }
    for (auto [value, width] : written) {
        CHECK(s.get_bits(width) == value);
    }
}
