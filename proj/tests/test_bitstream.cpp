#include <catch2/catch_amalgamated.hpp>

#include "blc/bitstream.hpp"
#include "blc/rng.hpp"
#include "support/oracles.hpp"

using namespace blc;

TEST_CASE("gamma length matches the counting oracle") {
    for (std::uint64_t n : {1ull, 2ull, 3ull, 4ull, 15ull, 16ull, 17ull, 64ull, 1000ull,
                            (1ull << 32) + 5}) {
        CHECK(gamma_bit_length(n) == oracle::gamma_length(n));
    }
    CHECK(gamma_bit_length(64) == 13);
    CHECK(gamma_bit_length(4) == 5);
    CHECK(gamma_bit_length(16) == 9);
}

TEST_CASE("gamma round trips and is prefix-decodable") {
    SeededRng rng(31);
    BitWriter writer;
    std::vector<std::uint64_t> values;
    for (int i = 0; i < 500; ++i) {
        const std::uint64_t v = 1 + rng.below((std::uint64_t{1} << 40) - 1);
        values.push_back(v);
        writer.put_gamma(v);
    }
    std::uint64_t expected_bits = 0;
    for (std::uint64_t v : values) expected_bits += gamma_bit_length(v);

    BitBuffer buf = writer.take();
    CHECK(buf.bit_length == expected_bits);

    BitReader reader(buf);
    for (std::uint64_t v : values) CHECK(reader.get_gamma() == v);
    CHECK(reader.position() == expected_bits);
}

TEST_CASE("bits pack MSB-first") {
    BitWriter writer;
    writer.put_bits(0b1011, 4);
    writer.put_bits(0b0, 1);
    writer.put_bits(0xff, 8);
    BitBuffer buf = writer.take();
    CHECK(buf.bit_length == 13);
    REQUIRE(buf.bytes.size() == 2);
    // 1011 0 11111111 000 -> 0xB7 0xF8
    CHECK(buf.bytes[0] == 0xb7);
    CHECK(buf.bytes[1] == 0xf8);
}

TEST_CASE("reading past the buffer reports the bit offset") {
    BitWriter writer;
    writer.put_bits(0x5, 3);
    BitBuffer buf = writer.take();
    BitReader reader(buf);
    reader.get_bits(8);  // padded byte is still readable
    try {
        reader.get_bit();
        FAIL("expected DecodeError");
    } catch (const DecodeError& e) {
        CHECK(e.bit_offset == 8);
        CHECK(std::string(e.what()).find("bit offset 8") != std::string::npos);
    }
}

TEST_CASE("absurd gamma prefixes are rejected") {
    BitBuffer zeros;
    zeros.bytes.assign(16, 0x00);
    zeros.bit_length = 128;
    BitReader reader(zeros);
    CHECK_THROWS_AS(reader.get_gamma(), DecodeError);
}
