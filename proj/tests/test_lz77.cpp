#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "blc/lz77.hpp"
#include "support/oracles.hpp"

using namespace blc;

namespace {

std::vector<std::uint8_t> bytes_of(const std::string& s) {
    return std::vector<std::uint8_t>(s.begin(), s.end());
}

}  // namespace

TEST_CASE("lz round trips") {
    std::vector<std::vector<std::uint8_t>> inputs;
    inputs.push_back({});
    inputs.push_back(bytes_of("a"));
    inputs.push_back(bytes_of("abcabcabcabcabc"));
    inputs.push_back(std::vector<std::uint8_t>(100000, 0));
    inputs.push_back(oracle::random_bytes(4096, 17));
    {
        std::vector<std::uint8_t> mixed = bytes_of("header");
        const std::vector<std::uint8_t> rnd = oracle::random_bytes(300, 5);
        mixed.insert(mixed.end(), rnd.begin(), rnd.end());
        mixed.insert(mixed.end(), mixed.begin(), mixed.end());  // doubled
        inputs.push_back(mixed);
    }

    for (const auto& input : inputs) {
        const BitBuffer stream = lz::compress(input);
        const std::vector<std::uint8_t> back = lz::decompress(stream);
        REQUIRE(back == input);
    }
}

TEST_CASE("lz streams are self-delimiting") {
    const std::vector<std::uint8_t> input = bytes_of("self delimiting self delimiting");
    BitBuffer stream = lz::compress(input);
    const std::vector<std::uint8_t> plain = lz::decompress(stream);
    for (std::uint8_t junk : oracle::random_bytes(16, 23)) stream.bytes.push_back(junk);
    CHECK(lz::decompress(stream) == plain);
}

TEST_CASE("empty input still costs its header") {
    const BitBuffer stream = lz::compress({});
    CHECK(stream.bit_length == lz::header_bit_length(0));
    CHECK(stream.bit_length > 0);
}

TEST_CASE("repetitive data compresses below raw size") {
    std::vector<std::uint8_t> ab;
    for (int i = 0; i < 32; ++i) {
        ab.push_back('a');
        ab.push_back('b');
    }
    const BitBuffer stream = lz::compress(ab);
    CHECK(stream.bit_length < 512);  // 64 raw bytes
}

TEST_CASE("random bytes do not compress") {
    const std::vector<std::uint8_t> rnd = oracle::random_bytes(64, 101);
    const BitBuffer stream = lz::compress(rnd);
    CHECK(stream.bit_length >= 512);
}

TEST_CASE("corrupt match fields are rejected with an offset") {
    // gamma(1+3)=00100 declares 3 bytes, then a match token pointing at an
    // empty window
    BitWriter writer;
    writer.put_gamma(4);
    writer.put_bit(true);
    writer.put_gamma(2);  // distance 2 into nothing
    writer.put_gamma(1);
    BitBuffer bad = writer.take();
    CHECK_THROWS_AS(lz::decompress(bad), DecodeError);
}
