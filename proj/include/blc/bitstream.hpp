#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace blc {

/// Bit sequence packed MSB-first into bytes, plus its exact length in bits.
/// The last byte is zero-padded. `bytes` may hold more bits than
/// `bit_length`: a self-delimiting decoder stops on its own.
struct BitBuffer {
    std::vector<std::uint8_t> bytes;
    std::uint64_t bit_length = 0;
};

/// Malformed or truncated stream; carries the bit offset of the failure.
class DecodeError : public std::runtime_error {
public:
    DecodeError(const std::string& what, std::uint64_t offset)
        : std::runtime_error(what + " (bit offset " + std::to_string(offset) + ")"),
          bit_offset(offset) {}

    std::uint64_t bit_offset;
};

// |gamma(n)| = 2*floor(log2 n) + 1, n >= 1
inline unsigned gamma_bit_length(std::uint64_t n) {
    return 2u * static_cast<unsigned>(std::bit_width(n) - 1) + 1u;
}

class BitWriter {
public:
    void put_bit(bool bit) {
        const std::size_t byte = static_cast<std::size_t>(buf_.bit_length >> 3);
        if (byte == buf_.bytes.size()) buf_.bytes.push_back(0);
        if (bit) buf_.bytes[byte] |= static_cast<std::uint8_t>(0x80u >> (buf_.bit_length & 7));
        ++buf_.bit_length;
    }

    // writes the `count` low bits of `value`, most significant first
    void put_bits(std::uint64_t value, unsigned count) {
        for (unsigned i = count; i-- > 0;) put_bit((value >> i) & 1u);
    }

    // Elias gamma: floor(log2 n) zeros, then n in binary; n >= 1
    void put_gamma(std::uint64_t n) {
        const unsigned width = static_cast<unsigned>(std::bit_width(n));
        for (unsigned i = 1; i < width; ++i) put_bit(false);
        put_bits(n, width);
    }

    std::uint64_t bit_count() const { return buf_.bit_length; }

    BitBuffer take() { return std::move(buf_); }

private:
    BitBuffer buf_;
};

class BitReader {
public:
    explicit BitReader(const BitBuffer& buf)
        : bytes_(buf.bytes.data()), limit_(buf.bytes.size() * 8) {}

    BitReader(const std::uint8_t* bytes, std::uint64_t bit_limit)
        : bytes_(bytes), limit_(bit_limit) {}

    bool get_bit() {
        if (pos_ >= limit_) throw DecodeError("unexpected end of stream", pos_);
        const bool bit = (bytes_[pos_ >> 3] >> (7 - (pos_ & 7))) & 1u;
        ++pos_;
        return bit;
    }

    std::uint64_t get_bits(unsigned count) {
        std::uint64_t value = 0;
        for (unsigned i = 0; i < count; ++i) value = (value << 1) | (get_bit() ? 1u : 0u);
        return value;
    }

    std::uint64_t get_gamma() {
        unsigned zeros = 0;
        while (!get_bit()) {
            if (++zeros > 63) throw DecodeError("gamma code too long", pos_);
        }
        return (std::uint64_t{1} << zeros) | get_bits(zeros);
    }

    std::uint64_t position() const { return pos_; }

private:
    const std::uint8_t* bytes_;
    std::uint64_t limit_;
    std::uint64_t pos_ = 0;
};

}  // namespace blc
