#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "blc/bitstream.hpp"

namespace blc::lz {

/// Self-delimiting LZ77 stream: gamma(raw_length + 1), then tokens until the
/// raw length is reached. Token = flag bit 0 + 8-bit literal, or flag bit 1 +
/// gamma(distance) + gamma(match_length - 2); matches are >= 3 bytes and may
/// overlap their source.
BitBuffer compress(std::span<const std::uint8_t> data);

/// Inverse of compress; ignores trailing junk bits. Throws DecodeError.
std::vector<std::uint8_t> decompress(const BitBuffer& stream);

/// Bits the stream spends before the first token.
std::uint64_t header_bit_length(std::size_t raw_length);

}  // namespace blc::lz
