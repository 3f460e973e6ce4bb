#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>

#include "blc/bitstream.hpp"
#include "blc/statevec.hpp"

namespace blc::codec {

/// Transform-coder parameters: N samples in, R retained frequencies,
/// b bits per complex amplitude (b/2 per real/imaginary component).
struct CodecParams {
    std::size_t n = 0;
    std::size_t r = 0;
    unsigned bits_per_amplitude = 0;

    void validate() const;  // throws std::invalid_argument
};

/// Self-delimiting stream: Elias-gamma header (N, R, b) + 32-bit quantizer
/// scale + b*R payload bits. Its length in bits is the state's entropy.
using CodeStream = BitBuffer;

struct DecodeResult {
    StateVector signal;
    CodecParams params;  // as read from the header
    float scale = 0.0f;  // quantizer range A
    std::uint64_t bits_consumed = 0;
};

std::uint64_t header_bit_length(const CodecParams& p);
std::uint64_t stream_bit_length(const CodecParams& p);  // header + b*r

CodeStream encode(const StateVector& signal, const CodecParams& p);

/// Reads one self-delimiting stream from the front of `stream.bytes`;
/// trailing junk is ignored. `target_dim` overrides the header's N for
/// super-resolution decompression. Throws DecodeError on malformed input.
DecodeResult decode_ex(const CodeStream& stream, std::optional<std::size_t> target_dim = {});
StateVector decode(const CodeStream& stream, std::optional<std::size_t> target_dim = {});

/// ||decoded - original|| / ||original||; 0/0 counts as 0.
double relative_distortion(const StateVector& decoded, const StateVector& original);

inline constexpr unsigned kMinBitsPerAmplitude = 4;
inline constexpr unsigned kMaxBitsPerAmplitude = 32;
inline constexpr double kDefaultDistortionBudget = 1e-3;

struct MinimalEncoding {
    CodeStream stream;
    CodecParams params;
    double distortion = 0.0;
};

/// Shortest stream over the grid R in 1..N, b in {4, 6, ..., 32} whose
/// decode stays within the relative-L2 budget; ties break to smaller R,
/// then smaller b. Grid points are evaluated in parallel; the winner is
/// picked in a deterministic serial pass.
MinimalEncoding minimal_encoding(const StateVector& signal,
                                 double distortion_budget = kDefaultDistortionBudget);

/// File container: magic "BLC1", 8-byte little-endian bit_length, payload
/// bits packed MSB-first and zero-padded to a byte boundary.
void write_stream_file(const std::filesystem::path& path, const CodeStream& stream);
CodeStream read_stream_file(const std::filesystem::path& path);

}  // namespace blc::codec
