#pragma once

#include <cmath>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>

#include "blc/bitstream.hpp"
#include "blc/codec.hpp"

namespace blc::entropy {

/// A compressor maps bytes to a self-delimiting bit sequence whose length is
/// the entropy estimate. Implementations must be stateless: compress may be
/// invoked concurrently.
class Compressor {
public:
    virtual ~Compressor() = default;
    virtual std::string name() const = 0;
    virtual BitBuffer compress(std::span<const std::uint8_t> data) const = 0;
};

/// Built-in lossless adapter (LZ77 with Elias-gamma fields).
class LzCompressor final : public Compressor {
public:
    std::string name() const override { return "lz77-gamma"; }
    BitBuffer compress(std::span<const std::uint8_t> data) const override;
};

/// Lossy adapter over the transform codec. Bytes are little-endian float64
/// (re, im) pairs; compress returns the minimal encoding within the declared
/// distortion budget.
class DftCodecCompressor final : public Compressor {
public:
    explicit DftCodecCompressor(double distortion_budget = codec::kDefaultDistortionBudget)
        : budget_(distortion_budget) {}

    std::string name() const override { return "dft-codec"; }
    BitBuffer compress(std::span<const std::uint8_t> data) const override;

    double distortion_budget() const { return budget_; }

private:
    double budget_;
};

/// H(x) = bit length of the compressed, self-delimiting representation.
double entropy_bits(std::span<const std::uint8_t> x, const Compressor& c);

/// p = 2^-h carried in the log domain; linear() underflows to 0 for h beyond
/// roughly 1074 bits, the log2 field never does.
struct LogProb {
    double log2_value = 0.0;
    double linear() const { return std::exp2(log2_value); }
};

LogProb solomonoff_probability(double h_bits);

/// Incompressible up to the header: H(x) >= 8*|x|.
bool is_random(std::span<const std::uint8_t> x, const Compressor& c);

enum class ConditionalMode {
    Delta,   // H(x) - H(y), clamped at 0
    Concat,  // H(y||x) - H(y), clamped at 0
};

double conditional_entropy(std::span<const std::uint8_t> x, std::span<const std::uint8_t> y,
                           const Compressor& c, ConditionalMode mode);

struct EntropyReport {
    double h_x = 0.0;
    std::optional<double> h_y;
    std::optional<double> h_x_given_y;
    std::optional<double> mutual;  // h_x - h_x_given_y; may dip below zero
    std::string compressor;
};

EntropyReport make_report(std::span<const std::uint8_t> x,
                          std::optional<std::span<const std::uint8_t>> y, const Compressor& c,
                          ConditionalMode mode = ConditionalMode::Delta);

std::string report_to_json_string(const EntropyReport& report, int indent = 2);

}  // namespace blc::entropy
