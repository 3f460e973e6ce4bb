#include "blc/entropy.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "blc/lz77.hpp"
#include "blc/statevec.hpp"

namespace blc::entropy {

BitBuffer LzCompressor::compress(std::span<const std::uint8_t> data) const {
    return lz::compress(data);
}

BitBuffer DftCodecCompressor::compress(std::span<const std::uint8_t> data) const {
    if (data.empty() || data.size() % 16 != 0) {
        throw std::invalid_argument(
            "dft-codec compressor expects non-empty little-endian float64 (re, im) pairs");
    }
    StateVector signal = StateVector::zeros(data.size() / 16);
    for (std::size_t i = 0; i < signal.dimension(); ++i) {
        double re = 0.0;
        double im = 0.0;
        std::memcpy(&re, data.data() + 16 * i, 8);
        std::memcpy(&im, data.data() + 16 * i + 8, 8);
        signal.amplitudes[i] = Complex{re, im};
    }
    return codec::minimal_encoding(signal, budget_).stream;
}

double entropy_bits(std::span<const std::uint8_t> x, const Compressor& c) {
    return static_cast<double>(c.compress(x).bit_length);
}

LogProb solomonoff_probability(double h_bits) {
    if (!(h_bits >= 0.0)) throw std::invalid_argument("entropy must be >= 0 bits");
    return LogProb{-h_bits};
}

bool is_random(std::span<const std::uint8_t> x, const Compressor& c) {
    return entropy_bits(x, c) >= 8.0 * static_cast<double>(x.size());
}

double conditional_entropy(std::span<const std::uint8_t> x, std::span<const std::uint8_t> y,
                           const Compressor& c, ConditionalMode mode) {
    double value = 0.0;
    switch (mode) {
        case ConditionalMode::Delta:
            value = entropy_bits(x, c) - entropy_bits(y, c);
            break;
        case ConditionalMode::Concat: {
            std::vector<std::uint8_t> joined(y.begin(), y.end());
            joined.insert(joined.end(), x.begin(), x.end());
            value = entropy_bits(joined, c) - entropy_bits(y, c);
            break;
        }
    }
    return std::max(0.0, value);
}

EntropyReport make_report(std::span<const std::uint8_t> x,
                          std::optional<std::span<const std::uint8_t>> y, const Compressor& c,
                          ConditionalMode mode) {
    EntropyReport report;
    report.compressor = c.name();
    report.h_x = entropy_bits(x, c);
    if (y) {
        report.h_y = entropy_bits(*y, c);
        report.h_x_given_y = conditional_entropy(x, *y, c, mode);
        report.mutual = report.h_x - *report.h_x_given_y;
    }
    return report;
}

std::string report_to_json_string(const EntropyReport& report, int indent) {
    nlohmann::json j;
    j["h_x"] = report.h_x;
    if (report.h_y) j["h_y"] = *report.h_y;
    if (report.h_x_given_y) j["h_x_given_y"] = *report.h_x_given_y;
    if (report.mutual) j["mutual"] = *report.mutual;
    j["compressor"] = report.compressor;
    return j.dump(indent);
}

}  // namespace blc::entropy
