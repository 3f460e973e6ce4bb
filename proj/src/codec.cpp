#include "blc/codec.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "blc/dft.hpp"

namespace blc::codec {

namespace {

constexpr char kMagic[4] = {'B', 'L', 'C', '1'};

// Uniform zero-inclusive quantizer over [-A, A) with L = 2^(b/2) levels:
// index q = round((v + A) / step) clamped to [0, L-1], value = -A + q*step.
// q = L/2 reconstructs exactly 0, so absent frequency components cost
// nothing, which keeps distortion non-increasing in R at fixed b.
struct Quantizer {
    double scale;   // A, already rounded through float32 as stored
    double step;    // 2A / L
    std::uint64_t levels;

    Quantizer(float a, unsigned bits_per_component)
        : scale(a),
          step(2.0 * static_cast<double>(a) /
               static_cast<double>(std::uint64_t{1} << bits_per_component)),
          levels(std::uint64_t{1} << bits_per_component) {}

    std::uint64_t index(double v) const {
        if (step <= 0.0) return 0;
        const double q = std::floor((v + scale) / step + 0.5);
        if (q <= 0.0) return 0;
        if (q >= static_cast<double>(levels)) return levels - 1;
        return static_cast<std::uint64_t>(q);
    }

    double value(std::uint64_t q) const { return -scale + static_cast<double>(q) * step; }
};

float stored_scale(const std::vector<Complex>& coeffs) {
    double max_abs = 0.0;
    for (const Complex& c : coeffs) {
        max_abs = std::max(max_abs, std::abs(c.real()));
        max_abs = std::max(max_abs, std::abs(c.imag()));
    }
    float a = static_cast<float>(max_abs);
    // keep every component inside [-A, A] after the float32 rounding
    while (a < max_abs) a = std::nextafter(a, std::numeric_limits<float>::infinity());
    return a;
}

}  // namespace

void CodecParams::validate() const {
    if (n == 0) throw std::invalid_argument("codec: N must be >= 1");
    if (r == 0 || r > n) {
        throw std::invalid_argument("codec: R = " + std::to_string(r) + " out of range [1, " +
                                    std::to_string(n) + "]");
    }
    if (bits_per_amplitude < 4 || bits_per_amplitude % 2 != 0 || bits_per_amplitude > 64) {
        throw std::invalid_argument("codec: b = " + std::to_string(bits_per_amplitude) +
                                    " must be an even integer in [4, 64]");
    }
}

std::uint64_t header_bit_length(const CodecParams& p) {
    return gamma_bit_length(p.n) + gamma_bit_length(p.r) + gamma_bit_length(p.bits_per_amplitude) +
           32;
}

std::uint64_t stream_bit_length(const CodecParams& p) {
    return header_bit_length(p) + std::uint64_t{p.bits_per_amplitude} * p.r;
}

CodeStream encode(const StateVector& signal, const CodecParams& p) {
    p.validate();
    if (signal.dimension() != p.n) {
        throw std::invalid_argument("codec: signal dimension " +
                                    std::to_string(signal.dimension()) +
                                    " does not match N = " + std::to_string(p.n));
    }

    const std::vector<Complex> coeffs = dft::forward(signal.amplitudes, p.r);
    const float a = stored_scale(coeffs);
    const Quantizer quant(a, p.bits_per_amplitude / 2);

    BitWriter writer;
    writer.put_gamma(p.n);
    writer.put_gamma(p.r);
    writer.put_gamma(p.bits_per_amplitude);
    writer.put_bits(std::bit_cast<std::uint32_t>(a), 32);
    for (const Complex& c : coeffs) {
        writer.put_bits(quant.index(c.real()), p.bits_per_amplitude / 2);
        writer.put_bits(quant.index(c.imag()), p.bits_per_amplitude / 2);
    }

    CodeStream out = writer.take();
    if (out.bit_length != stream_bit_length(p)) {
        throw std::logic_error("codec: stream length does not match the header accounting");
    }
    return out;
}

DecodeResult decode_ex(const CodeStream& stream, std::optional<std::size_t> target_dim) {
    BitReader reader(stream);

    DecodeResult out;
    out.params.n = reader.get_gamma();
    out.params.r = reader.get_gamma();
    const std::uint64_t b = reader.get_gamma();
    if (b > 64) throw DecodeError("unreasonable bits-per-amplitude field", reader.position());
    out.params.bits_per_amplitude = static_cast<unsigned>(b);
    try {
        out.params.validate();
    } catch (const std::invalid_argument& e) {
        throw DecodeError(std::string("invalid header: ") + e.what(), reader.position());
    }

    out.scale = std::bit_cast<float>(static_cast<std::uint32_t>(reader.get_bits(32)));
    if (!std::isfinite(out.scale) || out.scale < 0.0f) {
        throw DecodeError("invalid quantizer scale", reader.position());
    }

    const Quantizer quant(out.scale, out.params.bits_per_amplitude / 2);
    std::vector<Complex> coeffs(out.params.r);
    for (Complex& c : coeffs) {
        const double re = quant.value(reader.get_bits(out.params.bits_per_amplitude / 2));
        const double im = quant.value(reader.get_bits(out.params.bits_per_amplitude / 2));
        c = Complex{re, im};
    }
    out.bits_consumed = reader.position();

    const std::size_t n = target_dim.value_or(out.params.n);
    if (n < out.params.r) {
        throw std::invalid_argument("codec: target dimension " + std::to_string(n) +
                                    " smaller than R = " + std::to_string(out.params.r));
    }
    out.signal = StateVector(dft::inverse(coeffs, n));
    return out;
}

StateVector decode(const CodeStream& stream, std::optional<std::size_t> target_dim) {
    return decode_ex(stream, target_dim).signal;
}

double relative_distortion(const StateVector& decoded, const StateVector& original) {
    if (decoded.dimension() != original.dimension()) {
        throw std::invalid_argument("distortion: dimension mismatch");
    }
    double err = 0.0;
    for (std::size_t i = 0; i < original.dimension(); ++i) {
        err += std::norm(decoded.amplitudes[i] - original.amplitudes[i]);
    }
    const double ref = original.norm();
    if (ref == 0.0) return err == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return std::sqrt(err) / ref;
}

MinimalEncoding minimal_encoding(const StateVector& signal, double distortion_budget) {
    if (!(distortion_budget > 0.0)) {
        throw std::invalid_argument("codec: distortion budget must be > 0");
    }
    const std::size_t n = signal.dimension();
    if (n == 0) throw std::invalid_argument("codec: signal has dimension 0");

    // One full transform serves every grid point: the retained coefficients
    // for (R, b) are its prefix, and the signal-domain L2 error equals the
    // coefficient-domain error (unitary inverse), so each candidate costs
    // O(R) instead of a decode.
    const std::vector<Complex> full = dft::forward(signal.amplitudes, n);

    std::vector<double> tail_energy(n + 1, 0.0);
    for (std::size_t k = n; k-- > 0;) tail_energy[k] = tail_energy[k + 1] + std::norm(full[k]);
    std::vector<double> prefix_max(n + 1, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        prefix_max[k + 1] = std::max({prefix_max[k], std::abs(full[k].real()),
                                      std::abs(full[k].imag())});
    }
    const double signal_norm = signal.norm();

    std::vector<unsigned> grid_bits;
    for (unsigned b = kMinBitsPerAmplitude; b <= kMaxBitsPerAmplitude; b += 2) {
        grid_bits.push_back(b);
    }

    struct Candidate {
        bool feasible = false;
        std::uint64_t bits = 0;
        double distortion = 0.0;
    };
    std::vector<Candidate> grid(n * grid_bits.size());

#pragma omp parallel for schedule(dynamic)
    for (std::int64_t ri = 0; ri < static_cast<std::int64_t>(n); ++ri) {
        const std::size_t r = static_cast<std::size_t>(ri) + 1;
        float a = static_cast<float>(prefix_max[r]);
        while (a < prefix_max[r]) a = std::nextafter(a, std::numeric_limits<float>::infinity());
        for (std::size_t bi = 0; bi < grid_bits.size(); ++bi) {
            const Quantizer quant(a, grid_bits[bi] / 2);
            double err = tail_energy[r];
            for (std::size_t k = 0; k < r; ++k) {
                const double dre = quant.value(quant.index(full[k].real())) - full[k].real();
                const double dim = quant.value(quant.index(full[k].imag())) - full[k].imag();
                err += dre * dre + dim * dim;
            }
            const double rel = signal_norm == 0.0
                                   ? (err == 0.0 ? 0.0 : std::numeric_limits<double>::infinity())
                                   : std::sqrt(err) / signal_norm;
            Candidate& c = grid[static_cast<std::size_t>(ri) * grid_bits.size() + bi];
            c.feasible = rel <= distortion_budget;
            c.distortion = rel;
            c.bits = stream_bit_length(CodecParams{n, r, grid_bits[bi]});
        }
    }

    // Deterministic selection after the parallel sweep: shortest stream,
    // ties to smaller R, then smaller b (the visit order).
    const Candidate* best = nullptr;
    CodecParams best_params;
    for (std::size_t ri = 0; ri < n; ++ri) {
        for (std::size_t bi = 0; bi < grid_bits.size(); ++bi) {
            const Candidate& c = grid[ri * grid_bits.size() + bi];
            if (!c.feasible) continue;
            if (best == nullptr || c.bits < best->bits) {
                best = &c;
                best_params = CodecParams{n, ri + 1, grid_bits[bi]};
            }
        }
    }
    if (best == nullptr) {
        throw std::runtime_error(
            "codec: no (R, b) grid point meets the distortion budget; increase the budget");
    }

    MinimalEncoding out;
    out.params = best_params;
    out.distortion = best->distortion;
    out.stream = encode(signal, best_params);
    return out;
}

void write_stream_file(const std::filesystem::path& path, const CodeStream& stream) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open for writing: " + path.string());
    file.write(kMagic, 4);
    std::uint8_t len[8];
    for (int i = 0; i < 8; ++i) len[i] = static_cast<std::uint8_t>(stream.bit_length >> (8 * i));
    file.write(reinterpret_cast<const char*>(len), 8);
    const std::size_t payload = (stream.bit_length + 7) / 8;
    if (payload > stream.bytes.size()) {
        throw std::invalid_argument("stream shorter than its declared bit length");
    }
    file.write(reinterpret_cast<const char*>(stream.bytes.data()),
               static_cast<std::streamsize>(payload));
    if (!file) throw std::runtime_error("write failed: " + path.string());
}

CodeStream read_stream_file(const std::filesystem::path& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open for reading: " + path.string());
    char magic[4];
    file.read(magic, 4);
    if (!file || std::memcmp(magic, kMagic, 4) != 0) {
        throw DecodeError("bad container magic", 0);
    }
    std::uint8_t len[8];
    file.read(reinterpret_cast<char*>(len), 8);
    if (!file) throw DecodeError("truncated container length", 32);

    CodeStream out;
    out.bit_length = 0;
    for (int i = 0; i < 8; ++i) out.bit_length |= std::uint64_t{len[i]} << (8 * i);
    const std::size_t payload = static_cast<std::size_t>((out.bit_length + 7) / 8);
    out.bytes.resize(payload);
    file.read(reinterpret_cast<char*>(out.bytes.data()), static_cast<std::streamsize>(payload));
    if (static_cast<std::size_t>(file.gcount()) != payload) {
        throw DecodeError("container payload truncated",
                          96 + static_cast<std::uint64_t>(file.gcount()) * 8);
    }
    return out;
}

}  // namespace blc::codec
