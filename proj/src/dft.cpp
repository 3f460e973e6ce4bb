#include "blc/dft.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace blc::dft {

namespace {

void check_args(std::size_t n, std::size_t r) {
    if (n == 0) throw std::invalid_argument("signal has dimension 0");
    if (r == 0 || r > n) {
        throw std::invalid_argument("retained frequency count " + std::to_string(r) +
                                    " out of range [1, " + std::to_string(n) + "]");
    }
}

// w[j] = exp(sign * i * tau * j / n); the kernels index it by (k*x) mod n so
// every twiddle is evaluated at an exactly reduced angle.
std::vector<Complex> unit_roots(std::size_t n, double sign) {
    std::vector<Complex> w(n);
    for (std::size_t j = 0; j < n; ++j) {
        w[j] = std::polar(1.0, sign * kTau * static_cast<double>(j) / static_cast<double>(n));
    }
    return w;
}

}  // namespace

std::vector<Complex> forward(std::span<const Complex> signal, std::size_t retained) {
    const std::size_t n = signal.size();
    check_args(n, retained);
    const std::vector<Complex> w = unit_roots(n, -1.0);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));

    std::vector<Complex> out(retained);
#pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(retained); ++k) {
        Complex acc{0.0, 0.0};
        std::size_t idx = 0;
        const std::size_t step = static_cast<std::size_t>(k);
        for (std::size_t x = 0; x < n; ++x) {
            acc += w[idx] * signal[x];
            idx += step;
            if (idx >= n) idx -= n;
        }
        out[static_cast<std::size_t>(k)] = acc * scale;
    }
    return out;
}

std::vector<Complex> inverse(std::span<const Complex> coeffs, std::size_t dimension) {
    const std::size_t r = coeffs.size();
    check_args(dimension, r);
    const std::vector<Complex> w = unit_roots(dimension, 1.0);
    const double scale = 1.0 / std::sqrt(static_cast<double>(dimension));

    std::vector<Complex> out(dimension);
#pragma omp parallel for schedule(static)
    for (std::int64_t x = 0; x < static_cast<std::int64_t>(dimension); ++x) {
        Complex acc{0.0, 0.0};
        std::size_t idx = 0;
        const std::size_t step = static_cast<std::size_t>(x);
        for (std::size_t k = 0; k < r; ++k) {
            acc += w[idx] * coeffs[k];
            idx += step;
            if (idx >= dimension) idx -= dimension;
        }
        out[static_cast<std::size_t>(x)] = acc * scale;
    }
    return out;
}

std::vector<Complex> forward_ref(std::span<const Complex> signal, std::size_t retained) {
    const std::size_t n = signal.size();
    check_args(n, retained);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<Complex> out(retained);
    for (std::size_t k = 0; k < retained; ++k) {
        Complex acc{0.0, 0.0};
        for (std::size_t x = 0; x < n; ++x) {
            const double angle = -kTau * static_cast<double>((k * x) % n) / static_cast<double>(n);
            acc += std::polar(1.0, angle) * signal[x];
        }
        out[k] = acc * scale;
    }
    return out;
}

std::vector<Complex> inverse_ref(std::span<const Complex> coeffs, std::size_t dimension) {
    const std::size_t r = coeffs.size();
    check_args(dimension, r);
    const double scale = 1.0 / std::sqrt(static_cast<double>(dimension));
    std::vector<Complex> out(dimension);
    for (std::size_t x = 0; x < dimension; ++x) {
        Complex acc{0.0, 0.0};
        for (std::size_t k = 0; k < r; ++k) {
            const double angle =
                kTau * static_cast<double>((k * x) % dimension) / static_cast<double>(dimension);
            acc += std::polar(1.0, angle) * coeffs[k];
        }
        out[x] = acc * scale;
    }
    return out;
}

}  // namespace blc::dft
