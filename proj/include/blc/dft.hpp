#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace blc::dft {

using Complex = std::complex<double>;

// circle constant, double-precision 2*pi
inline constexpr double kTau = 6.283185307179586;

/// Unitary DFT truncated to the R lowest frequency indices 0..R-1:
/// out[k] = (1/sqrt(N)) * sum_x exp(-i*tau*k*x/N) * signal[x].
/// OpenMP-parallel over frequencies.
std::vector<Complex> forward(std::span<const Complex> signal, std::size_t retained);

/// Zero-pads `coeffs` to dimension N and applies the inverse unitary DFT.
/// OpenMP-parallel over samples.
std::vector<Complex> inverse(std::span<const Complex> coeffs, std::size_t dimension);

/// Serial reference implementations, one exponential per term. Kept as the
/// ground truth the table-driven parallel kernels are tested against.
std::vector<Complex> forward_ref(std::span<const Complex> signal, std::size_t retained);
std::vector<Complex> inverse_ref(std::span<const Complex> coeffs, std::size_t dimension);

}  // namespace blc::dft
