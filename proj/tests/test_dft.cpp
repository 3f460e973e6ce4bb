#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include "blc/dft.hpp"
#include "blc/rng.hpp"

using namespace blc;
using Catch::Matchers::WithinAbs;

namespace {

std::vector<Complex> random_signal(std::size_t n, SeededRng& rng) {
    std::vector<Complex> v(n);
    for (Complex& a : v) a = Complex{rng.gaussian(), rng.gaussian()};
    return v;
}

double l2_norm(const std::vector<Complex>& v) {
    double s = 0.0;
    for (const Complex& a : v) s += std::norm(a);
    return std::sqrt(s);
}

double l2_dist(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
    return std::sqrt(s);
}

}  // namespace

TEST_CASE("constant signal concentrates in the DC coefficient") {
    for (std::size_t n : {1ul, 4ul, 37ul}) {
        const Complex c{0.3, -0.7};
        const std::vector<Complex> signal(n, c);
        const std::vector<Complex> coeffs = dft::forward(signal, 1);
        REQUIRE(coeffs.size() == 1);
        CHECK_THAT(std::abs(coeffs[0] - std::sqrt(double(n)) * c), WithinAbs(0.0, 1e-12));
    }
}

TEST_CASE("a pure tone maps to a single coefficient") {
    const std::size_t n = 16;
    std::vector<Complex> signal(n);
    for (std::size_t x = 0; x < n; ++x) {
        signal[x] = std::polar(1.0, dft::kTau * 3.0 * double(x) / double(n));
    }
    const std::vector<Complex> coeffs = dft::forward(signal, 8);
    REQUIRE(coeffs.size() == 8);
    for (std::size_t k = 0; k < 8; ++k) {
        if (k == 3) {
            CHECK_THAT(std::abs(coeffs[k] - Complex{4.0, 0.0}), WithinAbs(0.0, 1e-9));
        } else {
            CHECK(std::abs(coeffs[k]) <= 1e-9);
        }
    }
}

TEST_CASE("full transform is unitary") {
    SeededRng rng(2024);
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = 1 + rng.below(128);
        const std::vector<Complex> signal = random_signal(n, rng);
        const std::vector<Complex> coeffs = dft::forward(signal, n);
        CHECK(std::abs(l2_norm(coeffs) - l2_norm(signal)) <= 1e-9);
    }
}

TEST_CASE("inverse of the DC coefficient is the constant signal") {
    const std::size_t n = 9;
    const Complex c{1.25, 0.5};
    const std::vector<Complex> coeffs{std::sqrt(double(n)) * c};
    const std::vector<Complex> signal = dft::inverse(coeffs, n);
    for (const Complex& v : signal) CHECK_THAT(std::abs(v - c), WithinAbs(0.0, 1e-12));
}

TEST_CASE("round trip at full rank recovers the signal") {
    SeededRng rng(11);
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = 1 + rng.below(96);
        const std::vector<Complex> signal = random_signal(n, rng);
        const std::vector<Complex> back = dft::inverse(dft::forward(signal, n), n);
        CHECK(l2_dist(back, signal) <= 1e-9);
    }
}

TEST_CASE("band-limited signals survive truncation exactly") {
    const std::size_t n = 64;
    SeededRng rng(3);
    std::vector<Complex> spectrum(n, Complex{0, 0});
    for (std::size_t k = 0; k < 4; ++k) spectrum[k] = Complex{rng.gaussian(), rng.gaussian()};
    const std::vector<Complex> signal = dft::inverse(spectrum, n);
    const std::vector<Complex> truncated = dft::forward(signal, 4);
    const std::vector<Complex> back = dft::inverse(truncated, n);
    CHECK(l2_dist(back, signal) <= 1e-9);
}

TEST_CASE("parallel kernels agree with the serial reference") {
    SeededRng rng(8);
    for (int i = 0; i < 25; ++i) {
        const std::size_t n = 1 + rng.below(80);
        const std::size_t r = 1 + rng.below(n);
        const std::vector<Complex> signal = random_signal(n, rng);

        const std::vector<Complex> fast = dft::forward(signal, r);
        const std::vector<Complex> ref = dft::forward_ref(signal, r);
        REQUIRE(fast.size() == ref.size());
        for (std::size_t k = 0; k < r; ++k) CHECK(std::abs(fast[k] - ref[k]) <= 1e-10);

        const std::vector<Complex> ifast = dft::inverse(fast, n);
        const std::vector<Complex> iref = dft::inverse_ref(ref, n);
        for (std::size_t x = 0; x < n; ++x) CHECK(std::abs(ifast[x] - iref[x]) <= 1e-10);
    }
}

TEST_CASE("out-of-range truncation counts are rejected") {
    const std::vector<Complex> signal(8, Complex{1, 0});
    CHECK_THROWS_AS(dft::forward(signal, 0), std::invalid_argument);
    CHECK_THROWS_AS(dft::forward(signal, 9), std::invalid_argument);
    CHECK_THROWS_AS(dft::inverse(signal, 7), std::invalid_argument);
}
