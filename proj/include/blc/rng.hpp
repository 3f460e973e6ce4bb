#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace blc {

/// Seeded deterministic generator. mt19937_64 supplies the raw stream; the
/// uniform and gaussian draws are derived by hand so that the sequence is
/// identical across standard-library implementations (std::*_distribution
/// sequences are implementation-defined).
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // uniform in [0, 1) with 53 random bits
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // integer uniform in [0, bound) by rejection, bound >= 1
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
        std::uint64_t v = engine_();
        while (v > limit) v = engine_();
        return v % bound;
    }

    // standard normal via Box-Muller
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 6.283185307179586 * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace blc
