#include "blc/lz77.hpp"

#include <algorithm>
#include <cstddef>

namespace blc::lz {

namespace {

constexpr std::size_t kMinMatch = 3;
constexpr int kMaxChainSteps = 64;
constexpr std::size_t kHashBits = 15;

std::size_t hash3(const std::uint8_t* p) {
    const std::uint32_t v = std::uint32_t{p[0]} | (std::uint32_t{p[1]} << 8) |
                            (std::uint32_t{p[2]} << 16);
    return (v * 2654435761u) >> (32 - kHashBits);
}

std::uint64_t match_cost_bits(std::size_t distance, std::size_t length) {
    return 1 + gamma_bit_length(distance) + gamma_bit_length(length - kMinMatch + 1);
}

}  // namespace

std::uint64_t header_bit_length(std::size_t raw_length) {
    return gamma_bit_length(static_cast<std::uint64_t>(raw_length) + 1);
}

BitBuffer compress(std::span<const std::uint8_t> data) {
    const std::size_t n = data.size();
    BitWriter writer;
    writer.put_gamma(static_cast<std::uint64_t>(n) + 1);

    std::vector<std::ptrdiff_t> head(std::size_t{1} << kHashBits, -1);
    std::vector<std::ptrdiff_t> prev(n, -1);

    auto insert = [&](std::size_t pos) {
        if (pos + kMinMatch > n) return;
        const std::size_t h = hash3(data.data() + pos);
        prev[pos] = head[h];
        head[h] = static_cast<std::ptrdiff_t>(pos);
    };

    std::size_t pos = 0;
    while (pos < n) {
        std::size_t best_len = 0;
        std::size_t best_dist = 0;
        if (pos + kMinMatch <= n) {
            std::ptrdiff_t cand = head[hash3(data.data() + pos)];
            for (int steps = 0; cand >= 0 && steps < kMaxChainSteps;
                 ++steps, cand = prev[static_cast<std::size_t>(cand)]) {
                const std::size_t start = static_cast<std::size_t>(cand);
                std::size_t len = 0;
                const std::size_t cap = n - pos;
                // overlap allowed: the source index may run past `pos`
                while (len < cap && data[start + len] == data[pos + len]) ++len;
                if (len > best_len) {
                    best_len = len;
                    best_dist = pos - start;
                }
            }
        }

        if (best_len >= kMinMatch &&
            match_cost_bits(best_dist, best_len) < 9 * static_cast<std::uint64_t>(best_len)) {
            writer.put_bit(true);
            writer.put_gamma(best_dist);
            writer.put_gamma(best_len - kMinMatch + 1);
            for (std::size_t i = 0; i < best_len; ++i) insert(pos + i);
            pos += best_len;
        } else {
            writer.put_bit(false);
            writer.put_bits(data[pos], 8);
            insert(pos);
            ++pos;
        }
    }
    return writer.take();
}

std::vector<std::uint8_t> decompress(const BitBuffer& stream) {
    BitReader reader(stream);
    const std::uint64_t raw_length = reader.get_gamma() - 1;

    std::vector<std::uint8_t> out;
    out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(raw_length, 1 << 20)));
    while (out.size() < raw_length) {
        if (reader.get_bit()) {
            const std::uint64_t distance = reader.get_gamma();
            const std::uint64_t length = reader.get_gamma() + kMinMatch - 1;
            if (distance == 0 || distance > out.size()) {
                throw DecodeError("match distance outside window", reader.position());
            }
            if (out.size() + length > raw_length) {
                throw DecodeError("match overruns declared length", reader.position());
            }
            std::size_t src = out.size() - static_cast<std::size_t>(distance);
            for (std::uint64_t i = 0; i < length; ++i) out.push_back(out[src++]);
        } else {
            out.push_back(static_cast<std::uint8_t>(reader.get_bits(8)));
        }
    }
    return out;
}

}  // namespace blc::lz
