#pragma once

#include <cstdint>
#include <string_view>

namespace hebbmem {

// Counter-based splitmix64 stream. The output sequence depends only on the
// seed, never on platform or standard-library version, which keeps every
// experiment replayable bit-for-bit.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_double() < p; }

    // Uniform integer in [0, bound). Multiply-shift; bias is O(bound / 2^64).
    std::uint64_t uniform_int(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
    }

private:
    std::uint64_t state_;
};

std::uint64_t fnv1a64(std::string_view s);

// Derives an independent stream seed from (master seed, purpose label, item
// index). Parallel schedules stay reproducible because each work item owns a
// stream keyed by its index, not by execution order.
std::uint64_t derive_seed(std::uint64_t master, std::string_view label, std::uint64_t index);

}  // namespace hebbmem
