#pragma once

// Deterministic RNG for corpus generation.  splitmix64 with a draw counter so
// reports can state exactly how much entropy an instance consumed.  We avoid
// std:: distributions: their outputs are implementation-defined, and corpus
// instances must be byte-identical across toolchains.

#include <cstdint>

namespace cylkit {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        ++count_;
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n).  Rejection sampling keeps it unbiased.
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return v % n;
    }

    bool coin() { return (next() & 1) != 0; }

    std::uint64_t draws() const { return count_; }

private:
    std::uint64_t state_;
    std::uint64_t count_ = 0;
};

}  // namespace cylkit
