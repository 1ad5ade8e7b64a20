#pragma once
#include <cmath>
#include <cstdint>
#include <random>

namespace hl {

// (seed, stream) pair identifying an independent reproducible substream.
// Same pair gives byte-identical draws on every platform: the engine is
// std::mt19937_64 (fully pinned by the standard) seeded through two
// rounds of splitmix64, and all variates below avoid std::
// distributions, whose output is implementation-defined.
struct RngSeed {
    uint64_t seed = 0;
    uint64_t stream = 0;

    RngSeed with_stream(uint64_t s) const { return {seed, s}; }
};

inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class Rng {
public:
    explicit Rng(RngSeed s) {
        uint64_t st = s.seed;
        uint64_t a = splitmix64(st);
        st = a ^ s.stream;
        engine_.seed(splitmix64(st));
    }

    uint64_t next_u64() { return engine_(); }

    // Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // exp(1) via inverse transform; 1-U > 0 so the log is finite.
    double exponential() { return -std::log1p(-uniform()); }

    // Uniform integer in [0, bound). Modulo bias is < 2^-50 for the
    // bounds used here (neighbor counts, group ids).
    uint64_t below(uint64_t bound) { return next_u64() % bound; }

private:
    std::mt19937_64 engine_;
};

}  // namespace hl
