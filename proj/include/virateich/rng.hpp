#pragma once

#include <cstdint>
#include <random>

namespace virateich {

/// Deterministic random stream.  mt19937_64 raw output is mapped to doubles
/// directly ((x >> 11) * 2^-53) instead of going through
/// std::uniform_real_distribution, whose output is implementation-defined;
/// this keeps seeded runs byte-identical across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Independent stream for one trial of a seeded suite.
    static Rng for_trial(std::uint64_t seed, std::uint64_t trial) {
        // splitmix64 finalizer on (seed, trial)
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return Rng(z);
    }

    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::mt19937_64 gen_;
};

} // namespace virateich
