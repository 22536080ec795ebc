#pragma once

#include <cstdint>
#include <random>

namespace vqoe {

/// Deterministic RNG used everywhere randomness is needed.
///
/// std::mt19937_64 output is fully specified by the standard, but the
/// <random> distributions are not; the helpers below replace them so that
/// seeded runs are bit-identical across compilers and platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform_double();
    }

    /// Uniform integer in [0, n). n must be > 0.
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    /// splitmix64 finalizer; derives independent per-stream seeds.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 gen_;
};

/// Deterministic hash of pixel coordinates, used by the synthetic generators.
inline std::uint64_t hash_coords(std::uint64_t seed, std::uint64_t a,
                                 std::uint64_t b, std::uint64_t c = 0) {
    std::uint64_t z = seed;
    z = Rng::derive(z, a);
    z = Rng::derive(z, b);
    z = Rng::derive(z, c);
    return z;
}

}  // namespace vqoe
