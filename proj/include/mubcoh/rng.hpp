#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace mubcoh {

// SplitMix64 step. Used for seed mixing only, never as the sampling engine.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Folds a tuple of coordinates (master seed, cell indices, trial index, ...)
// into one 64-bit stream seed. Streams with distinct coordinates are
// independent regardless of evaluation order, so parallel and serial sweeps
// draw identical ensembles.
inline std::uint64_t derive_seed(std::initializer_list<std::uint64_t> coords) {
    std::uint64_t state = 0x6A09E667F3BCC909ULL;
    for (std::uint64_t c : coords) {
        state ^= c + 0x9E3779B97F4A7C15ULL + (state << 6) + (state >> 2);
        splitmix64(state);
    }
    std::uint64_t s = state;
    return splitmix64(s);
}

// Per-draw random stream. mt19937_64 output is fixed by the standard and the
// distributions below are hand-rolled, so a given seed yields the same values
// on every platform.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on (0, 1]; never returns 0 so it is safe under log().
    double uniform() {
        return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller; one spare value is cached.
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * M_PI * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace mubcoh
