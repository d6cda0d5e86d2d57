#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace combgape {

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Stream id for (base_seed, purpose tag, index). Every trial derives its own
// stream from this, so batch results do not depend on execution order or on
// the number of workers.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag, std::uint64_t index) {
    std::uint64_t h = mix64(base + 0x9e3779b97f4a7c15ULL);
    h = mix64(h ^ (tag + 0xbf58476d1ce4e5b9ULL));
    h = mix64(h ^ (index + 0x94d049bb133111ebULL));
    return h;
}

// xoshiro256++ seeded through splitmix64. Gaussian draws use Box-Muller with
// no cached spare, so every draw consumes a fixed number of engine outputs
// and streams replay bit-exactly from the seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t s = seed;
        for (auto& word : state_) {
            s += 0x9e3779b97f4a7c15ULL;
            word = mix64(s);
        }
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // uniform on [0, 1), 53-bit resolution
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform on (0, 1]; safe as a log argument
    double uniform_open() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // inclusive integer range, rejection-debiased
    std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) {
        const std::uint64_t bound = hi - lo + 1;
        const std::uint64_t threshold = (-bound) % bound;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return lo + r % bound;
        }
    }

    // standard normal via Box-Muller
    double gaussian() {
        const double u1 = uniform_open();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::array<std::uint64_t, 4> state_{};
};

}
