#pragma once
#include <cstdint>

namespace rbwalk {

// splitmix64: used to expand seeds and to derive per-trial streams
inline uint64_t splitmix64(uint64_t& x) {
    uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// xoshiro256** (Blackman/Vigna, public domain). Fast enough for ~1e9
// walk steps per run; state seeded through splitmix64 so seed quality
// does not matter.
class Rng {
public:
    explicit Rng(uint64_t seed) {
        for (auto& w : s_) w = splitmix64(seed);
    }

    uint64_t next() {
        uint64_t result = rotl(s_[1] * 5, 7) * 9;
        uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // exactly uniform on [0, bound): Lemire multiply-shift with rejection
    uint32_t below(uint32_t bound) {
        uint64_t m = (next() >> 32) * uint64_t(bound);
        if (uint32_t(m) < bound) {
            uint32_t threshold = uint32_t(-bound) % bound;
            while (uint32_t(m) < threshold)
                m = (next() >> 32) * uint64_t(bound);
        }
        return uint32_t(m >> 32);
    }

    // 53-bit mantissa uniform on [0,1)
    double uniform01() { return double(next() >> 11) * 0x1.0p-53; }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    uint64_t s_[4];
};

// Counter-based per-trial stream derivation: trial i under master seed M
// gets the 64-bit seed splitmix64(M + (i+1)*phi64), which the Rng ctor
// expands into a full xoshiro state. Streams depend only on (M, i), never
// on which worker runs the trial, so parallel campaigns are reproducible.
inline uint64_t trial_seed(uint64_t master, uint64_t index) {
    uint64_t x = master + (index + 1) * 0x9e3779b97f4a7c15ULL;
    return splitmix64(x);
}

inline Rng trial_rng(uint64_t master, uint64_t index) {
    return Rng(trial_seed(master, index));
}

} // namespace rbwalk
