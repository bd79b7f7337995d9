#pragma once

#include <cstdint>
#include <vector>

namespace qcc {

inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// xoshiro256**: kept in-tree so that seeded
// runs are reproducible across platforms and standard-library versions.
class Xoshiro256ss {
public:
    explicit Xoshiro256ss(uint64_t seed) {
        uint64_t sm = seed;
        for (auto& w : s_) w = splitmix64(sm);
        if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
    }

    uint64_t next() {
        const uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Unbiased integer in [0, bound) by rejection on the top 64-bit range.
    uint64_t bounded(uint64_t bound) {
        const uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    double next_double() { // [0,1)
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    uint64_t s_[4];
};

// Per-trial stream derived purely from (master seed, trial index): results
// are independent of how trials are assigned to worker threads.
inline Xoshiro256ss trial_rng(uint64_t master_seed, uint64_t trial_index) {
    return Xoshiro256ss(master_seed ^
                        (0xD1B54A32D192ED03ULL * (trial_index + 0x632BE59BD9B4E019ULL)));
}

// In-place Fisher-Yates shuffle of 0..n-1.
inline void random_permutation(std::vector<uint32_t>& perm, uint32_t n,
                               Xoshiro256ss& rng) {
    perm.resize(n);
    for (uint32_t i = 0; i < n; ++i) perm[i] = i;
    for (uint32_t i = n; i > 1; --i) {
        const uint32_t j = static_cast<uint32_t>(rng.bounded(i));
        std::swap(perm[i - 1], perm[j]);
    }
}

} // namespace qcc
