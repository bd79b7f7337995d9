// AVX2 pile-top search. Compiled with -mavx2 in its own translation unit;
// callers must gate on cpu_has_avx2().
#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <algorithm>
#include <cstdint>

#include "qcc/lis_kernels.hpp"

namespace qcc {

bool cpu_has_avx2() { return __builtin_cpu_supports("avx2") != 0; }

namespace {

constexpr uint32_t kSentinel = 0x7FFFFFFFu; // > any value; signed-compare safe
constexpr uint32_t kLinearMax = 512;        // beyond this, binary search wins

// First index i < limit8 (a multiple of 8) with piles[i] > v. Sentinel
// padding guarantees a hit within the padded region.
inline uint32_t first_greater(const uint32_t* piles, uint32_t limit8, uint32_t v) {
    const __m256i vv = _mm256_set1_epi32(static_cast<int32_t>(v));
    for (uint32_t i = 0; i < limit8; i += 8) {
        const __m256i p =
            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(piles + i));
        const __m256i gt = _mm256_cmpgt_epi32(p, vv);
        const int mask = _mm256_movemask_ps(_mm256_castsi256_ps(gt));
        if (mask != 0)
            return i + static_cast<uint32_t>(__builtin_ctz(static_cast<unsigned>(mask)));
    }
    return limit8;
}

} // namespace

uint32_t lis_cutoff_avx2(const uint32_t* perm, uint32_t n, uint32_t cutoff,
                         uint32_t* piles) {
    const uint32_t max_piles =
        static_cast<uint32_t>(std::min<uint64_t>(n, uint64_t{cutoff} + 1));
    if (max_piles > kLinearMax)
        return lis_cutoff_scalar(perm, n, cutoff, piles);

    const uint32_t padded = (max_piles + 8) & ~7u;
    for (uint32_t i = 0; i < padded; ++i) piles[i] = kSentinel;

    uint32_t count = 0;
    for (uint32_t k = 0; k < n; ++k) {
        const uint32_t v = perm[k];
        // values are distinct, so "> v" finds the same slot as ">= v"
        const uint32_t pos = first_greater(piles, padded, v);
        if (pos == count) {
            piles[count++] = v;
            if (count > cutoff) return count;
        } else {
            piles[pos] = v;
        }
    }
    return count;
}

} // namespace qcc

#endif // x86_64
