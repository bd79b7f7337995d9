// NEON pile-top search, mirroring the AVX2 variant.
#if defined(__aarch64__)

#include <arm_neon.h>

#include <algorithm>
#include <cstdint>

#include "qcc/lis_kernels.hpp"

namespace qcc {

namespace {

constexpr uint32_t kSentinel = 0x7FFFFFFFu;
constexpr uint32_t kLinearMax = 512;

inline uint32_t first_greater(const uint32_t* piles, uint32_t limit4, uint32_t v) {
    const uint32x4_t vv = vdupq_n_u32(v);
    for (uint32_t i = 0; i < limit4; i += 4) {
        const uint32x4_t p = vld1q_u32(piles + i);
        const uint32x4_t gt = vcgtq_u32(p, vv);
        // narrow the 4 lane masks into one 64-bit word, 16 bits per lane
        const uint64_t bits =
            vget_lane_u64(vreinterpret_u64_u16(vmovn_u32(gt)), 0);
        if (bits != 0)
            return i + static_cast<uint32_t>(__builtin_ctzll(bits) / 16);
    }
    return limit4;
}

} // namespace

uint32_t lis_cutoff_neon(const uint32_t* perm, uint32_t n, uint32_t cutoff,
                         uint32_t* piles) {
    const uint32_t max_piles =
        static_cast<uint32_t>(std::min<uint64_t>(n, uint64_t{cutoff} + 1));
    if (max_piles > kLinearMax)
        return lis_cutoff_scalar(perm, n, cutoff, piles);

    const uint32_t padded = (max_piles + 4) & ~3u;
    for (uint32_t i = 0; i < padded; ++i) piles[i] = kSentinel;

    uint32_t count = 0;
    for (uint32_t k = 0; k < n; ++k) {
        const uint32_t v = perm[k];
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

#endif // __aarch64__
