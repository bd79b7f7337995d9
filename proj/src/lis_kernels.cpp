#include "qcc/lis_kernels.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace qcc {

size_t lis_scratch_size(uint32_t n, uint32_t cutoff) {
    const uint64_t piles = std::min<uint64_t>(n, uint64_t{cutoff} + 1);
    // +8 sentinel padding so vector kernels can over-read a full lane
    return static_cast<size_t>(piles + 9);
}

uint32_t lis_cutoff_scalar(const uint32_t* perm, uint32_t n, uint32_t cutoff,
                           uint32_t* piles) {
    uint32_t count = 0;
    for (uint32_t k = 0; k < n; ++k) {
        const uint32_t v = perm[k];
        // first pile top >= v; values are distinct so >= and > coincide
        uint32_t* pos = std::lower_bound(piles, piles + count, v);
        if (pos == piles + count) {
            piles[count++] = v;
            if (count > cutoff) return count;
        } else {
            *pos = v;
        }
    }
    return count;
}

namespace {

std::vector<LisKernel> build_kernel_list() {
    std::vector<LisKernel> ks;
    ks.push_back({"scalar", &lis_cutoff_scalar});
#if defined(__x86_64__) || defined(_M_X64)
    if (cpu_has_avx2()) ks.push_back({"avx2", &lis_cutoff_avx2});
#endif
#if defined(__aarch64__)
    ks.push_back({"neon", &lis_cutoff_neon});
#endif
    return ks;
}

LisKernel select_kernel() {
    const std::vector<LisKernel> ks = build_kernel_list();
    if (const char* want = std::getenv("QCC_KERNEL")) {
        for (const LisKernel& k : ks)
            if (std::strcmp(k.name, want) == 0) return k;
        throw std::runtime_error(std::string("QCC_KERNEL=") + want +
                                 " is not available on this machine");
    }
    return ks.back(); // best available
}

} // namespace

std::vector<LisKernel> available_lis_kernels() { return build_kernel_list(); }

const LisKernel& active_lis_kernel() {
    static const LisKernel k = select_kernel();
    return k;
}

} // namespace qcc
