#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qcc {

// Patience-sorting kernel: length of the longest increasing subsequence of
// perm[0..n), truncated at cutoff + 1 (early exit as soon as the pile count
// exceeds cutoff). Returns min(LIS, cutoff + 1).
//
// piles is caller-provided scratch of at least lis_scratch_size(n, cutoff)
// entries; its contents are kernel-owned. Values must be < 2^31 - 1.
//
// All variants compute exactly the same integer; the SIMD ones replace the
// per-element binary search with a vectorized linear scan of the pile tops,
// which wins for the small pile counts the cutoff regime produces.
using LisKernelFn = uint32_t (*)(const uint32_t* perm, uint32_t n,
                                 uint32_t cutoff, uint32_t* piles);

size_t lis_scratch_size(uint32_t n, uint32_t cutoff);

uint32_t lis_cutoff_scalar(const uint32_t* perm, uint32_t n, uint32_t cutoff,
                           uint32_t* piles);
#if defined(__x86_64__) || defined(_M_X64)
uint32_t lis_cutoff_avx2(const uint32_t* perm, uint32_t n, uint32_t cutoff,
                         uint32_t* piles);
bool cpu_has_avx2();
#endif
#if defined(__aarch64__)
uint32_t lis_cutoff_neon(const uint32_t* perm, uint32_t n, uint32_t cutoff,
                         uint32_t* piles);
#endif

struct LisKernel {
    const char* name;
    LisKernelFn fn;
};

// Kernels usable on this machine (scalar always first).
std::vector<LisKernel> available_lis_kernels();

// Runtime selection: best available, overridable with QCC_KERNEL=scalar|avx2|neon.
const LisKernel& active_lis_kernel();

} // namespace qcc
