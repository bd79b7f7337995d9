#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>

#include "qcc/partition.hpp"
#include "qcc/rng.hpp"

namespace qcc {

// One seeded Monte Carlo estimate of a Plancherel-measure quantity.
struct SampleRun {
    uint32_t n = 0;
    uint32_t d = 0;
    uint64_t trials = 0;
    uint64_t seed = 0;
    double estimate = 0.0;
    double std_error = 0.0;
    std::pair<double, double> ci95{0.0, 0.0};
};

struct ShapeSample {
    uint32_t r1 = 0;
    std::optional<Partition> full_shape;
};

struct McOptions {
    uint32_t workers = 0;      // 0: QCC_THREADS env, else hardware concurrency
    uint64_t chunk = 4096;     // trials per reduction chunk (fixed, see parallel.hpp)
};

// Deterministic injection hooks: the same computations the samplers run,
// applied to an explicit permutation of 0..n-1.
uint32_t lis_from_permutation(std::span<const uint32_t> perm);
Partition rsk_shape_from_permutation(std::span<const uint32_t> perm);

// One draw under the Plancherel measure via RSK of a uniform permutation.
// sample_r1 computes only the first-row length (patience sorting).
uint32_t sample_r1(uint32_t n, Xoshiro256ss& rng);
ShapeSample sample_shape(uint32_t n, Xoshiro256ss& rng);

// Fraction of sampled shapes with r1 <= d, with a Wilson 95% interval.
SampleRun estimate_p_extended(uint32_t n, uint32_t d, uint64_t trials,
                              uint64_t seed, const McOptions& opts = {});

// Mean of min(1, m/D) over sampled shapes (0 where m = 0), with a
// standard-error interval.
SampleRun estimate_p_nonextended(uint32_t n, uint32_t d, uint64_t trials,
                                 uint64_t seed, const McOptions& opts = {});

std::pair<double, double> wilson_interval(uint64_t successes, uint64_t trials);

} // namespace qcc
