#include "qcc/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "qcc/lis_kernels.hpp"
#include "qcc/parallel.hpp"
#include "qcc/rep_data.hpp"

namespace qcc {

uint32_t lis_from_permutation(std::span<const uint32_t> perm) {
    const uint32_t n = static_cast<uint32_t>(perm.size());
    std::vector<uint32_t> piles(lis_scratch_size(n, n));
    return active_lis_kernel().fn(perm.data(), n, n, piles.data());
}

Partition rsk_shape_from_permutation(std::span<const uint32_t> perm) {
    // RSK row insertion; only the shape of the insertion tableau is kept.
    std::vector<std::vector<uint32_t>> tableau;
    for (uint32_t v : perm) {
        uint32_t carry = v;
        bool placed = false;
        for (auto& row : tableau) {
            auto pos = std::upper_bound(row.begin(), row.end(), carry);
            if (pos == row.end()) {
                row.push_back(carry);
                placed = true;
                break;
            }
            std::swap(carry, *pos); // bump into the next row
        }
        if (!placed) tableau.push_back({carry});
    }
    Partition shape;
    shape.parts.reserve(tableau.size());
    for (const auto& row : tableau)
        shape.parts.push_back(static_cast<uint32_t>(row.size()));
    return shape;
}

uint32_t sample_r1(uint32_t n, Xoshiro256ss& rng) {
    if (n == 0) throw std::invalid_argument("sample_r1: n must be >= 1");
    std::vector<uint32_t> perm;
    random_permutation(perm, n, rng);
    return lis_from_permutation(perm);
}

ShapeSample sample_shape(uint32_t n, Xoshiro256ss& rng) {
    if (n == 0) throw std::invalid_argument("sample_shape: n must be >= 1");
    std::vector<uint32_t> perm;
    random_permutation(perm, n, rng);
    ShapeSample s;
    s.full_shape = rsk_shape_from_permutation(perm);
    s.r1 = s.full_shape->first_row();
    return s;
}

std::pair<double, double> wilson_interval(uint64_t successes, uint64_t trials) {
    if (trials == 0) throw std::invalid_argument("wilson_interval: trials == 0");
    const double z = 1.959963984540054; // 97.5% normal quantile
    const double t = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / t;
    const double z2t = z * z / t;
    const double denom = 1.0 + z2t;
    const double center = (p + z2t / 2.0) / denom;
    const double half =
        (z / denom) * std::sqrt(p * (1.0 - p) / t + z2t / (4.0 * t));
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

SampleRun estimate_p_extended(uint32_t n, uint32_t d, uint64_t trials,
                              uint64_t seed, const McOptions& opts) {
    if (n == 0 || d == 0 || trials == 0)
        throw std::invalid_argument("estimate_p_extended: n, d, trials must be >= 1");
    const uint64_t n_chunks = (trials + opts.chunk - 1) / opts.chunk;
    std::vector<uint64_t> chunk_hits(n_chunks, 0);
    detail::parallel_chunks(
        trials, opts.chunk, opts.workers,
        [&](uint64_t c, uint64_t begin, uint64_t end) {
            std::vector<uint32_t> perm;
            std::vector<uint32_t> piles(lis_scratch_size(n, d));
            uint64_t hits = 0;
            for (uint64_t t = begin; t < end; ++t) {
                Xoshiro256ss rng = trial_rng(seed, t);
                random_permutation(perm, n, rng);
                const uint32_t r1 =
                    active_lis_kernel().fn(perm.data(), n, d, piles.data());
                if (r1 <= d) ++hits;
            }
            chunk_hits[c] = hits;
        });
    uint64_t hits = 0;
    for (uint64_t h : chunk_hits) hits += h;

    SampleRun run;
    run.n = n;
    run.d = d;
    run.trials = trials;
    run.seed = seed;
    const double t = static_cast<double>(trials);
    run.estimate = static_cast<double>(hits) / t;
    run.std_error = std::sqrt(run.estimate * (1.0 - run.estimate) / t);
    run.ci95 = wilson_interval(hits, trials);
    return run;
}

SampleRun estimate_p_nonextended(uint32_t n, uint32_t d, uint64_t trials,
                                 uint64_t seed, const McOptions& opts) {
    if (n == 0 || d == 0 || trials == 0)
        throw std::invalid_argument("estimate_p_nonextended: n, d, trials must be >= 1");
    const uint64_t n_chunks = (trials + opts.chunk - 1) / opts.chunk;
    std::vector<double> chunk_sum(n_chunks, 0.0), chunk_sum_sq(n_chunks, 0.0);
    detail::parallel_chunks(
        trials, opts.chunk, opts.workers,
        [&](uint64_t c, uint64_t begin, uint64_t end) {
            std::vector<uint32_t> perm;
            double sum = 0.0, sum_sq = 0.0;
            for (uint64_t t = begin; t < end; ++t) {
                Xoshiro256ss rng = trial_rng(seed, t);
                random_permutation(perm, n, rng);
                const Partition shape = rsk_shape_from_permutation(perm);
                double w = 0.0;
                if (shape.rows() <= d) {
                    const LogRepData lr = log_rep_data(shape, d);
                    w = std::min(1.0, std::exp(lr.log_mult - lr.log_dim));
                }
                sum += w;
                sum_sq += w * w;
            }
            chunk_sum[c] = sum;
            chunk_sum_sq[c] = sum_sq;
        });
    // fold in chunk order: identical for any worker count
    double sum = 0.0, sum_sq = 0.0;
    for (uint64_t c = 0; c < n_chunks; ++c) {
        sum += chunk_sum[c];
        sum_sq += chunk_sum_sq[c];
    }

    SampleRun run;
    run.n = n;
    run.d = d;
    run.trials = trials;
    run.seed = seed;
    const double t = static_cast<double>(trials);
    run.estimate = sum / t;
    const double var =
        trials > 1 ? std::max(0.0, (sum_sq - t * run.estimate * run.estimate) / (t - 1.0))
                   : 0.0;
    run.std_error = std::sqrt(var / t);
    const double z = 1.959963984540054;
    run.ci95 = {std::max(0.0, run.estimate - z * run.std_error),
                std::min(1.0, run.estimate + z * run.std_error)};
    return run;
}

} // namespace qcc
