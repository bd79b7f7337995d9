#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qcc/partition.hpp"

namespace qcc {

enum class Scheme { classical, nonextended, extended_limited, extended };

const char* scheme_name(Scheme s);
std::optional<Scheme> scheme_from_name(const std::string& name);

struct SchemeQuery {
    uint32_t n = 0;
    uint32_t d = 0;
    Scheme scheme = Scheme::classical;
    // |R|; meaningful only for extended_limited (absent = unlimited).
    std::optional<mpz_class> ancilla_dim;
};

struct TermBreakdown {
    Partition partition;
    mpz_class dim;
    mpz_class mult;
    mpq_class contribution;
};

struct SuccessReport {
    SchemeQuery query;
    std::optional<mpq_class> p_exact;
    double p_float = 0.0;
    std::optional<std::vector<TermBreakdown>> terms;
};

struct ExactOptions {
    // Cap on the number of partitions the exact sum may visit.
    uint64_t max_partitions = 10'000'000;
    bool breakdown = false;
};

// Balanced-coloring classical maximum: 1/prod(n_k!) with group sizes
// floor(n/d) or ceil(n/d).
mpq_class p_classical(uint32_t n, uint32_t d);

// (1/n!) sum_rho min(D,m) D                            [non-extended scheme]
SuccessReport p_nonextended(uint32_t n, uint32_t d, const ExactOptions& opts = {});

// (1/n!) sum_rho min(m|R|, D) D                        [ancilla of dimension |R|]
SuccessReport p_extended_limited(uint32_t n, uint32_t d, const mpz_class& ancilla_dim,
                                 const ExactOptions& opts = {});

// (1/n!) sum_{rows(rho) <= d} D^2                      [unlimited ancilla]
SuccessReport p_extended(uint32_t n, uint32_t d, const ExactOptions& opts = {});

// Same value computed through the conjugate route: the Plancherel mass of
// {rho : first_row(rho) <= d}. Kept separate so tests can compare routes.
mpq_class p_extended_by_first_row(uint32_t n, uint32_t d, const ExactOptions& opts = {});

// Smallest |R| with m|R| >= D for every contributing rho: max ceil(D/m).
mpz_class min_sufficient_ancilla(uint32_t n, uint32_t d, const ExactOptions& opts = {});

} // namespace qcc
