#pragma once

#include <cstdint>

#include <gmpxx.h>

#include "qcc/partition.hpp"

namespace qcc {

// Exact representation data for one partition of n at a given number of
// colors d: irrep dimension D, multiplicity m on the N-fold tensor power of
// a d-dimensional space, and Plancherel weight D^2/n!.
struct RepData {
    Partition partition;
    mpz_class dim;
    mpz_class mult;
    uint32_t d = 0;
    mpq_class plancherel;
};

// Log-space counterpart for large n where the exact integers are huge.
// log_mult is -inf when mult == 0.
struct LogRepData {
    double log_dim = 0.0;
    double log_mult = 0.0;
    double log_plancherel = 0.0;
};

mpz_class factorial(uint64_t n);

// Hook-length formula: n! / prod(hooks). Division exactness is asserted.
mpz_class dim_irrep(const Partition& p);

// Hook-content formula: prod(d + content)/prod(hook); 0 when rows(p) > d.
mpz_class mult_irrep(const Partition& p, uint32_t d);

// Plancherel measure D^2/n! as an exact rational.
mpq_class plancherel_weight(const Partition& p);

RepData rep_data(const Partition& p, uint32_t d);

// Computed from log-gamma / log sums, never by converting exact integers.
LogRepData log_rep_data(const Partition& p, uint32_t d);

} // namespace qcc
