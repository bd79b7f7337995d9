#include "qcc/success.hpp"

#include <stdexcept>

#include "qcc/errors.hpp"
#include "qcc/rep_data.hpp"

namespace qcc {

const char* scheme_name(Scheme s) {
    switch (s) {
        case Scheme::classical: return "classical";
        case Scheme::nonextended: return "nonextended";
        case Scheme::extended_limited: return "extended-limited";
        case Scheme::extended: return "extended";
    }
    return "?";
}

std::optional<Scheme> scheme_from_name(const std::string& name) {
    if (name == "classical") return Scheme::classical;
    if (name == "nonextended") return Scheme::nonextended;
    if (name == "extended-limited") return Scheme::extended_limited;
    if (name == "extended") return Scheme::extended;
    return std::nullopt;
}

mpq_class p_classical(uint32_t n, uint32_t d) {
    if (n == 0 || d == 0)
        throw std::invalid_argument("p_classical: n, d must be >= 1");
    const uint32_t q = n / d, r = n % d;
    // r groups of size q+1, d-r groups of size q
    mpz_class denom = 1;
    const mpz_class f_small = factorial(q), f_big = factorial(q + 1);
    for (uint32_t k = 0; k < r; ++k) denom *= f_big;
    for (uint32_t k = 0; k < d - r; ++k) denom *= f_small;
    mpq_class p(1, denom);
    p.canonicalize();
    return p;
}

namespace {

void check_feasible(uint32_t n, uint32_t d, const ExactOptions& opts) {
    if (n == 0 || d == 0)
        throw std::invalid_argument("success: n, d must be >= 1");
    const mpz_class count = count_partitions(n, d);
    if (count > static_cast<unsigned long>(opts.max_partitions))
        throw FeasibilityExceeded(
            "exact enumeration over " + count.get_str() +
            " partitions exceeds cap " + std::to_string(opts.max_partitions) +
            "; use the `sample` subcommand (Monte Carlo) instead");
}

// Shared accumulation over all partitions with rows <= d. term(D, m) gives
// the per-partition numerator contribution.
template <typename TermFn>
SuccessReport sum_scheme(uint32_t n, uint32_t d, SchemeQuery query,
                         const ExactOptions& opts, TermFn&& term) {
    check_feasible(n, d, opts);
    const mpz_class nfact = factorial(n);
    mpz_class total = 0;
    SuccessReport rep;
    rep.query = std::move(query);
    if (opts.breakdown) rep.terms.emplace();
    for_each_partition(n, d, kNoLimit, [&](const Partition& p) {
        const mpz_class dim = dim_irrep(p);
        const mpz_class mult = mult_irrep(p, d);
        const mpz_class t = term(dim, mult);
        total += t;
        if (rep.terms) {
            mpq_class contrib(t, nfact);
            contrib.canonicalize();
            rep.terms->push_back({p, dim, mult, std::move(contrib)});
        }
    });
    mpq_class p(total, nfact);
    p.canonicalize();
    rep.p_exact = p;
    rep.p_float = mpq_get_d(p.get_mpq_t());
    return rep;
}

} // namespace

SuccessReport p_nonextended(uint32_t n, uint32_t d, const ExactOptions& opts) {
    SchemeQuery q{n, d, Scheme::nonextended, std::nullopt};
    return sum_scheme(n, d, q, opts,
                      [](const mpz_class& dim, const mpz_class& mult) -> mpz_class {
                          return (mult < dim ? mult : dim) * dim;
                      });
}

SuccessReport p_extended_limited(uint32_t n, uint32_t d, const mpz_class& ancilla_dim,
                                 const ExactOptions& opts) {
    if (ancilla_dim < 1)
        throw std::invalid_argument("p_extended_limited: ancilla_dim must be >= 1");
    SchemeQuery q{n, d, Scheme::extended_limited, ancilla_dim};
    return sum_scheme(n, d, q, opts,
                      [&](const mpz_class& dim, const mpz_class& mult) -> mpz_class {
                          const mpz_class cap = mult * ancilla_dim;
                          return (cap < dim ? cap : dim) * dim;
                      });
}

SuccessReport p_extended(uint32_t n, uint32_t d, const ExactOptions& opts) {
    SchemeQuery q{n, d, Scheme::extended, std::nullopt};
    return sum_scheme(n, d, q, opts,
                      [](const mpz_class& dim, const mpz_class&) -> mpz_class {
                          return dim * dim;
                      });
}

mpq_class p_extended_by_first_row(uint32_t n, uint32_t d, const ExactOptions& opts) {
    check_feasible(n, d, opts);
    mpz_class total = 0;
    for_each_partition(n, kNoLimit, d, [&](const Partition& p) {
        const mpz_class dim = dim_irrep(p);
        total += dim * dim;
    });
    mpq_class p(total, factorial(n));
    p.canonicalize();
    return p;
}

mpz_class min_sufficient_ancilla(uint32_t n, uint32_t d, const ExactOptions& opts) {
    check_feasible(n, d, opts);
    mpz_class best = 1;
    for_each_partition(n, d, kNoLimit, [&](const Partition& p) {
        const mpz_class dim = dim_irrep(p);
        const mpz_class mult = mult_irrep(p, d);
        mpz_class need;
        mpz_cdiv_q(need.get_mpz_t(), dim.get_mpz_t(), mult.get_mpz_t());
        if (need > best) best = need;
    });
    return best;
}

} // namespace qcc
