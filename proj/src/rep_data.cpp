#include "qcc/rep_data.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qcc {

mpz_class factorial(uint64_t n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

namespace {

mpz_class exact_quotient(const mpz_class& num, const mpz_class& den,
                         const char* what) {
    if (mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) == 0)
        throw std::logic_error(what);
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

} // namespace

mpz_class dim_irrep(const Partition& p) {
    if (p.parts.empty()) return 1;
    const CellStats st = cell_stats(p);
    mpz_class hook_prod = 1;
    for (uint32_t h : st.hooks) hook_prod *= h;
    return exact_quotient(factorial(p.n()), hook_prod,
                          "dim_irrep: hook product does not divide n!");
}

mpz_class mult_irrep(const Partition& p, uint32_t d) {
    if (d == 0) throw std::invalid_argument("mult_irrep: d must be >= 1");
    if (p.rows() > d) return 0;
    if (p.parts.empty()) return 1;
    const CellStats st = cell_stats(p);
    mpz_class num = 1, den = 1;
    for (size_t i = 0; i < st.hooks.size(); ++i) {
        num *= static_cast<long>(d) + st.contents[i];
        den *= st.hooks[i];
    }
    return exact_quotient(num, den,
                          "mult_irrep: hook product does not divide content product");
}

mpq_class plancherel_weight(const Partition& p) {
    const mpz_class dim = dim_irrep(p);
    mpq_class w(dim * dim, factorial(p.n()));
    w.canonicalize();
    return w;
}

RepData rep_data(const Partition& p, uint32_t d) {
    RepData r;
    r.partition = p;
    r.dim = dim_irrep(p);
    r.mult = mult_irrep(p, d);
    r.d = d;
    r.plancherel = mpq_class(r.dim * r.dim, factorial(p.n()));
    r.plancherel.canonicalize();
    return r;
}

LogRepData log_rep_data(const Partition& p, uint32_t d) {
    if (d == 0) throw std::invalid_argument("log_rep_data: d must be >= 1");
    LogRepData out;
    const double log_nfact = std::lgamma(static_cast<double>(p.n()) + 1.0);
    const CellStats st = cell_stats(p);
    double log_hooks = 0.0;
    double log_contents = 0.0;
    for (size_t i = 0; i < st.hooks.size(); ++i) {
        log_hooks += std::log(static_cast<double>(st.hooks[i]));
        if (p.rows() <= d)
            log_contents += std::log(static_cast<double>(d) + st.contents[i]);
    }
    out.log_dim = log_nfact - log_hooks;
    out.log_mult = (p.rows() > d)
                       ? -std::numeric_limits<double>::infinity()
                       : log_contents - log_hooks;
    out.log_plancherel = 2.0 * out.log_dim - log_nfact;
    return out;
}

} // namespace qcc
