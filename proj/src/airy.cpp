#include "qcc/airy.hpp"

#include <cmath>
#include <stdexcept>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_airy.h>

namespace qcc {

AiryPair airy(double s) {
    gsl_sf_result ai, aip;
    const int e1 = gsl_sf_airy_Ai_e(s, GSL_PREC_DOUBLE, &ai);
    const int e2 = gsl_sf_airy_Ai_deriv_e(s, GSL_PREC_DOUBLE, &aip);
    // exponential-range underflow far in the right tail is fine here
    if ((e1 != GSL_SUCCESS && e1 != GSL_EUNDRFLW) ||
        (e2 != GSL_SUCCESS && e2 != GSL_EUNDRFLW))
        throw std::runtime_error("airy: GSL evaluation failed");
    return {ai.val, aip.val};
}

AiryPair airy_asymptotic(double s) {
    if (s < 6.0)
        throw std::invalid_argument("airy_asymptotic: valid for s >= 6 only");
    const double zeta = (2.0 / 3.0) * s * std::sqrt(s);
    // u_k = u_{k-1} (6k-5)(6k-3)(6k-1) / (216 k (2k-1)),  v_k = u_k (6k+1)/(1-6k)
    double u = 1.0;
    double sum_ai = 1.0, sum_aip = 1.0;
    double sign = 1.0, pow_zeta = 1.0;
    for (int k = 1; k <= 40; ++k) {
        u *= static_cast<double>((6 * k - 5)) * (6 * k - 3) * (6 * k - 1) /
             (216.0 * k * (2 * k - 1));
        const double v = u * (6.0 * k + 1.0) / (1.0 - 6.0 * k);
        sign = -sign;
        pow_zeta *= zeta;
        const double term_ai = sign * u / pow_zeta;
        const double term_aip = sign * v / pow_zeta;
        sum_ai += term_ai;
        sum_aip += term_aip;
        if (std::abs(term_ai) < 1e-18 && std::abs(term_aip) < 1e-18) break;
    }
    const double pref = std::exp(-zeta) / (2.0 * std::sqrt(M_PI));
    const double s14 = std::pow(s, 0.25);
    return {pref / s14 * sum_ai, -pref * s14 * sum_aip};
}

double airy_tail_sq(double s, const AiryPair& a) {
    return a.aip * a.aip - s * a.ai * a.ai;
}

double airy_tail_weighted(double s, const AiryPair& a) {
    return (2.0 / 3.0) * (s * s * a.ai * a.ai - s * a.aip * a.aip) -
           a.ai * a.aip / 3.0;
}

} // namespace qcc
