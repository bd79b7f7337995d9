#pragma once

namespace qcc {

struct AiryPair {
    double ai = 0.0;
    double aip = 0.0; // derivative
};

// Full-range Ai and Ai' (GSL-backed); used by the Fredholm-determinant path.
AiryPair airy(double s);

// Large-argument expansion of Ai and Ai' around zeta = (2/3) s^(3/2),
// truncated at the first negligible term. Accurate to < 1e-12 relative for
// s >= 8; used for the Painleve boundary data so that path stays
// independent of the GSL-backed evaluator.
AiryPair airy_asymptotic(double s);

// Closed-form tails, exact given (Ai(s), Ai'(s)):
//   integral_s^inf Ai(t)^2 dt           = Ai'^2 - s Ai^2
//   integral_s^inf (t - s) Ai(t)^2 dt   = (2/3)(s^2 Ai^2 - s Ai'^2) - Ai Ai'/3
double airy_tail_sq(double s, const AiryPair& a);
double airy_tail_weighted(double s, const AiryPair& a);

} // namespace qcc
