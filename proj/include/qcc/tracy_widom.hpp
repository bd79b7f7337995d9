#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qcc/sampler.hpp"

namespace qcc {

enum class TwMethod { painleve, fredholm };

const char* tw_method_name(TwMethod m);

struct TwOptions {
    // Painleve II path: Hastings-McLeod boundary point and ODE tolerances.
    double right_cutoff = 10.0;
    double ode_rtol = 1e-11;
    double ode_rtol_coarse = 1e-8;
    // Fredholm path: Nystrom quadrature refinement levels.
    int nystrom_coarse = 60;
    int nystrom_fine = 90;
    // Refinement-level disagreement above this raises ConvergenceFailure.
    double agreement_budget = 1e-8;
};

struct TwValue {
    double f = 0.0;
    double err_est = 0.0;
};

TwValue f_tw(double x, TwMethod method, const TwOptions& opts = {});

struct TWTable {
    std::vector<double> xs;
    std::vector<double> fs;
    std::vector<double> errs;
    TwMethod method = TwMethod::painleve;
    double max_err_est = 0.0;
};

// xs must be ascending; the Painleve path evaluates the whole grid in one
// backward sweep per refinement level.
TWTable tw_grid(std::span<const double> xs, TwMethod method,
                const TwOptions& opts = {});

struct TwCheck {
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

struct TwSelfTestReport {
    bool pass = false;
    std::vector<TwCheck> checks;
};

// Monotonicity, cross-method agreement, derivative positivity, tail limits,
// and right-cutoff sensitivity on a 101-point grid over [-6, 4].
TwSelfTestReport tw_selftest(const TwOptions& opts = {});

struct TheoremBReport {
    uint32_t n = 0;
    uint32_t d = 0;
    double x_requested = 0.0;
    double x = 0.0; // recomputed from the integer d
    double p_est = 0.0;
    double p_stderr = 0.0;
    bool exact = false;
    double f = 0.0;
    double gap = 0.0;
};

// For each (n, x): d = round(2 sqrt(n) + x n^(1/6)), p estimated by the
// sampler (or exactly when enumeration is feasible), compared against
// F_TW at the recomputed x.
std::vector<TheoremBReport> theorem_b_scan(std::span<const uint32_t> ns,
                                           std::span<const double> xs,
                                           uint64_t trials, uint64_t seed,
                                           const McOptions& mc = {},
                                           const TwOptions& opts = {});

} // namespace qcc
