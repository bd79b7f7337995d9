#pragma once

#include <stdexcept>

namespace qcc {

// Exact enumeration would visit more partitions than the configured cap.
// Callers should fall back to the Monte Carlo path.
class FeasibilityExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Requested dense representation exceeds the d^n cap.
class SizeGuard : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two refinement levels of a numerical method disagree beyond budget.
class ConvergenceFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Rounded color count d = round(2*sqrt(n) + x*n^(1/6)) left [1, n].
class DOutOfRange : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// NaN or infinity where a finite value is required.
class NonFinite : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Numerical eigenspace separation fell below threshold; block matching
// cannot proceed reliably.
class DegeneracyUnresolved : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace qcc
