// Independent brute-force oracles used to freeze expected test values.
// Everything here is deliberately naive and separate from the library's
// computation paths.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include <gmpxx.h>

namespace oracles {

// partition function p(n) by textbook dynamic programming
inline uint64_t partition_count(uint32_t n) {
    std::vector<uint64_t> dp(n + 1, 0);
    dp[0] = 1;
    for (uint32_t part = 1; part <= n; ++part)
        for (uint32_t j = part; j <= n; ++j) dp[j] += dp[j - part];
    return dp[n];
}

// all partitions of n by recursive descent (order not meaningful)
inline std::vector<std::vector<uint32_t>> all_partitions(uint32_t n) {
    std::vector<std::vector<uint32_t>> out;
    std::vector<uint32_t> cur;
    std::function<void(uint32_t, uint32_t)> rec = [&](uint32_t rem, uint32_t cap) {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (uint32_t p = std::min(rem, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

// number of standard Young tableaux of the given shape, by backtracking
inline uint64_t count_syt(const std::vector<uint32_t>& shape) {
    const uint32_t n = std::accumulate(shape.begin(), shape.end(), 0u);
    std::vector<uint32_t> filled(shape.size(), 0); // cells used per row
    std::function<uint64_t(uint32_t)> rec = [&](uint32_t next) -> uint64_t {
        if (next == n) return 1;
        uint64_t total = 0;
        for (size_t r = 0; r < shape.size(); ++r) {
            if (filled[r] >= shape[r]) continue;
            if (r > 0 && filled[r - 1] <= filled[r]) continue; // column order
            ++filled[r];
            total += rec(next + 1);
            --filled[r];
        }
        return total;
    };
    return rec(0);
}

// number of semistandard tableaux with entries in 1..d: rows weakly
// increasing, columns strictly increasing
inline uint64_t count_ssyt(const std::vector<uint32_t>& shape, uint32_t d) {
    std::vector<std::vector<uint32_t>> t(shape.size());
    for (size_t r = 0; r < shape.size(); ++r) t[r].assign(shape[r], 0);
    std::function<uint64_t(size_t, size_t)> rec = [&](size_t r, size_t c) -> uint64_t {
        if (r == shape.size()) return 1;
        const size_t nr = (c + 1 < shape[r]) ? r : r + 1;
        const size_t nc = (c + 1 < shape[r]) ? c + 1 : 0;
        uint64_t total = 0;
        const uint32_t min_row = (c > 0) ? t[r][c - 1] : 1;            // weak
        const uint32_t min_col = (r > 0 && shape[r - 1] > c) ? t[r - 1][c] + 1 : 1;
        for (uint32_t v = std::max(min_row, min_col); v <= d; ++v) {
            t[r][c] = v;
            total += rec(nr, nc);
        }
        t[r][c] = 0;
        return total;
    };
    return shape.empty() ? 1 : rec(0, 0);
}

// longest increasing subsequence by quadratic dynamic programming
inline uint32_t lis_quadratic(const std::vector<uint32_t>& a) {
    const size_t n = a.size();
    std::vector<uint32_t> best(n, 1);
    uint32_t ans = n ? 1 : 0;
    for (size_t i = 1; i < n; ++i) {
        for (size_t j = 0; j < i; ++j)
            if (a[j] < a[i]) best[i] = std::max(best[i], best[j] + 1);
        ans = std::max(ans, best[i]);
    }
    return ans;
}

// classical color coding: exhaustive maximum of 1/prod(count_k!) over all
// d^n colorings
inline mpq_class classical_best(uint32_t n, uint32_t d) {
    std::vector<uint32_t> coloring(n, 0);
    mpq_class best = 0;
    for (;;) {
        std::vector<uint32_t> counts(d, 0);
        for (uint32_t c : coloring) ++counts[c];
        mpz_class denom = 1;
        for (uint32_t k : counts) {
            mpz_class f;
            mpz_fac_ui(f.get_mpz_t(), k);
            denom *= f;
        }
        mpq_class value(1, denom);
        value.canonicalize();
        if (value > best) best = value;
        // next coloring
        size_t i = 0;
        while (i < n && coloring[i] == d - 1) coloring[i++] = 0;
        if (i == n) break;
        ++coloring[i];
    }
    return best;
}

// adaptive Simpson quadrature
inline double simpson(const std::function<double(double)>& f, double a, double b,
                      double tol, int depth = 30) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fb = f(b), fm = f(m);
    std::function<double(double, double, double, double, double, double, int)>
        rec = [&](double x0, double x2, double f0, double f1, double f2,
                  double whole, int dep) -> double {
        const double x1l = 0.5 * (x0 + 0.5 * (x0 + x2));
        const double xm = 0.5 * (x0 + x2);
        const double x1r = 0.5 * (xm + x2);
        const double fl = f(x1l), fr = f(x1r);
        const double left = (xm - x0) / 6.0 * (f0 + 4.0 * fl + f1);
        const double right = (x2 - xm) / 6.0 * (f1 + 4.0 * fr + f2);
        if (dep <= 0 || std::abs(left + right - whole) < 15.0 * tol)
            return left + right + (left + right - whole) / 15.0;
        return rec(x0, xm, f0, fl, f1, left, dep - 1) +
               rec(xm, x2, f1, fr, f2, right, dep - 1);
    };
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return rec(a, b, fa, fm, fb, whole, depth);
}

} // namespace oracles
