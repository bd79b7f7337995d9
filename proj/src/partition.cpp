#include "qcc/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qcc {

Partition::Partition(std::vector<uint32_t> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] == 0)
            throw std::invalid_argument("Partition: zero part");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("Partition: parts must be non-increasing");
    }
}

uint64_t Partition::n() const {
    return std::accumulate(parts.begin(), parts.end(), uint64_t{0});
}

std::string Partition::to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts[i]);
    }
    s += ']';
    return s;
}

Partition conjugate(const Partition& p) {
    Partition q;
    if (p.parts.empty()) return q;
    q.parts.resize(p.parts.front());
    // column j has one cell for every row of length > j
    for (uint32_t j = 0; j < p.parts.front(); ++j) {
        uint32_t c = 0;
        for (uint32_t len : p.parts) {
            if (len > j) ++c;
            else break;
        }
        q.parts[j] = c;
    }
    return q;
}

CellStats cell_stats(const Partition& p) {
    CellStats st;
    const Partition conj = conjugate(p);
    st.hooks.reserve(p.n());
    st.contents.reserve(p.n());
    for (uint32_t i = 0; i < p.rows(); ++i) {
        const uint32_t len = p.parts[i];
        for (uint32_t j = 0; j < len; ++j) {
            // hook = arm + leg + 1 = (len-1-j) + (conj_j-1-i) + 1
            st.hooks.push_back(len + conj.parts[j] - i - j - 1);
            st.contents.push_back(static_cast<int32_t>(j) - static_cast<int32_t>(i));
        }
    }
    return st;
}

int64_t content_sum(const Partition& p) {
    int64_t s = 0;
    for (uint32_t i = 0; i < p.rows(); ++i) {
        const int64_t len = p.parts[i];
        s += len * (len - 1) / 2 - static_cast<int64_t>(i) * len;
    }
    return s;
}

PartitionRange::PartitionRange(uint64_t n, uint32_t max_rows, uint32_t max_cols)
    : n_(n), max_rows_(max_rows), max_cols_(max_cols) {
    if (max_rows_ == 0 || max_cols_ == 0)
        throw std::invalid_argument("PartitionRange: constraints must be >= 1");
}

namespace {

// Decreasing-lex-first partition of m with parts <= cap appended to out.
// Caller guarantees m <= cap * rows_budget.
void append_greedy(std::vector<uint32_t>& out, uint64_t m, uint32_t cap) {
    while (m > 0) {
        const uint32_t part = static_cast<uint32_t>(std::min<uint64_t>(cap, m));
        out.push_back(part);
        m -= part;
    }
}

} // namespace

PartitionRange::iterator::iterator(const PartitionRange* r) : range_(r) {
    const uint64_t n = r->n();
    const uint32_t cap = static_cast<uint32_t>(
        std::min<uint64_t>(r->max_cols(), n == 0 ? 1 : n));
    if (n > static_cast<uint64_t>(cap) * r->max_rows()) {
        done_ = true; // empty range, nothing fits
        return;
    }
    current_.parts.clear();
    append_greedy(current_.parts, n, cap);
    done_ = false;
}

PartitionRange::iterator& PartitionRange::iterator::operator++() {
    advance();
    return *this;
}

void PartitionRange::iterator::advance() {
    if (done_) return;
    std::vector<uint32_t>& parts = current_.parts;
    uint64_t suffix = 0;
    for (size_t j = parts.size(); j-- > 0;) {
        suffix += parts[j];
        const uint32_t cap = parts[j] - 1;
        if (cap == 0) continue;
        const uint64_t rows_left = range_->max_rows() - j;
        if (suffix > static_cast<uint64_t>(cap) * rows_left) continue;
        parts.resize(j);
        append_greedy(parts, suffix, cap);
        return;
    }
    done_ = true;
}

std::vector<Partition> list_partitions(uint64_t n, uint32_t max_rows,
                                       uint32_t max_cols) {
    std::vector<Partition> out;
    for (const Partition& p : PartitionRange(n, max_rows, max_cols))
        out.push_back(p);
    return out;
}

mpz_class count_partitions(uint64_t n, uint32_t max_rows) {
    // partitions with <= k rows == partitions into parts <= k (conjugation)
    const uint64_t k = std::min<uint64_t>(max_rows, n);
    std::vector<mpz_class> dp(n + 1);
    dp[0] = 1;
    for (uint64_t part = 1; part <= k; ++part)
        for (uint64_t j = part; j <= n; ++j)
            dp[j] += dp[j - part];
    return dp[n];
}

} // namespace qcc
