#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qcc {

inline constexpr uint32_t kNoLimit = std::numeric_limits<uint32_t>::max();

// Young diagram: non-increasing positive row lengths. The empty partition
// (n = 0) is a valid degenerate value.
struct Partition {
    std::vector<uint32_t> parts;

    Partition() = default;
    explicit Partition(std::vector<uint32_t> p);

    uint64_t n() const;
    uint32_t rows() const { return static_cast<uint32_t>(parts.size()); }
    uint32_t first_row() const { return parts.empty() ? 0 : parts.front(); }

    bool operator==(const Partition&) const = default;

    std::string to_string() const; // "[3,1]"
};

Partition conjugate(const Partition& p);

// Hook lengths and contents for every cell, row-major.
struct CellStats {
    std::vector<uint32_t> hooks;
    std::vector<int32_t> contents;
};

CellStats cell_stats(const Partition& p);

// Sum of cell contents; also the eigenvalue of the transposition class sum
// on the irreducible representation labelled by p.
int64_t content_sum(const Partition& p);

// Streaming enumeration of partitions of n with rows(p) <= max_rows and
// first_row(p) <= max_cols, in decreasing lexicographic order.
// n == 0 yields the single empty partition.
class PartitionRange {
public:
    PartitionRange(uint64_t n, uint32_t max_rows = kNoLimit,
                   uint32_t max_cols = kNoLimit);

    class iterator {
    public:
        using value_type = Partition;
        using reference = const Partition&;
        using difference_type = std::ptrdiff_t;

        iterator() : range_(nullptr) {}
        explicit iterator(const PartitionRange* r);

        reference operator*() const { return current_; }
        const Partition* operator->() const { return &current_; }
        iterator& operator++();
        void operator++(int) { ++*this; }

        bool operator==(const iterator& o) const {
            return done_ == o.done_ && (done_ || current_ == o.current_);
        }

    private:
        void advance();

        const PartitionRange* range_;
        Partition current_;
        bool done_ = true;
    };

    iterator begin() const { return iterator(this); }
    iterator end() const { return iterator(); }

    uint64_t n() const { return n_; }
    uint32_t max_rows() const { return max_rows_; }
    uint32_t max_cols() const { return max_cols_; }

private:
    uint64_t n_;
    uint32_t max_rows_;
    uint32_t max_cols_;
};

template <typename F>
void for_each_partition(uint64_t n, uint32_t max_rows, uint32_t max_cols, F&& f) {
    for (const Partition& p : PartitionRange(n, max_rows, max_cols)) f(p);
}

std::vector<Partition> list_partitions(uint64_t n, uint32_t max_rows = kNoLimit,
                                       uint32_t max_cols = kNoLimit);

// Number of partitions of n with at most max_rows rows (exact).
mpz_class count_partitions(uint64_t n, uint32_t max_rows = kNoLimit);

} // namespace qcc
