#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "qcc/partition.hpp"

#include "oracles.hpp"

using namespace qcc;

namespace {
Partition P(std::vector<uint32_t> v) { return Partition(std::move(v)); }
} // namespace

TEST_CASE("enumeration order and contents match the documented examples") {
    const auto p4 = list_partitions(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0] == P({4}));
    CHECK(p4[1] == P({3, 1}));
    CHECK(p4[2] == P({2, 2}));
    CHECK(p4[3] == P({2, 1, 1}));
    CHECK(p4[4] == P({1, 1, 1, 1}));

    const auto p3r2 = list_partitions(3, 2);
    REQUIRE(p3r2.size() == 2);
    CHECK(p3r2[0] == P({3}));
    CHECK(p3r2[1] == P({2, 1}));

    const auto p1 = list_partitions(1);
    REQUIRE(p1.size() == 1);
    CHECK(p1[0] == P({1}));
}

TEST_CASE("n = 0 yields the single empty partition") {
    const auto p0 = list_partitions(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].parts.empty());
    CHECK(p0[0].n() == 0);
}

TEST_CASE("enumeration is strictly decreasing lexicographic") {
    for (uint32_t n : {5u, 8u, 12u}) {
        const auto ps = list_partitions(n);
        for (size_t i = 1; i < ps.size(); ++i)
            CHECK(std::lexicographical_compare(ps[i].parts.begin(), ps[i].parts.end(),
                                               ps[i - 1].parts.begin(),
                                               ps[i - 1].parts.end()));
    }
}

TEST_CASE("count equals the dynamic-programming oracle up to n = 30") {
    for (uint32_t n = 1; n <= 30; ++n) {
        uint64_t streamed = 0;
        for_each_partition(n, kNoLimit, kNoLimit, [&](const Partition&) { ++streamed; });
        CHECK(streamed == oracles::partition_count(n));
        CHECK(count_partitions(n) == static_cast<unsigned long>(streamed));
    }
}

TEST_CASE("restricted enumeration agrees with filtering the oracle list") {
    for (uint32_t n = 1; n <= 12; ++n) {
        for (uint32_t rows = 1; rows <= 5; ++rows) {
            for (uint32_t cols = 1; cols <= 5; ++cols) {
                std::set<std::vector<uint32_t>> expect;
                for (const auto& p : oracles::all_partitions(n))
                    if (p.size() <= rows && p.front() <= cols) expect.insert(p);
                std::set<std::vector<uint32_t>> got;
                for_each_partition(n, rows, cols,
                                   [&](const Partition& p) { got.insert(p.parts); });
                CHECK(got == expect);
            }
        }
    }
}

TEST_CASE("conjugate examples and involution") {
    CHECK(conjugate(P({3, 1})) == P({2, 1, 1}));
    CHECK(conjugate(P({2, 2})) == P({2, 2}));
    CHECK(conjugate(P({5})) == P({1, 1, 1, 1, 1}));

    for (uint32_t n = 1; n <= 30; ++n)
        for_each_partition(n, kNoLimit, kNoLimit, [&](const Partition& p) {
            const Partition c = conjugate(p);
            CHECK(c.n() == p.n());
            CHECK(conjugate(c) == p);
            CHECK(c.first_row() == p.rows());
            CHECK(c.rows() == p.first_row());
        });
}

TEST_CASE("row-constrained set equals conjugated column-constrained set") {
    for (uint32_t n = 1; n <= 14; ++n) {
        for (uint32_t d = 1; d <= 4; ++d) {
            std::set<std::vector<uint32_t>> rows_set, conj_cols_set;
            for_each_partition(n, d, kNoLimit,
                               [&](const Partition& p) { rows_set.insert(p.parts); });
            for_each_partition(n, kNoLimit, d, [&](const Partition& p) {
                conj_cols_set.insert(conjugate(p).parts);
            });
            CHECK(rows_set == conj_cols_set);
        }
    }
}

TEST_CASE("cell statistics match hand counts") {
    const CellStats s21 = cell_stats(P({2, 1}));
    CHECK(s21.hooks == std::vector<uint32_t>{3, 1, 1});
    CHECK(s21.contents == std::vector<int32_t>{0, 1, -1});

    const CellStats s3 = cell_stats(P({3}));
    CHECK(s3.hooks == std::vector<uint32_t>{3, 2, 1});
    CHECK(s3.contents == std::vector<int32_t>{0, 1, 2});

    const CellStats s1 = cell_stats(P({1}));
    CHECK(s1.hooks == std::vector<uint32_t>{1});
    CHECK(s1.contents == std::vector<int32_t>{0});
}

TEST_CASE("hooks of a single row are n, n-1, ..., 1") {
    for (uint32_t n : {1u, 4u, 9u}) {
        const CellStats st = cell_stats(P({n}));
        for (uint32_t j = 0; j < n; ++j) CHECK(st.hooks[j] == n - j);
    }
}

TEST_CASE("hook equals arm + leg + 1, counted directly") {
    for (uint32_t n = 1; n <= 10; ++n)
        for_each_partition(n, kNoLimit, kNoLimit, [&](const Partition& p) {
            const CellStats st = cell_stats(p);
            CHECK(st.hooks.size() == p.n());
            CHECK(st.contents.size() == p.n());
            size_t cell = 0;
            for (uint32_t i = 0; i < p.rows(); ++i) {
                for (uint32_t j = 0; j < p.parts[i]; ++j, ++cell) {
                    const uint32_t arm = p.parts[i] - j - 1;
                    uint32_t leg = 0;
                    for (uint32_t r = i + 1; r < p.rows(); ++r)
                        if (p.parts[r] > j) ++leg;
                    CHECK(st.hooks[cell] == arm + leg + 1);
                    CHECK(st.hooks[cell] >= 1);
                }
            }
        });
}

TEST_CASE("content sum closed form matches the cell statistics") {
    for (uint32_t n = 1; n <= 10; ++n)
        for_each_partition(n, kNoLimit, kNoLimit, [&](const Partition& p) {
            const CellStats st = cell_stats(p);
            int64_t direct = 0;
            for (int32_t c : st.contents) direct += c;
            CHECK(direct == content_sum(p));
        });
}

TEST_CASE("partition validation rejects malformed input") {
    CHECK_THROWS(P({0}));
    CHECK_THROWS(P({1, 2}));
    CHECK_THROWS(PartitionRange(4, 0));
}
