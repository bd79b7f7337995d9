#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "qcc/output_record.hpp"
#include "qcc/success.hpp"

using namespace qcc;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// run the built CLI; stderr is routed away from the captured stream
RunResult run_cli(const std::string& args, const std::string& env = "") {
    const std::string cmd =
        env + " " + std::string(QCC_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        res.out.append(buf.data(), got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

double cell_double(const OutputRecord& rec, size_t row, const std::string& col) {
    for (size_t i = 0; i < rec.columns.size(); ++i)
        if (rec.columns[i] == col)
            return std::strtod(rec.rows[row][i].text().c_str(), nullptr);
    FAIL("column not found: ", col);
    return 0.0;
}

std::string cell_text(const OutputRecord& rec, size_t row, const std::string& col) {
    for (size_t i = 0; i < rec.columns.size(); ++i)
        if (rec.columns[i] == col) return rec.rows[row][i].text();
    FAIL("column not found: ", col);
    return "";
}

} // namespace

TEST_CASE("table emits exact rationals") {
    const RunResult r = run_cli("table --n 3 --d 2 --scheme extended");
    CHECK(r.exit_code == 0);
    const OutputRecord rec = parse_csv(r.out);
    REQUIRE(rec.rows.size() == 1);
    CHECK(cell_text(rec, 0, "p_exact") == "5/6");

    const RunResult c = run_cli("table --n 1 --d 1 --scheme classical");
    CHECK(c.exit_code == 0);
    CHECK(cell_text(parse_csv(c.out), 0, "p_exact") == "1/1");
}

TEST_CASE("table ranges produce one row per (n, d)") {
    const RunResult r = run_cli("table --n 2..4 --d 2 --scheme nonextended");
    CHECK(r.exit_code == 0);
    const OutputRecord rec = parse_csv(r.out);
    REQUIRE(rec.rows.size() == 3);
    for (size_t row = 0; row < 3; ++row) {
        const uint32_t n = 2 + static_cast<uint32_t>(row);
        const mpq_class expect = *p_nonextended(n, 2).p_exact;
        CHECK(cell_text(rec, row, "p_exact") ==
              expect.get_num().get_str() + "/" + expect.get_den().get_str());
    }
}

TEST_CASE("table breakdown rows sum to the total") {
    const RunResult r =
        run_cli("table --n 4 --d 2 --scheme extended --breakdown");
    CHECK(r.exit_code == 0);
    const OutputRecord rec = parse_csv(r.out);
    mpq_class sum = 0;
    mpq_class total = -1;
    for (size_t row = 0; row < rec.rows.size(); ++row) {
        if (cell_text(rec, row, "row_type") == "term")
            sum += mpq_class(cell_text(rec, row, "contribution"));
        else
            total = mpq_class(cell_text(rec, row, "p_exact"));
    }
    CHECK(sum == total);
}

TEST_CASE("sample: trivial d >= n case and reproducibility") {
    const RunResult r =
        run_cli("sample --n 10 --d 10 --trials 100 --seed 1");
    CHECK(r.exit_code == 0);
    const OutputRecord rec = parse_csv(r.out);
    CHECK(cell_double(rec, 0, "estimate") == 1.0);
    CHECK(cell_double(rec, 0, "stderr") == 0.0);

    const RunResult again =
        run_cli("sample --n 10 --d 10 --trials 100 --seed 1");
    CHECK(again.out == r.out);
}

TEST_CASE("sample estimate is statistically consistent with the exact value") {
    const RunResult r =
        run_cli("sample --n 3 --d 2 --trials 100000 --seed 7 --estimator extended");
    CHECK(r.exit_code == 0);
    const OutputRecord rec = parse_csv(r.out);
    const double est = cell_double(rec, 0, "estimate");
    const double se = cell_double(rec, 0, "stderr");
    CHECK(std::abs(est - 5.0 / 6.0) <= 4.0 * se);
    const double lo = cell_double(rec, 0, "ci_low");
    const double hi = cell_double(rec, 0, "ci_high");
    CHECK(lo <= est);
    CHECK(est <= hi);
}

TEST_CASE("QCC_THREADS never changes emitted bytes") {
    const std::string cmd =
        "sample --n 200 --d 25 --trials 20000 --seed 99 --estimator extended";
    const RunResult a = run_cli(cmd, "QCC_THREADS=1");
    const RunResult b = run_cli(cmd, "QCC_THREADS=4");
    const RunResult c = run_cli(cmd, "QCC_THREADS=13");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);

    const std::string ne =
        "sample --n 40 --d 12 --trials 10000 --seed 3 --estimator nonextended";
    const RunResult x = run_cli(ne, "QCC_THREADS=1");
    const RunResult y = run_cli(ne, "QCC_THREADS=7");
    CHECK(x.out == y.out);
}

TEST_CASE("CSV and JSON emissions carry the same values") {
    const std::string cmd = "sample --n 30 --d 9 --trials 5000 --seed 11";
    const RunResult csv = run_cli(cmd + " --format csv");
    const RunResult json = run_cli(cmd + " --format json");
    const OutputRecord a = parse_csv(csv.out);
    const OutputRecord b = parse_json(json.out);
    for (const std::string col : {"estimate", "stderr", "ci_low", "ci_high"})
        CHECK(cell_double(a, 0, col) == cell_double(b, 0, col));
}

TEST_CASE("table handles the ancilla-limited scheme") {
    const RunResult r = run_cli(
        "table --n 4 --d 2 --scheme extended-limited --ancilla 2");
    CHECK(r.exit_code == 0);
    const OutputRecord rec = parse_csv(r.out);
    const mpq_class expect = *p_extended_limited(4, 2, 2).p_exact;
    CHECK(cell_text(rec, 0, "p_exact") ==
          expect.get_num().get_str() + "/" + expect.get_den().get_str());
    CHECK(cell_text(rec, 0, "ancilla") == "2");
}

TEST_CASE("tw selftest exits clean") {
    const RunResult r = run_cli("tw selftest");
    CHECK(r.exit_code == 0);
    const OutputRecord rec = parse_csv(r.out);
    CHECK(rec.rows.size() >= 6);
    for (size_t i = 0; i < rec.rows.size(); ++i)
        CHECK(cell_text(rec, i, "pass") == "true");
}

TEST_CASE("tw eval right tail") {
    const RunResult r = run_cli("tw eval --x 4 --method painleve");
    CHECK(r.exit_code == 0);
    CHECK(cell_double(parse_csv(r.out), 0, "f_tw") >= 1.0 - 1e-7);
}

TEST_CASE("tw eval grid syntax") {
    const RunResult r = run_cli("tw eval --x -2:2:1 --method fredholm");
    CHECK(r.exit_code == 0);
    CHECK(parse_csv(r.out).rows.size() == 5);
}

TEST_CASE("verify runs clean at n = 3, d = 2") {
    const RunResult r = run_cli("verify --n 3 --d 2 --ancilla 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("OK") != std::string::npos);

    const RunResult j = run_cli("verify --n 2 --d 2 --ancilla 2 --format json");
    CHECK(j.exit_code == 0);
    const OutputRecord rec = parse_json(j.out);
    CHECK(rec.rows.size() >= 2);
}

TEST_CASE("documented exit codes") {
    CHECK(run_cli("table --n 3 --d 2 --scheme bogus").exit_code == 2);
    CHECK(run_cli("table --n 3 --scheme extended").exit_code == 2); // missing --d
    CHECK(run_cli("table --n 200 --d 199 --scheme nonextended").exit_code == 3);
    CHECK(run_cli("verify --n 5 --d 3").exit_code == 2); // size guard
    CHECK(run_cli("tw theoremB --n 4 --x -3 --trials 10 --seed 1").exit_code == 5);
    CHECK(run_cli("sample --n 0 --d 1 --trials 10 --seed 1").exit_code == 2);
}
