#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qcc/airy.hpp"

#include "oracles.hpp"

using namespace qcc;

TEST_CASE("large-argument expansion matches the library evaluator") {
    for (double s = 8.0; s <= 30.0; s += 0.5) {
        const AiryPair ref = airy(s);
        const AiryPair asym = airy_asymptotic(s);
        CHECK(std::abs(asym.ai - ref.ai) <= 1e-12 * std::abs(ref.ai));
        CHECK(std::abs(asym.aip - ref.aip) <= 1e-12 * std::abs(ref.aip));
    }
}

TEST_CASE("well-known values at the origin") {
    // Ai(0) = 3^(-2/3)/Gamma(2/3), Ai'(0) = -3^(-1/3)/Gamma(1/3)
    const AiryPair a0 = airy(0.0);
    CHECK(a0.ai == doctest::Approx(0.3550280538878172).epsilon(1e-13));
    CHECK(a0.aip == doctest::Approx(-0.2588194037928068).epsilon(1e-13));
}

TEST_CASE("tail integrals agree with adaptive quadrature") {
    for (double s : {-2.0, 0.0, 2.0, 5.0}) {
        const AiryPair a = airy(s);
        const double upper = 16.0; // kernel there is ~1e-24, far below tolerance
        const double sq = oracles::simpson(
            [](double t) {
                const AiryPair at = airy(t);
                return at.ai * at.ai;
            },
            s, upper, 1e-13);
        CHECK(airy_tail_sq(s, a) == doctest::Approx(sq).epsilon(1e-9));

        const double weighted = oracles::simpson(
            [s](double t) {
                const AiryPair at = airy(t);
                return (t - s) * at.ai * at.ai;
            },
            s, upper, 1e-13);
        CHECK(airy_tail_weighted(s, a) == doctest::Approx(weighted).epsilon(1e-9));
    }
}

TEST_CASE("tail integrals stay positive and decreasing on the right axis") {
    double prev_sq = 1e300, prev_w = 1e300;
    for (double s = 0.0; s <= 10.0; s += 1.0) {
        const AiryPair a = airy(s);
        const double sq = airy_tail_sq(s, a);
        const double w = airy_tail_weighted(s, a);
        CHECK(sq > 0.0);
        CHECK(w > 0.0);
        CHECK(sq < prev_sq);
        CHECK(w < prev_w);
        prev_sq = sq;
        prev_w = w;
    }
}

TEST_CASE("expansion rejects the domain it cannot serve") {
    CHECK_THROWS(airy_asymptotic(2.0));
}
