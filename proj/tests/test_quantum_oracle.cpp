#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "qcc/errors.hpp"
#include "qcc/quantum_oracle.hpp"
#include "qcc/success.hpp"

using namespace qcc;

namespace {

std::map<std::vector<uint32_t>, std::pair<uint32_t, uint32_t>>
component_table(const IsotypicDecomposition& decomp) {
    std::map<std::vector<uint32_t>, std::pair<uint32_t, uint32_t>> t;
    for (const IsotypicComponent& c : decomp.components)
        t[c.partition.parts] = {c.dim, c.mult};
    return t;
}

} // namespace

TEST_CASE("two-qubit transposition is the SWAP matrix") {
    const PermutationRep rep = build_permutation_rep(2, 2);
    REQUIRE(rep.ops.size() == 2);
    Eigen::MatrixXd swap(4, 4);
    swap << 1, 0, 0, 0,
            0, 0, 1, 0,
            0, 1, 0, 0,
            0, 0, 0, 1;
    CHECK((rep.ops[1].matrix - swap).cwiseAbs().maxCoeff() == 0.0);
    CHECK((rep.ops[0].matrix - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() ==
          0.0);
}

TEST_CASE("group law and unitarity hold for all pairs at n = 3, d = 2") {
    const PermutationRep rep = build_permutation_rep(3, 2);
    REQUIRE(rep.ops.size() == 6);
    for (const PermutationOperator& a : rep.ops) {
        CHECK((a.matrix * a.matrix.transpose() -
               Eigen::MatrixXd::Identity(rep.dim, rep.dim))
                  .cwiseAbs()
                  .maxCoeff() <= 1e-12);
        for (const PermutationOperator& b : rep.ops) {
            // composed permutation (a b)(x) = a(b(x))
            std::vector<uint32_t> ab(rep.n);
            for (uint32_t k = 0; k < rep.n; ++k) ab[k] = a.sigma[b.sigma[k]];
            const PermutationOperator* found = nullptr;
            for (const PermutationOperator& c : rep.ops)
                if (c.sigma == ab) found = &c;
            REQUIRE(found != nullptr);
            CHECK((a.matrix * b.matrix - found->matrix).cwiseAbs().maxCoeff() <=
                  1e-12);
        }
    }
}

TEST_CASE("n = 1 yields the single identity operator") {
    const PermutationRep rep = build_permutation_rep(1, 3);
    REQUIRE(rep.ops.size() == 1);
    CHECK((rep.ops[0].matrix - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() ==
          0.0);
}

TEST_CASE("size guard rejects representations beyond the cap") {
    CHECK_THROWS_AS(build_permutation_rep(6, 2), SizeGuard);
    CHECK_THROWS_AS(build_permutation_rep(3, 4), SizeGuard);
    CHECK_THROWS_AS(build_permutation_rep(0, 2), SizeGuard);
}

TEST_CASE("decomposition tables match the hook formulas") {
    const auto t22 = component_table(decompose(build_permutation_rep(2, 2)));
    CHECK(t22.at({2}) == std::make_pair(1u, 3u));
    CHECK(t22.at({1, 1}) == std::make_pair(1u, 1u));

    const auto t32 = component_table(decompose(build_permutation_rep(3, 2)));
    CHECK(t32.size() == 2);
    CHECK(t32.at({3}) == std::make_pair(1u, 4u));
    CHECK(t32.at({2, 1}) == std::make_pair(2u, 2u));
    CHECK(t32.count({1, 1, 1}) == 0);

    const auto t33 = component_table(decompose(build_permutation_rep(3, 3)));
    CHECK(t33.at({3}) == std::make_pair(1u, 10u));
    CHECK(t33.at({2, 1}) == std::make_pair(2u, 8u));
    CHECK(t33.at({1, 1, 1}) == std::make_pair(1u, 1u));
}

TEST_CASE("component bases are orthonormal and block-diagonalize every T") {
    for (auto [n, d] : std::vector<std::pair<uint32_t, uint32_t>>{
             {3, 2}, {4, 2}, {3, 3}, {4, 3}}) {
        const PermutationRep rep = build_permutation_rep(n, d);
        const IsotypicDecomposition decomp = decompose(rep);
        for (const IsotypicComponent& comp : decomp.components) {
            const Eigen::MatrixXd gram =
                comp.basis.transpose() * comp.basis;
            CHECK((gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols()))
                      .cwiseAbs()
                      .maxCoeff() <= 1e-10);
            // representation matrices agree across multiplicity copies
            for (const PermutationOperator& op : rep.ops) {
                const Eigen::MatrixXd d0 = rep_matrix(comp, op, 0);
                for (uint32_t b = 1; b < comp.mult; ++b)
                    CHECK((rep_matrix(comp, op, b) - d0).cwiseAbs().maxCoeff() <=
                          1e-10);
            }
        }
    }
}

TEST_CASE("orthogonality relations of the representation matrices") {
    const PermutationRep rep = build_permutation_rep(3, 2);
    const IsotypicDecomposition decomp = decompose(rep);
    const double g = 6.0;
    for (const IsotypicComponent& ca : decomp.components) {
        for (const IsotypicComponent& cb : decomp.components) {
            for (uint32_t a1 = 0; a1 < ca.dim; ++a1)
                for (uint32_t a2 = 0; a2 < ca.dim; ++a2)
                    for (uint32_t b1 = 0; b1 < cb.dim; ++b1)
                        for (uint32_t b2 = 0; b2 < cb.dim; ++b2) {
                            double sum = 0.0;
                            for (const PermutationOperator& op : rep.ops)
                                sum += rep_matrix(ca, op, 0)(a1, a2) *
                                       rep_matrix(cb, op, 0)(b1, b2);
                            const bool same = ca.partition == cb.partition &&
                                              a1 == b1 && a2 == b2;
                            const double expect =
                                same ? g / static_cast<double>(ca.dim) : 0.0;
                            CHECK(std::abs(sum - expect) <= 1e-9);
                        }
        }
    }
}

TEST_CASE("documented measurement probabilities") {
    struct Case {
        uint32_t n, d, ancilla;
        double expect;
    };
    const std::vector<Case> cases{
        {2, 2, 1, 1.0},
        {3, 2, 1, 5.0 / 6.0},
        {3, 2, 2, 5.0 / 6.0},
        {2, 1, 1, 0.5},
        {1, 2, 1, 1.0},
    };
    for (const Case& c : cases) {
        const PermutationRep rep = build_permutation_rep(c.n, c.d);
        const CovariantMeasurement meas =
            build_optimal_measurement(decompose(rep), c.ancilla);
        const EvaluationReport ev = verify_measurement(meas, rep);
        CHECK(std::abs(ev.probability - c.expect) <= 1e-10);
        CHECK(ev.completeness_residual <= 1e-10);
        CHECK(ev.min_eigenvalue >= -1e-12);
        CHECK(ev.min_outcome >= -1e-12);
    }
}

TEST_CASE("largest guarded sizes still verify") {
    // n = 5, d = 2: full verification of the constructed measurement
    {
        const PermutationRep rep = build_permutation_rep(5, 2);
        const CovariantMeasurement meas =
            build_optimal_measurement(decompose(rep), 2);
        const EvaluationReport ev = verify_measurement(meas, rep);
        CHECK(std::abs(ev.probability - p_extended_limited(5, 2, 2).p_float) <=
              1e-10);
        CHECK(ev.completeness_residual <= 1e-10);
    }
    // n = 5, d = 3 saturates the d^n cap; check the decomposition and the
    // closed-form norm of the constructed code state
    {
        const PermutationRep rep = build_permutation_rep(5, 3);
        const IsotypicDecomposition decomp = decompose(rep);
        uint64_t covered = 0;
        for (const IsotypicComponent& c : decomp.components)
            covered += static_cast<uint64_t>(c.dim) * c.mult;
        CHECK(covered == 243);
        const CovariantMeasurement meas = build_optimal_measurement(decomp, 1);
        CHECK(std::abs(meas.emax_norm_sq - p_nonextended(5, 3).p_float) <= 1e-12);
    }
}

TEST_CASE("achieved probability equals the closed form across a sweep") {
    for (uint32_t n = 1; n <= 4; ++n) {
        for (uint32_t d = 1; d <= 2; ++d) {
            const PermutationRep rep = build_permutation_rep(n, d);
            const IsotypicDecomposition decomp = decompose(rep);
            for (uint32_t ancilla = 1; ancilla <= 2; ++ancilla) {
                const CovariantMeasurement meas =
                    build_optimal_measurement(decomp, ancilla);
                const double closed =
                    p_extended_limited(n, d, mpz_class(ancilla)).p_float;
                CHECK(std::abs(evaluate_success(meas, rep) - closed) <= 1e-10);
                CHECK(std::abs(meas.emax_norm_sq - closed) <= 1e-12);
            }
        }
    }
}
