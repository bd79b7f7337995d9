#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "qcc/partition.hpp"

namespace qcc {

// Unitary permutation operator on (C^d)^{tensor n}: box k's content moves to
// box sigma(k). Stored both as a basis index map and as a dense matrix.
struct PermutationOperator {
    std::vector<uint32_t> sigma;     // images of 0..n-1
    std::vector<uint32_t> basis_map; // T e_k = e_{basis_map[k]}
    Eigen::MatrixXd matrix;
};

struct PermutationRep {
    uint32_t n = 0;
    uint32_t d = 0;
    uint32_t dim = 0; // d^n
    std::vector<PermutationOperator> ops; // all n!, lexicographic in sigma
};

// One isotypic component: mult copies of the irrep labelled by partition.
// Column b*dim + a of basis is |rho, b, a>; the representation matrices
// <rho,b,a1| T_sigma |rho,b,a2> are aligned to agree across b.
struct IsotypicComponent {
    Partition partition;
    uint32_t dim = 0;  // D_rho
    uint32_t mult = 0; // m_rho
    Eigen::MatrixXd basis;
};

struct IsotypicDecomposition {
    uint32_t n = 0;
    uint32_t d = 0;
    std::vector<IsotypicComponent> components;
};

struct CovariantMeasurement {
    uint32_t n = 0;
    uint32_t d = 0;
    uint32_t ancilla_dim = 0;       // |R|
    Eigen::MatrixXd seed_operator;  // E on H_Q (x) H_R, index q*|R| + r
    Eigen::VectorXd code_state;     // normalized |e_max>
    double emax_norm_sq = 0.0;      // closed-form success probability
};

struct OracleTolerances {
    double structural = 1e-10;
    double positivity_floor = 1e-12;
    double degeneracy_gap = 1e-7;
};

// All n! permutation operators. SizeGuard unless 1 <= n <= 5, 1 <= d <= 3
// and d^n <= 243.
PermutationRep build_permutation_rep(uint32_t n, uint32_t d);

// Numerical isotypic decomposition: transposition class-sum eigenspaces
// matched to partitions by content sum, multiplicity copies split by a
// group-averaged generic operator, bases aligned by canonical intertwiners.
IsotypicDecomposition decompose(const PermutationRep& rep,
                                const OracleTolerances& tol = {});

// <rho,b,a1| T |rho,b,a2> for multiplicity copy b.
Eigen::MatrixXd rep_matrix(const IsotypicComponent& comp,
                           const PermutationOperator& op, uint32_t b);

// Identity-submatrix u^rho choice: E = |e_max><e_max| plus the orthogonal
// completion vectors needed for covariance completeness.
CovariantMeasurement build_optimal_measurement(const IsotypicDecomposition& decomp,
                                               uint32_t ancilla_dim);

struct EvaluationReport {
    double probability = 0.0;           // (1/n!) sum_sigma <Phi|T+ E_sigma T|Phi>
    double min_outcome = 0.0;           // smallest per-sigma term
    double completeness_residual = 0.0; // max-entry |sum_sigma T E T+ - 1|
    double min_eigenvalue = 0.0;        // min over sigma of lambda_min(E_sigma)
};

EvaluationReport verify_measurement(const CovariantMeasurement& meas,
                                    const PermutationRep& rep);

double evaluate_success(const CovariantMeasurement& meas,
                        const PermutationRep& rep);

} // namespace qcc
