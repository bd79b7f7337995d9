#include "qcc/quantum_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "qcc/errors.hpp"
#include "qcc/rep_data.hpp"
#include "qcc/rng.hpp"

namespace qcc {

namespace {

constexpr uint32_t kDimCap = 243;

// basis index <-> digit string (i_1 .. i_n), big-endian base d
uint32_t apply_sigma_to_index(uint32_t idx, const std::vector<uint32_t>& sigma_inv,
                              uint32_t n, uint32_t d) {
    // decode digits
    uint32_t digits[8];
    for (uint32_t k = n; k-- > 0;) {
        digits[k] = idx % d;
        idx /= d;
    }
    // j_k = i_{sigma^{-1}(k)}
    uint32_t out = 0;
    for (uint32_t k = 0; k < n; ++k) out = out * d + digits[sigma_inv[k]];
    return out;
}

std::vector<uint32_t> sigma_basis_map(const std::vector<uint32_t>& sigma,
                                      uint32_t n, uint32_t d, uint32_t dim) {
    std::vector<uint32_t> inv(n);
    for (uint32_t k = 0; k < n; ++k) inv[sigma[k]] = k;
    std::vector<uint32_t> map(dim);
    for (uint32_t idx = 0; idx < dim; ++idx)
        map[idx] = apply_sigma_to_index(idx, inv, n, d);
    return map;
}

Eigen::MatrixXd map_to_matrix(const std::vector<uint32_t>& map) {
    const auto dim = static_cast<Eigen::Index>(map.size());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index k = 0; k < dim; ++k) m(map[k], k) = 1.0;
    return m;
}

// sum over a set of transpositions (i k), i < k, as a dense symmetric matrix
Eigen::MatrixXd transposition_sum(uint32_t n, uint32_t d, uint32_t dim,
                                  uint32_t k_fixed /* 0 = all pairs */) {
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(dim, dim);
    std::vector<uint32_t> sigma(n);
    for (uint32_t k = 1; k < n; ++k) {
        if (k_fixed != 0 && k != k_fixed) continue;
        for (uint32_t i = 0; i < k; ++i) {
            std::iota(sigma.begin(), sigma.end(), 0);
            std::swap(sigma[i], sigma[k]);
            const std::vector<uint32_t> map = sigma_basis_map(sigma, n, d, dim);
            for (uint32_t idx = 0; idx < dim; ++idx) c(map[idx], idx) += 1.0;
        }
    }
    return c;
}

// sigma-conjugation average (1/g) sum_sigma T Z T^t via index maps
Eigen::MatrixXd conjugation_average(const PermutationRep& rep,
                                    const Eigen::MatrixXd& z) {
    const uint32_t dim = rep.dim;
    Eigen::MatrixXd avg = Eigen::MatrixXd::Zero(dim, dim);
    for (const PermutationOperator& op : rep.ops) {
        const std::vector<uint32_t>& m = op.basis_map;
        for (uint32_t i = 0; i < dim; ++i)
            for (uint32_t j = 0; j < dim; ++j) avg(m[i], m[j]) += z(i, j);
    }
    return avg / static_cast<double>(rep.ops.size());
}

Eigen::MatrixXd seeded_symmetric(Eigen::Index m, uint64_t seed) {
    Xoshiro256ss rng(seed);
    Eigen::MatrixXd s(m, m);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < m; ++j)
            s(i, j) = 2.0 * rng.next_double() - 1.0;
    return 0.5 * (s + s.transpose()).eval();
}

// cluster sorted eigenvalues; returns [begin, end) column ranges
std::vector<std::pair<Eigen::Index, Eigen::Index>>
cluster_eigenvalues(const Eigen::VectorXd& vals, double gap) {
    std::vector<std::pair<Eigen::Index, Eigen::Index>> out;
    Eigen::Index start = 0;
    for (Eigen::Index i = 1; i <= vals.size(); ++i) {
        if (i == vals.size() || vals[i] - vals[i - 1] > gap) {
            out.emplace_back(start, i);
            start = i;
        }
    }
    return out;
}

} // namespace

PermutationRep build_permutation_rep(uint32_t n, uint32_t d) {
    if (n < 1 || n > 5 || d < 1 || d > 3)
        throw SizeGuard("build_permutation_rep: require 1 <= n <= 5, 1 <= d <= 3");
    uint64_t dim = 1;
    for (uint32_t k = 0; k < n; ++k) dim *= d;
    if (dim > kDimCap)
        throw SizeGuard("build_permutation_rep: d^n exceeds " +
                        std::to_string(kDimCap));

    PermutationRep rep;
    rep.n = n;
    rep.d = d;
    rep.dim = static_cast<uint32_t>(dim);
    std::vector<uint32_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        PermutationOperator op;
        op.sigma = sigma;
        op.basis_map = sigma_basis_map(sigma, n, d, rep.dim);
        op.matrix = map_to_matrix(op.basis_map);
        rep.ops.push_back(std::move(op));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return rep;
}

IsotypicDecomposition decompose(const PermutationRep& rep,
                                const OracleTolerances& tol) {
    IsotypicDecomposition out;
    out.n = rep.n;
    out.d = rep.d;
    const uint32_t dim = rep.dim;

    // expected (partition, D, m, content sum) from the hook formulas
    struct Expected {
        Partition p;
        uint32_t D, m;
        int64_t csum;
    };
    std::vector<Expected> expected;
    for_each_partition(rep.n, rep.d, kNoLimit, [&](const Partition& p) {
        expected.push_back({p, static_cast<uint32_t>(dim_irrep(p).get_ui()),
                            static_cast<uint32_t>(mult_irrep(p, rep.d).get_ui()),
                            content_sum(p)});
    });
    for (size_t i = 0; i < expected.size(); ++i)
        for (size_t j = i + 1; j < expected.size(); ++j)
            if (expected[i].csum == expected[j].csum)
                throw DegeneracyUnresolved(
                    "decompose: content-sum collision between components");

    if (rep.n == 1) {
        // no transpositions to diagonalize; the whole space is m copies of
        // the trivial irrep
        IsotypicComponent c;
        c.partition = expected[0].p;
        c.dim = 1;
        c.mult = rep.d;
        c.basis = Eigen::MatrixXd::Identity(dim, dim);
        out.components.push_back(std::move(c));
        return out;
    }

    // isotypic split: eigenspaces of the transposition class sum; the
    // eigenvalue on component rho is the integer content sum of rho
    const Eigen::MatrixXd c2 = transposition_sum(rep.n, rep.d, dim, 0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(c2);
    if (es.info() != Eigen::Success)
        throw DegeneracyUnresolved("decompose: class-sum eigensolve failed");

    std::map<int64_t, std::vector<Eigen::Index>> groups;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const double v = es.eigenvalues()[i];
        const auto key = static_cast<int64_t>(std::llround(v));
        if (std::abs(v - static_cast<double>(key)) > 1e-6)
            throw DegeneracyUnresolved(
                "decompose: class-sum eigenvalue far from integer");
        groups[key].push_back(i);
    }

    for (const Expected& exp : expected) {
        auto it = groups.find(exp.csum);
        if (it == groups.end() ||
            it->second.size() != static_cast<size_t>(exp.D) * exp.m)
            throw DegeneracyUnresolved(
                "decompose: eigenspace of " + exp.p.to_string() +
                " does not match D*m from the hook formulas");

        const auto block = static_cast<Eigen::Index>(it->second.size());
        Eigen::MatrixXd q(dim, block);
        for (Eigen::Index c = 0; c < block; ++c)
            q.col(c) = es.eigenvectors().col(it->second[c]);

        // split multiplicity copies: eigenspaces of a group-averaged generic
        // symmetric operator restricted to this component (commutant element)
        std::vector<Eigen::MatrixXd> copies;
        if (exp.m == 1) {
            copies.push_back(q);
        } else {
            bool split_ok = false;
            for (uint64_t attempt = 0; attempt < 3 && !split_ok; ++attempt) {
                const Eigen::MatrixXd z =
                    q * seeded_symmetric(block, 0x5eedULL + attempt) * q.transpose();
                const Eigen::MatrixXd avg_block =
                    q.transpose() * conjugation_average(rep, z) * q;
                Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> esb(
                    0.5 * (avg_block + avg_block.transpose()));
                const auto clusters =
                    cluster_eigenvalues(esb.eigenvalues(), tol.degeneracy_gap);
                if (clusters.size() != exp.m) continue;
                bool sizes_ok = true;
                for (const auto& [b, e] : clusters) sizes_ok &= (e - b == exp.D);
                if (!sizes_ok) continue;
                copies.clear();
                for (const auto& [b, e] : clusters)
                    copies.push_back(q * esb.eigenvectors().middleCols(b, e - b));
                split_ok = true;
            }
            if (!split_ok)
                throw DegeneracyUnresolved(
                    "decompose: multiplicity split failed for " + exp.p.to_string());
        }

        // canonical basis inside copy 0: simultaneous Jucys-Murphy
        // eigenvectors, separated via a base-9 weighting of the class sums
        Eigen::MatrixXd u0 = copies[0];
        if (exp.D > 1) {
            Eigen::MatrixXd y = Eigen::MatrixXd::Zero(dim, dim);
            double w = 1.0;
            for (uint32_t k = 1; k < rep.n; ++k, w *= 9.0)
                y += w * transposition_sum(rep.n, rep.d, dim, k);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> esy(
                (u0.transpose() * y * u0).eval());
            for (Eigen::Index i = 1; i < esy.eigenvalues().size(); ++i)
                if (esy.eigenvalues()[i] - esy.eigenvalues()[i - 1] < tol.degeneracy_gap)
                    throw DegeneracyUnresolved(
                        "decompose: Jucys-Murphy spectrum not simple in " +
                        exp.p.to_string());
            u0 = u0 * esy.eigenvectors();
        }
        // deterministic sign: largest-magnitude coefficient positive
        for (Eigen::Index c = 0; c < u0.cols(); ++c) {
            Eigen::Index imax = 0;
            u0.col(c).cwiseAbs().maxCoeff(&imax);
            if (u0(imax, c) < 0) u0.col(c) = -u0.col(c);
        }

        IsotypicComponent comp;
        comp.partition = exp.p;
        comp.dim = exp.D;
        comp.mult = exp.m;
        comp.basis.resize(dim, static_cast<Eigen::Index>(exp.D) * exp.m);
        comp.basis.leftCols(exp.D) = u0;

        // transport the canonical basis to the other copies with the
        // group-averaged intertwiner (proportional to an isometry by Schur)
        for (uint32_t b = 1; b < exp.m; ++b) {
            Eigen::MatrixXd aligned;
            bool ok = false;
            for (uint64_t attempt = 0; attempt < 3 && !ok; ++attempt) {
                Eigen::MatrixXd w = Eigen::MatrixXd::Identity(exp.D, exp.D);
                if (attempt > 0) w = seeded_symmetric(exp.D, 0xa11e + attempt);
                const Eigen::MatrixXd z =
                    copies[b] * w * copies[0].transpose();
                const Eigen::MatrixXd phi = conjugation_average(rep, z);
                aligned = phi * u0;
                const double scale = aligned.col(0).norm();
                if (scale < 1e-8) continue;
                aligned /= scale;
                const double ortho =
                    (aligned.transpose() * aligned -
                     Eigen::MatrixXd::Identity(exp.D, exp.D))
                        .cwiseAbs()
                        .maxCoeff();
                ok = ortho < 1e-8;
            }
            if (!ok)
                throw DegeneracyUnresolved(
                    "decompose: intertwiner transport failed for " +
                    exp.p.to_string());
            comp.basis.middleCols(static_cast<Eigen::Index>(b) * exp.D, exp.D) =
                aligned;
        }
        out.components.push_back(std::move(comp));
    }

    // every class-sum eigenspace must be consumed: sum D*m == d^n
    uint64_t covered = 0;
    for (const IsotypicComponent& c : out.components)
        covered += static_cast<uint64_t>(c.dim) * c.mult;
    if (covered != dim)
        throw DegeneracyUnresolved("decompose: components do not cover the space");
    return out;
}

Eigen::MatrixXd rep_matrix(const IsotypicComponent& comp,
                           const PermutationOperator& op, uint32_t b) {
    const Eigen::Index D = comp.dim;
    const Eigen::MatrixXd block =
        comp.basis.middleCols(static_cast<Eigen::Index>(b) * D, D);
    Eigen::MatrixXd permuted(block.rows(), D);
    for (Eigen::Index k = 0; k < block.rows(); ++k)
        permuted.row(op.basis_map[static_cast<uint32_t>(k)]) = block.row(k);
    return block.transpose() * permuted;
}

CovariantMeasurement build_optimal_measurement(const IsotypicDecomposition& decomp,
                                               uint32_t ancilla_dim) {
    if (ancilla_dim < 1)
        throw std::invalid_argument("build_optimal_measurement: |R| >= 1 required");
    const uint32_t R = ancilla_dim;
    const auto dim_q = static_cast<Eigen::Index>(decomp.components.empty()
                                                     ? 0
                                                     : decomp.components[0].basis.rows());
    const Eigen::Index full = dim_q * R;
    const double g = std::tgamma(static_cast<double>(decomp.n) + 1.0);

    CovariantMeasurement meas;
    meas.n = decomp.n;
    meas.d = decomp.d;
    meas.ancilla_dim = R;
    meas.seed_operator = Eigen::MatrixXd::Zero(full, full);

    // |rho, b, a> tensor |r>  ->  full-space vector
    auto embedded = [&](const IsotypicComponent& comp, uint32_t b, uint32_t a,
                        uint32_t r) {
        Eigen::VectorXd v = Eigen::VectorXd::Zero(full);
        const Eigen::VectorXd col =
            comp.basis.col(static_cast<Eigen::Index>(b) * comp.dim + a);
        for (Eigen::Index q = 0; q < dim_q; ++q) v[q * R + r] = col[q];
        return v;
    };

    Eigen::VectorXd e_max = Eigen::VectorXd::Zero(full);
    double norm_sq = 0.0;
    std::vector<Eigen::VectorXd> extras;
    for (const IsotypicComponent& comp : decomp.components) {
        const double amp = std::sqrt(static_cast<double>(comp.dim) / g);
        const uint64_t columns = static_cast<uint64_t>(comp.mult) * R;
        const uint64_t k_rho = std::min<uint64_t>(columns, comp.dim);
        for (uint64_t j = 0; j < columns; ++j) {
            const uint32_t b = static_cast<uint32_t>(j / R);
            const uint32_t r = static_cast<uint32_t>(j % R);
            if (j < k_rho) {
                // identity submatrix: column (b, r) pairs with row a = j
                e_max += amp * embedded(comp, b, static_cast<uint32_t>(j), r);
            } else {
                // completion vector keeping the remaining columns orthonormal
                const uint32_t a = static_cast<uint32_t>(j % comp.dim);
                extras.push_back(amp * embedded(comp, b, a, r));
            }
        }
        norm_sq += static_cast<double>(k_rho) * comp.dim / g;
    }

    meas.seed_operator = e_max * e_max.transpose();
    for (const Eigen::VectorXd& e : extras)
        meas.seed_operator += e * e.transpose();
    meas.emax_norm_sq = norm_sq;
    meas.code_state = e_max / e_max.norm();
    return meas;
}

EvaluationReport verify_measurement(const CovariantMeasurement& meas,
                                    const PermutationRep& rep) {
    const uint32_t R = meas.ancilla_dim;
    const Eigen::Index full = meas.seed_operator.rows();
    const double g = static_cast<double>(rep.ops.size());

    EvaluationReport report;
    report.min_outcome = 1e300;
    report.min_eigenvalue = 1e300;
    Eigen::MatrixXd completeness = Eigen::MatrixXd::Zero(full, full);
    Eigen::MatrixXd e_sigma(full, full);
    Eigen::VectorXd z(full);

    double total = 0.0;
    for (const PermutationOperator& op : rep.ops) {
        // QR index map for T_sigma (x) 1_R
        auto qr_map = [&](Eigen::Index p) {
            const Eigen::Index q = p / R, r = p % R;
            return static_cast<Eigen::Index>(op.basis_map[static_cast<uint32_t>(q)]) * R + r;
        };
        for (Eigen::Index i = 0; i < full; ++i) {
            const Eigen::Index mi = qr_map(i);
            for (Eigen::Index j = 0; j < full; ++j)
                e_sigma(mi, qr_map(j)) = meas.seed_operator(i, j);
        }
        completeness += e_sigma;
        for (Eigen::Index i = 0; i < full; ++i)
            z[qr_map(i)] = meas.code_state[i];
        const double term = z.dot(e_sigma * z);
        total += term;
        report.min_outcome = std::min(report.min_outcome, term);

        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(e_sigma,
                                                          Eigen::EigenvaluesOnly);
        report.min_eigenvalue =
            std::min(report.min_eigenvalue, es.eigenvalues().minCoeff());
    }
    report.probability = total / g;
    report.completeness_residual =
        (completeness - Eigen::MatrixXd::Identity(full, full)).cwiseAbs().maxCoeff();
    return report;
}

double evaluate_success(const CovariantMeasurement& meas,
                        const PermutationRep& rep) {
    return verify_measurement(meas, rep).probability;
}

} // namespace qcc
