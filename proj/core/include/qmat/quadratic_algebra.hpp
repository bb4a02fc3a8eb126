#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <qmat/error.hpp>
#include <qmat/hecke_operator.hpp>
#include <qmat/matrix.hpp>
#include <qmat/subspace.hpp>
#include <qmat/tensor_index.hpp>

namespace qmat {

// A quadratic algebra given by its space of degree-2 relations.  Graded
// components are handled through the relation subspaces only: the degree
// n component of the algebra is the quotient of the n-th tensor power by
// the sum of the shifted relation spaces, and the dual algebra's
// components are their intersection.
template <ScalarField K>
struct QuadraticAlgebra {
    std::size_t generator_dim = 0;
    Subspace<K> relations;
    std::string label;
    // Hom-type algebras on W* (x) V keep the factor dimensions so degree-n
    // spaces can be indexed in sorted order W*^n (x) V^n rather than by
    // interleaved generator legs.  Both stay 0 for algebras on a plain V.
    std::size_t dual_dim = 0;
    std::size_t vec_dim = 0;
};

// Symmetric algebra S_R: relations Im(R - q).
template <ScalarField K>
QuadraticAlgebra<K> sym_algebra(const HeckeOp<K>& op) {
    Matrix<K> m = op.R;
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, i) = m.at(i, i) - op.q;
    return {static_cast<std::size_t>(op.d), Subspace<K>::image(m), "S"};
}

// Exterior algebra Lambda_R: relations Im(R + 1).
template <ScalarField K>
QuadraticAlgebra<K> ext_algebra(const HeckeOp<K>& op) {
    Matrix<K> m = op.R;
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, i) = m.at(i, i) + K::one();
    return {static_cast<std::size_t>(op.d), Subspace<K>::image(m), "Lambda"};
}

// Hom algebra M_{SR} on W* (x) V: relations Im(tS^{-1} (x) R - id) in the
// dual-major Kronecker order (dual pair index times dR^2 plus vector pair
// index).
template <ScalarField K>
QuadraticAlgebra<K> hom_algebra(const HeckeOp<K>& S, const HeckeOp<K>& R) {
    require(S.q == R.q, "ParameterMismatch",
            "hom relations need operators with equal q");
    Matrix<K> m = Matrix<K>::kronecker(S.R.inverse().transpose(), R.R);
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, i) = m.at(i, i) - K::one();
    QuadraticAlgebra<K> a{static_cast<std::size_t>(S.d) * static_cast<std::size_t>(R.d),
                          Subspace<K>::image(m), "M"};
    a.dual_dim = static_cast<std::size_t>(S.d);
    a.vec_dim = static_cast<std::size_t>(R.d);
    return a;
}

// Alternating hom algebra N_{SR}: relations Im(tS (x) R + q).
template <ScalarField K>
QuadraticAlgebra<K> fhom_algebra(const HeckeOp<K>& S, const HeckeOp<K>& R) {
    require(S.q == R.q, "ParameterMismatch",
            "hom relations need operators with equal q");
    Matrix<K> m = Matrix<K>::kronecker(S.R.transpose(), R.R);
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, i) = m.at(i, i) + R.q;
    QuadraticAlgebra<K> a{static_cast<std::size_t>(S.d) * static_cast<std::size_t>(R.d),
                          Subspace<K>::image(m), "N"};
    a.dual_dim = static_cast<std::size_t>(S.d);
    a.vec_dim = static_cast<std::size_t>(R.d);
    return a;
}

template <ScalarField K>
QuadraticAlgebra<K> end_algebra(const HeckeOp<K>& op) {
    QuadraticAlgebra<K> a = hom_algebra(op, op);
    a.label = "E";
    return a;
}

template <ScalarField K>
QuadraticAlgebra<K> fend_algebra(const HeckeOp<K>& op) {
    QuadraticAlgebra<K> a = fhom_algebra(op, op);
    a.label = "F";
    return a;
}

// The relation space placed at tensor slots i, i+1 of the degree-n
// tensor power (0-based slot index, 0 <= i <= n-2).  Bipartite algebras
// embed into the sorted ambient W*^n (x) V^n; the relation then occupies
// digits i, i+1 of both the dual and the vector multi-index.
template <ScalarField K>
Matrix<K> relation_rows_at(const QuadraticAlgebra<K>& A, int n, int i) {
    const Matrix<K>& rel = A.relations.basis();
    if (A.dual_dim != 0) {
        const std::size_t dW = A.dual_dim;
        const std::size_t dV = A.vec_dim;
        const std::size_t preW = ipow(dW, i), postW = ipow(dW, n - i - 2);
        const std::size_t preV = ipow(dV, i), postV = ipow(dV, n - i - 2);
        const std::size_t dVn = ipow(dV, n);
        Matrix<K> rows(rel.rows() * preW * postW * preV * postV,
                       ipow(dW, n) * dVn);
        std::size_t r = 0;
        for (std::size_t b = 0; b < rel.rows(); ++b)
            for (std::size_t hw = 0; hw < preW; ++hw)
                for (std::size_t lw = 0; lw < postW; ++lw)
                    for (std::size_t hv = 0; hv < preV; ++hv)
                        for (std::size_t lv = 0; lv < postV; ++lv, ++r)
                            for (std::size_t pair = 0; pair < rel.cols(); ++pair) {
                                const K& v = rel.at(b, pair);
                                if (v.is_zero()) continue;
                                const std::size_t wp = pair / (dV * dV);
                                const std::size_t vp = pair % (dV * dV);
                                const std::size_t D = (hw * dW * dW + wp) * postW + lw;
                                const std::size_t X = (hv * dV * dV + vp) * postV + lv;
                                rows.at(r, D * dVn + X) = v;
                            }
        return rows;
    }
    const std::size_t g = A.generator_dim;
    const std::size_t pre = ipow(g, i);
    const std::size_t post = ipow(g, n - i - 2);
    const std::size_t total = ipow(g, n);
    Matrix<K> rows(rel.rows() * pre * post, total);
    std::size_t r = 0;
    for (std::size_t b = 0; b < rel.rows(); ++b) {
        for (std::size_t hi = 0; hi < pre; ++hi) {
            for (std::size_t lo = 0; lo < post; ++lo, ++r) {
                for (std::size_t pair = 0; pair < g * g; ++pair) {
                    const K& v = rel.at(b, pair);
                    if (v.is_zero()) continue;
                    rows.at(r, (hi * g * g + pair) * post + lo) = v;
                }
            }
        }
    }
    return rows;
}

// Sum_i of the embedded relation spaces in degree n.
template <ScalarField K>
Subspace<K> relation_sum(const QuadraticAlgebra<K>& A, int n) {
    require(n >= 2, "DimensionMismatch", "relation spaces live in degree >= 2");
    Matrix<K> acc = relation_rows_at(A, n, 0);
    for (int i = 1; i <= n - 2; ++i)
        acc = Matrix<K>::vstack(acc, relation_rows_at(A, n, i));
    return Subspace<K>::from_rows(std::move(acc));
}

// Intersection over i of the embedded relation spaces in degree n.
template <ScalarField K>
Subspace<K> relation_intersection(const QuadraticAlgebra<K>& A, int n) {
    require(n >= 2, "DimensionMismatch", "relation spaces live in degree >= 2");
    Subspace<K> acc = Subspace<K>::from_rows(relation_rows_at(A, n, 0));
    for (int i = 1; i <= n - 2; ++i)
        acc = Subspace<K>::intersect(
            acc, Subspace<K>::from_rows(relation_rows_at(A, n, i)));
    return acc;
}

template <ScalarField K>
std::uint64_t graded_dimension(const QuadraticAlgebra<K>& A, int n) {
    require(n >= 0, "DimensionMismatch", "degree must be nonnegative");
    if (n == 0) return 1;
    if (n == 1) return A.generator_dim;
    return ipow(A.generator_dim, n) - relation_sum(A, n).dim();
}

template <ScalarField K>
std::uint64_t dual_graded_dimension(const QuadraticAlgebra<K>& A, int n) {
    require(n >= 0, "DimensionMismatch", "degree must be nonnegative");
    if (n == 0) return 1;
    if (n == 1) return A.generator_dim;
    return relation_intersection(A, n).dim();
}

template <ScalarField K>
std::vector<std::uint64_t> hilbert_series(const QuadraticAlgebra<K>& A, int max_degree) {
    std::vector<std::uint64_t> out;
    for (int n = 0; n <= max_degree; ++n) out.push_back(graded_dimension(A, n));
    return out;
}

template <ScalarField K>
std::vector<std::uint64_t> dual_hilbert_series(const QuadraticAlgebra<K>& A,
                                               int max_degree) {
    std::vector<std::uint64_t> out;
    for (int n = 0; n <= max_degree; ++n) out.push_back(dual_graded_dimension(A, n));
    return out;
}

// Numerical Koszulity: the coefficient of t^n in P_A(t) P_{A^!}(-t) must
// vanish for every 1 <= n <= N.
inline CheckResult koszul_numeric_check(const std::vector<std::uint64_t>& a,
                                        const std::vector<std::uint64_t>& b,
                                        int max_degree) {
    require(a.size() > static_cast<std::size_t>(max_degree) &&
                b.size() > static_cast<std::size_t>(max_degree),
            "DimensionMismatch", "series too short for the requested degree");
    for (int n = 1; n <= max_degree; ++n) {
        long long acc = 0;
        for (int j = 0; j <= n; ++j) {
            long long term = static_cast<long long>(a[static_cast<std::size_t>(n - j)]) *
                             static_cast<long long>(b[static_cast<std::size_t>(j)]);
            acc += (j % 2 == 0) ? term : -term;
        }
        if (acc != 0)
            return CheckResult::failure("KoszulDefect(n=" + std::to_string(n) +
                                        "): coefficient " + std::to_string(acc));
    }
    return CheckResult::pass();
}

// Rank-sum dimension identities: graded dimensions of E, F, M against
// sums of multiplicity products over partitions.
template <ScalarField K>
CheckResult plethysm_rank_identity(const HeckeOp<K>& S, const HeckeOp<K>& R,
                                   const std::string& family, int max_degree) {
    QuadraticAlgebra<K> A;
    if (family == "E") A = end_algebra(R);
    else if (family == "F") A = fend_algebra(R);
    else if (family == "M") A = hom_algebra(S, R);
    else fail("DimensionMismatch", "unknown family " + family);

    auto mult_R = multiplicity_table(R, max_degree);
    std::vector<std::vector<std::pair<Partition, long>>> mult_S;
    if (family == "M") mult_S = multiplicity_table(S, max_degree);

    auto lookup = [](const std::vector<std::pair<Partition, long>>& row,
                     const Partition& shape) -> long {
        for (const auto& [mu, l] : row)
            if (mu == shape) return l;
        return 0;
    };

    for (int n = 1; n <= max_degree; ++n) {
        std::uint64_t lhs = graded_dimension(A, n);
        std::uint64_t rhs = 0;
        const auto& row = mult_R[static_cast<std::size_t>(n - 1)];
        for (const auto& [lam, lr] : row) {
            long other = 0;
            if (family == "E") other = lr;
            else if (family == "F") other = lookup(row, lam.conjugate());
            else other = lookup(mult_S[static_cast<std::size_t>(n - 1)], lam);
            rhs += static_cast<std::uint64_t>(lr) * static_cast<std::uint64_t>(other);
        }
        if (lhs != rhs)
            return CheckResult::failure("IdentityViolation(n=" + std::to_string(n) +
                                        ", lhs=" + std::to_string(lhs) +
                                        ", rhs=" + std::to_string(rhs) + ")");
    }
    return CheckResult::pass();
}

}  // namespace qmat
