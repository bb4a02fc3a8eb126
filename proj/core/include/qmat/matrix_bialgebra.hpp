#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <qmat/error.hpp>
#include <qmat/projectors.hpp>
#include <qmat/quadratic_algebra.hpp>
#include <qmat/tensor_index.hpp>

namespace qmat {

// A matrix algebra of kind E, F, M or N realized degree by degree as the
// images of the normalized projectors.  N is M with the dual-side operator
// replaced by its prime, and E, F are the (R, R) specializations, so a
// single construction covers all four kinds; dual_op below is the
// effective dual-side operator after that replacement.
template <ScalarField K>
struct RealizedAlgebra {
    HeckeOp<K> dual_op;
    HeckeOp<K> vec_op;
    std::string kind;
    int max_degree = 0;
    std::vector<ProjectorBundle<K>> bundles;  // [n-1] holds degree n
    std::vector<Subspace<K>> components;      // [n] holds degree n, [0] the scalar line

    std::size_t generator_dim() const {
        return static_cast<std::size_t>(dual_op.d) * static_cast<std::size_t>(vec_op.d);
    }
    const ProjectorBundle<K>& bundle(int n) const {
        require(n >= 1 && n <= max_degree, "DimensionMismatch",
                "no projector bundle for degree " + std::to_string(n));
        return bundles[static_cast<std::size_t>(n - 1)];
    }
    const Subspace<K>& component(int n) const {
        require(n >= 0 && n <= max_degree, "DimensionMismatch",
                "no component for degree " + std::to_string(n));
        return components[static_cast<std::size_t>(n)];
    }
};

template <ScalarField K>
struct BlockComponent {
    Partition shape;
    int degree = 0;
    Subspace<K> space;
};

template <ScalarField K>
RealizedAlgebra<K> realize(const HeckeOp<K>& S, const HeckeOp<K>& R,
                           const std::string& kind, int max_degree) {
    require(S.q == R.q, "ParameterMismatch",
            "realized algebras need operators with equal q");
    require(max_degree >= 1, "DimensionMismatch", "max_degree must be positive");

    HeckeOp<K> eff;
    if (kind == "M") eff = S;
    else if (kind == "N") eff = prime_operator(S);
    else if (kind == "E") eff = R;
    else if (kind == "F") eff = prime_operator(R);
    else fail("DimensionMismatch", "unknown realized-algebra kind " + kind);

    RealizedAlgebra<K> A{eff, R, kind, max_degree, {}, {}};
    const std::size_t g = A.generator_dim();
    A.components.push_back(Subspace<K>::full(1));

    QuadraticAlgebra<K> rel = hom_algebra(eff, R);
    for (int n = 1; n <= max_degree; ++n) {
        ProjectorBundle<K> b = detail::build_projector_bundle(eff, R, n, "psi");
        Subspace<K> im = Subspace<K>::image(b.normalized);
        Subspace<K> ker = Subspace<K>::kernel(b.normalized);
        Subspace<K> rsum =
            (n >= 2) ? relation_sum(rel, n) : Subspace<K>::zero(g);
        if (ker != rsum)
            fail("IdentityViolation",
                 "kernel of the normalized projector differs from the relation sum "
                 "in degree " + std::to_string(n) + " (kind " + kind + ")");
        A.bundles.push_back(std::move(b));
        A.components.push_back(std::move(im));
    }
    return A;
}

// Transferred product: reshuffle a (x) b from (W*^m (x) V^m) (x) (W*^n (x) V^n)
// to W*^{m+n} (x) V^{m+n} positionally, then project with the degree-(m+n)
// normalized projector.
template <ScalarField K>
Vec<K> realized_product(const RealizedAlgebra<K>& A, const Vec<K>& a, int m,
                        const Vec<K>& b, int n) {
    require(a.size() == A.component(m).ambient() && b.size() == A.component(n).ambient(),
            "DimensionMismatch", "realized_product operand sizes");
    require(A.component(m).contains(a), "NotInComponent",
            "left factor outside the degree-" + std::to_string(m) + " component");
    require(A.component(n).contains(b), "NotInComponent",
            "right factor outside the degree-" + std::to_string(n) + " component");
    if (m == 0) {
        Vec<K> out = b;
        for (K& x : out) x = a[0] * x;
        return out;
    }
    if (n == 0) {
        Vec<K> out = a;
        for (K& x : out) x = b[0] * x;
        return out;
    }
    const std::size_t dW = ipow(static_cast<std::size_t>(A.dual_op.d), m);
    const std::size_t dV = ipow(static_cast<std::size_t>(A.vec_op.d), m);
    const std::size_t eW = ipow(static_cast<std::size_t>(A.dual_op.d), n);
    const std::size_t eV = ipow(static_cast<std::size_t>(A.vec_op.d), n);
    Vec<K> ab = vec_kron(a, b);
    ab = permute_legs(ab, {dW, dV, eW, eV}, {0, 2, 1, 3});
    return A.bundle(m + n).normalized.apply(ab);
}

// Degrees deduced from the operand sizes.
template <ScalarField K>
Vec<K> realized_product(const RealizedAlgebra<K>& A, const Vec<K>& a, const Vec<K>& b) {
    const std::size_t g = A.generator_dim();
    auto degree_of = [&](std::size_t size) {
        for (int k = 0; k <= A.max_degree; ++k)
            if (ipow(g, k) == size) return k;
        fail("DimensionMismatch", "operand size is not a component dimension");
    };
    return realized_product(A, a, degree_of(a.size()), b, degree_of(b.size()));
}

template <ScalarField K>
std::vector<BlockComponent<K>> block_split(const RealizedAlgebra<K>& A, int n) {
    const ProjectorBundle<K>& b = A.bundle(n);
    std::vector<BlockComponent<K>> out;
    std::size_t total = 0;
    for (const ProjectorBlock<K>& blk : b.blocks) {
        BlockComponent<K> c{blk.shape, n, Subspace<K>::image(blk.component)};
        require(static_cast<long>(c.space.dim()) == blk.rank, "InternalCheckFailure",
                "block rank drifted between construction and split");
        total += c.space.dim();
        out.push_back(std::move(c));
    }
    require(total == A.component(n).dim(), "InternalCheckFailure",
            "block dimensions do not add up to the component dimension");
    return out;
}

namespace detail {

// Membership of Delta(rel) in rel (x) T2 + T2 (x) rel, where T2 is the full
// degree-2 coefficient space.
template <ScalarField K>
CheckResult biideal_check(const Subspace<K>& rel, int d) {
    const std::size_t dd = static_cast<std::size_t>(d) * static_cast<std::size_t>(d);
    const std::size_t t2 = dd * dd;
    require(rel.ambient() == t2, "DimensionMismatch", "relation ambient");

    Matrix<K> hull(2 * rel.dim() * t2, t2 * t2);
    std::size_t r = 0;
    for (std::size_t i = 0; i < rel.dim(); ++i) {
        Vec<K> v = rel.basis_vector(i);
        for (std::size_t c = 0; c < t2; ++c, r += 2) {
            for (std::size_t x = 0; x < t2; ++x) {
                if (v[x].is_zero()) continue;
                hull.at(r, x * t2 + c) = v[x];
                hull.at(r + 1, c * t2 + x) = v[x];
            }
        }
    }
    Subspace<K> target = Subspace<K>::from_rows(std::move(hull));

    for (std::size_t i = 0; i < rel.dim(); ++i) {
        Vec<K> v = rel.basis_vector(i);
        Vec<K> img(t2 * t2, K::zero());
        for (std::size_t I = 0; I < dd; ++I)
            for (std::size_t J = 0; J < dd; ++J) {
                const K& c = v[I * dd + J];
                if (c.is_zero()) continue;
                for (std::size_t a = 0; a < dd; ++a)
                    img[(I * dd + a) * t2 + (a * dd + J)] = img[(I * dd + a) * t2 + (a * dd + J)] + c;
            }
        if (!target.contains(img))
            return CheckResult::failure(
                "BiidealViolation: coproduct image of relation " + std::to_string(i) +
                " escapes rel(x)T + T(x)rel");
    }
    return CheckResult::pass();
}

}  // namespace detail

// Bialgebra data on the matrix coefficients: Delta z^i_j = sum_a z^i_a (x) z^a_j.
// Verifies that the E-relations generate a biideal and that Delta is
// coassociative on the generators.
template <ScalarField K>
CheckResult coproduct_check(const HeckeOp<K>& op) {
    const std::size_t d = static_cast<std::size_t>(op.d);
    const std::size_t dd = d * d;
    CheckResult bi = detail::biideal_check(end_algebra(op).relations, op.d);
    if (!bi) return bi;

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec<K> lhs(dd * dd * dd, K::zero());
            Vec<K> rhs(dd * dd * dd, K::zero());
            for (std::size_t a = 0; a < d; ++a)
                for (std::size_t b = 0; b < d; ++b) {
                    lhs[((i * d + b) * dd + (b * d + a)) * dd + (a * d + j)] =
                        lhs[((i * d + b) * dd + (b * d + a)) * dd + (a * d + j)] + K::one();
                    rhs[((i * d + a) * dd + (a * d + b)) * dd + (b * d + j)] =
                        rhs[((i * d + a) * dd + (a * d + b)) * dd + (b * d + j)] + K::one();
                }
            if (lhs != rhs)
                return CheckResult::failure("BiidealViolation: coassociativity fails on z^" +
                                            std::to_string(i) + "_" + std::to_string(j));
        }
    return CheckResult::pass();
}

}  // namespace qmat
