#pragma once

#include <string>
#include <vector>

#include <qmat/matrix_bialgebra.hpp>
#include <qmat/partitions.hpp>
#include <qmat/permutation.hpp>

namespace qmat {

namespace detail {

// Psi-bar^{p+s+r}(u (x) g (x) v) with the three factors repositioned from
// (W*^p V^p)(W*^s V^s)(W*^r V^r) to W*^{p+s+r} V^{p+s+r}.
template <ScalarField K>
Vec<K> sandwich_product(const RealizedAlgebra<K>& A, const Vec<K>& u, int p,
                        const Vec<K>& g, int s, const Vec<K>& v, int r) {
    const std::size_t dA = static_cast<std::size_t>(A.dual_op.d);
    const std::size_t dB = static_cast<std::size_t>(A.vec_op.d);
    Vec<K> t = vec_kron(vec_kron(u, g), v);
    t = permute_legs(t,
                     {ipow(dA, p), ipow(dB, p), ipow(dA, s), ipow(dB, s),
                      ipow(dA, r), ipow(dB, r)},
                     {0, 2, 4, 1, 3, 5});
    return A.bundle(p + s + r).normalized.apply(t);
}

// Span of realized products a.b over bases of two component subspaces.
template <ScalarField K>
Subspace<K> span_of_products(const RealizedAlgebra<K>& A, const Subspace<K>& a,
                             int m, const Subspace<K>& b, int n) {
    std::vector<Vec<K>> rows;
    rows.reserve(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            rows.push_back(
                realized_product(A, a.basis_vector(i), m, b.basis_vector(j), n));
    return Subspace<K>::from_span(rows, ipow(A.generator_dim(), m + n));
}

template <ScalarField K>
Subspace<K> block_space(const RealizedAlgebra<K>& A, const Partition& shape) {
    for (const BlockComponent<K>& blk : block_split(A, shape.weight()))
        if (blk.shape == shape) return blk.space;
    fail("InternalCheckFailure", "no block for shape " + shape.to_string());
}

}  // namespace detail

// Degree-n component of the two-sided ideal generated by the block M_sigma:
// the span of Psi-bar^n(u (x) g (x) v) over component bases u, v and the
// generator block basis g.
template <ScalarField K>
Subspace<K> ideal_component(const RealizedAlgebra<K>& A, const Partition& sigma,
                            int n) {
    const int s = sigma.weight();
    require(s >= 1, "EmptyGenerator", "generator partition is empty");
    require(n <= A.max_degree, "DimensionMismatch",
            "degree exceeds the realized bound");
    const std::size_t ambient = ipow(A.generator_dim(), n);
    if (s > n) return Subspace<K>::zero(ambient);

    Subspace<K> gen = detail::block_space(A, sigma);
    require(gen.dim() > 0, "EmptyGenerator",
            "block M_" + sigma.to_string() + " vanishes");

    std::vector<Vec<K>> rows;
    for (int p = 0; p + s <= n; ++p) {
        const int r = n - s - p;
        const Subspace<K>& left = A.component(p);
        const Subspace<K>& right = A.component(r);
        for (std::size_t i = 0; i < left.dim(); ++i)
            for (std::size_t jg = 0; jg < gen.dim(); ++jg)
                for (std::size_t j = 0; j < right.dim(); ++j)
                    rows.push_back(detail::sandwich_product(
                        A, left.basis_vector(i), p, gen.basis_vector(jg), s,
                        right.basis_vector(j), r));
    }
    return Subspace<K>::from_span(rows, ambient);
}

// Predicted degree-n component: the sum of the blocks M_tau over tau
// containing sigma.
template <ScalarField K>
Subspace<K> ideal_component_predicted(const RealizedAlgebra<K>& A,
                                      const Partition& sigma, int n) {
    Subspace<K> acc = Subspace<K>::zero(ipow(A.generator_dim(), n));
    if (sigma.weight() > n) return acc;
    for (const BlockComponent<K>& blk : block_split(A, n))
        if (blk.shape.contains(sigma)) acc = acc + blk.space;
    return acc;
}

template <ScalarField K>
CheckResult ideal_component_check(const RealizedAlgebra<K>& A,
                                  const Partition& sigma, int n) {
    Subspace<K> computed = ideal_component(A, sigma, n);
    Subspace<K> predicted = ideal_component_predicted(A, sigma, n);
    if (computed != predicted)
        return CheckResult::failure(
            "IdentityViolation(n=" + std::to_string(n) + ", computed=" +
            std::to_string(computed.dim()) + ", predicted=" +
            std::to_string(predicted.dim()) + ") for sigma=" + sigma.to_string());
    return CheckResult::pass();
}

// Products of two block components against the Littlewood-Richardson
// prediction, under the multiplicity-free hypothesis.
template <ScalarField K>
CheckResult key_lemma_check(const RealizedAlgebra<K>& A, const Partition& lam,
                            const Partition& mu) {
    const int m = lam.weight();
    const int n = mu.weight();
    require(m >= 1 && n >= 1 && m + n <= A.max_degree, "DimensionMismatch",
            "key lemma degrees out of range");
    for (const Partition& gam : partitions_of(m + n)) {
        std::uint64_t c = lr_coefficient(lam, mu, gam);
        if (c > 1)
            fail("MultiplicityTooHigh", "c^{" + gam.to_string() + "}_{" +
                                            lam.to_string() + "," + mu.to_string() +
                                            "} = " + std::to_string(c));
    }
    Subspace<K> a = detail::block_space(A, lam);
    Subspace<K> b = detail::block_space(A, mu);
    require(a.dim() > 0, "EmptyGenerator", "block M_" + lam.to_string() + " vanishes");
    require(b.dim() > 0, "EmptyGenerator", "block M_" + mu.to_string() + " vanishes");

    Subspace<K> computed = detail::span_of_products(A, a, m, b, n);
    Subspace<K> predicted = Subspace<K>::zero(ipow(A.generator_dim(), m + n));
    for (const BlockComponent<K>& blk : block_split(A, m + n))
        if (lr_coefficient(lam, mu, blk.shape) > 0) predicted = predicted + blk.space;

    if (computed != predicted)
        return CheckResult::failure(
            "IdentityViolation(n=" + std::to_string(m + n) + ", computed=" +
            std::to_string(computed.dim()) + ", predicted=" +
            std::to_string(predicted.dim()) + ") for " + lam.to_string() + " * " +
            mu.to_string());
    return CheckResult::pass();
}

// Degree-n component of the product I_{sigma_1} I_{sigma_2} ... I_{sigma_r}
// of column ideals, compared with the beta-order prediction
// sum over tau of weight n with tau >= sigma' in beta order.
template <ScalarField K>
CheckResult ideal_product_check(const RealizedAlgebra<K>& A, const Partition& sigma,
                                int n) {
    require(sigma.weight() >= 1, "EmptyGenerator", "sigma must be nonempty");
    require(sigma.weight() <= n && n <= A.max_degree, "DimensionMismatch",
            "ideal product degrees out of range");
    const std::size_t g = A.generator_dim();

    // graded pieces (degrees 0..n) of the ideal generated by one column block
    auto column_ideal = [&](int height) {
        std::vector<Subspace<K>> piece;
        Partition col = rectangle_partition(height, 1);
        for (int k = 0; k <= n; ++k)
            piece.push_back(k < height ? Subspace<K>::zero(ipow(g, k))
                                       : ideal_component(A, col, k));
        return piece;
    };

    std::vector<Subspace<K>> acc = column_ideal(sigma.part(0));
    for (int i = 1; i < sigma.length(); ++i) {
        std::vector<Subspace<K>> factor = column_ideal(sigma.part(i));
        std::vector<Subspace<K>> next;
        for (int k = 0; k <= n; ++k) {
            Subspace<K> piece = Subspace<K>::zero(ipow(g, k));
            for (int p = 0; p <= k; ++p) {
                if (acc[static_cast<std::size_t>(p)].dim() == 0 ||
                    factor[static_cast<std::size_t>(k - p)].dim() == 0)
                    continue;
                piece = piece + detail::span_of_products(
                                    A, acc[static_cast<std::size_t>(p)], p,
                                    factor[static_cast<std::size_t>(k - p)], k - p);
            }
            next.push_back(std::move(piece));
        }
        acc = std::move(next);
    }

    Subspace<K> predicted = Subspace<K>::zero(ipow(g, n));
    Partition conj = sigma.conjugate();
    for (const BlockComponent<K>& blk : block_split(A, n))
        if (beta_geq(blk.shape, conj)) predicted = predicted + blk.space;

    const Subspace<K>& computed = acc[static_cast<std::size_t>(n)];
    if (computed != predicted)
        return CheckResult::failure(
            "IdentityViolation(n=" + std::to_string(n) + ", computed=" +
            std::to_string(computed.dim()) + ", predicted=" +
            std::to_string(predicted.dim()) + ") for sigma=" + sigma.to_string());
    return CheckResult::pass();
}

// Quantum minor on the given column (dual-side) and row (vector-side) index
// lists, as the monomial lift in the degree-k coefficient space:
// sum over permutations of (-1/p)^{l} e^{cols_1}_{rows_sigma(1)} ... .
// The algebra element it names is the projection of this lift into the
// realized degree-k component.
template <ScalarField K>
Vec<K> quantum_minor(int dS, int dR, const K& p, const std::vector<int>& rows,
                     const std::vector<int>& cols) {
    const int k = static_cast<int>(rows.size());
    require(k >= 1 && cols.size() == rows.size(), "BadIndexLists",
            "row and column lists must be nonempty and of equal length");
    auto valid = [](const std::vector<int>& v, int bound) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] < 0 || v[i] >= bound) return false;
            if (i > 0 && v[i] <= v[i - 1]) return false;
        }
        return true;
    };
    require(valid(rows, dR), "BadIndexLists", "row indices not increasing in range");
    require(valid(cols, dS), "BadIndexLists", "column indices not increasing in range");

    const std::size_t aW = ipow(static_cast<std::size_t>(dS), k);
    const std::size_t aV = ipow(static_cast<std::size_t>(dR), k);
    std::size_t xi = 0;
    for (int c : cols) xi = xi * static_cast<std::size_t>(dS) + static_cast<std::size_t>(c);

    Vec<K> out(aW * aV, K::zero());
    const PermTable& tab = PermTable::get(k);
    K minus_p = K::zero() - p.inverse();
    for (PermIndex w = 0; w < tab.size; ++w) {
        std::size_t x = 0;
        for (int t = 0; t < k; ++t)
            x = x * static_cast<std::size_t>(dR) +
                static_cast<std::size_t>(rows[tab.one_line[static_cast<std::size_t>(w)][static_cast<std::size_t>(t)]]);
        K coeff = K::one();
        for (int l = 0; l < tab.length[static_cast<std::size_t>(w)]; ++l) coeff = coeff * minus_p;
        out[xi * aV + x] = out[xi * aV + x] + coeff;
    }
    return out;
}

// The span of all k x k quantum minors against the column block M_{(1^k)}.
template <ScalarField K>
CheckResult minor_span_check(const RealizedAlgebra<K>& A, const K& p, int k) {
    require(k >= 1 && k <= A.max_degree, "DimensionMismatch", "minor size out of range");
    const int dS = A.dual_op.d;
    const int dR = A.vec_op.d;
    std::vector<std::vector<int>> row_lists, col_lists;
    auto gather = [](int d, int k2) {
        std::vector<std::vector<int>> lists;
        std::vector<int> cur;
        auto rec = [&](auto&& self, int start) -> void {
            if (static_cast<int>(cur.size()) == k2) {
                lists.push_back(cur);
                return;
            }
            for (int v = start; v < d; ++v) {
                cur.push_back(v);
                self(self, v + 1);
                cur.pop_back();
            }
        };
        rec(rec, 0);
        return lists;
    };
    row_lists = gather(dR, k);
    col_lists = gather(dS, k);
    if (row_lists.empty() || col_lists.empty())
        fail("EmptyGenerator", "no index lists of size " + std::to_string(k));

    std::vector<Vec<K>> rows;
    for (const auto& rl : row_lists)
        for (const auto& cl : col_lists)
            rows.push_back(
                A.bundle(k).normalized.apply(quantum_minor(dS, dR, p, rl, cl)));
    Subspace<K> span = Subspace<K>::from_span(rows, ipow(A.generator_dim(), k));

    Subspace<K> block = detail::block_space(A, rectangle_partition(k, 1));
    if (span != block)
        return CheckResult::failure(
            "IdentityViolation(n=" + std::to_string(k) + ", computed=" +
            std::to_string(span.dim()) + ", predicted=" + std::to_string(block.dim()) +
            ") minors vs column block");
    if (span.dim() != row_lists.size() * col_lists.size())
        return CheckResult::failure("IdentityViolation: minors are linearly dependent");
    return CheckResult::pass();
}

}  // namespace qmat
