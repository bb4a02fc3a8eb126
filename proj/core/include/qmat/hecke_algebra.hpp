#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <qmat/error.hpp>
#include <qmat/matrix.hpp>
#include <qmat/partitions.hpp>
#include <qmat/permutation.hpp>
#include <qmat/scalar.hpp>

namespace qmat {

// The Hecke algebra H_{n,q} in its T-basis.  Elements are coefficient
// vectors indexed by PermTable order, so e[w] is the coefficient of T_w.
// Products are computed by peeling reduced words against the quadratic
// relation T_g T_w = T_{v_g w} when l grows and (q-1) T_w + q T_{v_g w}
// when it shrinks.
//
// The parameter q must be nonzero; operations that divide by quantum
// integers check [2]_q .. [n]_q themselves and report DegenerateParameter.

namespace detail {

template <ScalarField K>
struct EchelonBasis {
    Matrix<K> rows;
    std::vector<std::size_t> pivots;
};

template <ScalarField K>
EchelonBasis<K> echelonize(Matrix<K> rows) {
    std::vector<std::size_t> pivots = rows.rref();
    rows = Matrix<K>::drop_zero_rows(rows);
    return {std::move(rows), std::move(pivots)};
}

template <ScalarField K>
EchelonBasis<K> full_echelon(std::size_t n) {
    EchelonBasis<K> b{Matrix<K>::identity(n), {}};
    b.pivots.resize(n);
    for (std::size_t i = 0; i < n; ++i) b.pivots[i] = i;
    return b;
}

// Rows of b tensored with the standard basis of K^d, which is again a
// reduced echelon basis (pivot of row (i,a) is d*pivot_i + a).
template <ScalarField K>
EchelonBasis<K> kron_lift(const EchelonBasis<K>& b, std::size_t d) {
    const std::size_t m = b.rows.rows();
    const std::size_t n = b.rows.cols();
    EchelonBasis<K> out{Matrix<K>(m * d, n * d), {}};
    out.pivots.reserve(m * d);
    for (std::size_t i = 0; i < m; ++i) {
        const K* src = b.rows.row_ptr(i);
        for (std::size_t a = 0; a < d; ++a) {
            K* dst = out.rows.row_ptr(i * d + a);
            for (std::size_t c = 0; c < n; ++c) dst[c * d + a] = src[c];
            out.pivots.push_back(b.pivots[i] * d + a);
        }
    }
    return out;
}

// Split an invariant subspace into eigenspaces of one operator.  The
// operator must preserve the row span; coordinates are read off at the
// pivot columns and the residual is required to vanish, so a violation
// cannot pass silently.  The eigenvalue list must be duplicate-free and
// exhaust the spectrum on the subspace.
template <ScalarField K, typename Apply>
std::vector<EchelonBasis<K>> split_eigenspaces(const EchelonBasis<K>& basis,
                                               Apply&& apply,
                                               const std::vector<K>& eigenvalues) {
    const std::size_t m = basis.rows.rows();
    Matrix<K> small(m, m);
    for (std::size_t r = 0; r < m; ++r) {
        Vec<K> w = apply(basis.rows.row(r));
        require(w.size() == basis.rows.cols(), "DimensionMismatch",
                "operator changed the ambient dimension");
        Vec<K> x(m, K::zero());
        for (std::size_t i = 0; i < m; ++i) x[i] = w[basis.pivots[i]];
        for (std::size_t i = 0; i < m; ++i) {
            if (x[i].is_zero()) continue;
            const K* bi = basis.rows.row_ptr(i);
            for (std::size_t c = 0; c < w.size(); ++c)
                w[c] = w[c] - x[i] * bi[c];
        }
        require(vec_is_zero(w), "BlockSeparationFailure",
                "operator does not preserve the candidate subspace");
        for (std::size_t i = 0; i < m; ++i) small.at(i, r) = std::move(x[i]);
    }
    std::vector<EchelonBasis<K>> out;
    out.reserve(eigenvalues.size());
    std::size_t total = 0;
    for (const K& e : eigenvalues) {
        Matrix<K> shifted = small;
        for (std::size_t i = 0; i < m; ++i)
            shifted.at(i, i) = shifted.at(i, i) - e;
        Matrix<K> coords = shifted.kernel();
        out.push_back(echelonize(coords * basis.rows));
        total += out.back().rows.rows();
    }
    require(total == m, "BlockSeparationFailure",
            "listed eigenvalues do not exhaust the subspace");
    return out;
}

}  // namespace detail

// One irreducible block of H_{n,q}: the central idempotent F_lambda in
// T-basis coordinates, the constant k_lambda, the eigenvalue d/k of the
// Casimir element z on the block, and the character of the T-basis.
template <ScalarField K>
struct HeckeBlock {
    Partition shape = Partition{};
    long dim = 0;
    Vec<K> idempotent;
    K k_value = K::zero();
    K z_eigenvalue = K::zero();
    Vec<K> character;
};

template <ScalarField K>
std::shared_ptr<const std::vector<HeckeBlock<K>>> hecke_blocks(int n, const K& q);

template <ScalarField K>
class HeckeAlgebra {
public:
    HeckeAlgebra(int n, K q) : n_(n), q_(std::move(q)), tab_(&PermTable::get(n)) {
        require(!q_.is_zero(), "DegenerateParameter",
                "Hecke parameter q must be nonzero");
    }

    int n() const { return n_; }
    const K& q() const { return q_; }
    const PermTable& perms() const { return *tab_; }
    std::size_t dim() const { return tab_->size; }

    Vec<K> zero() const { return Vec<K>(dim(), K::zero()); }

    Vec<K> one() const { return basis(tab_->identity()); }

    Vec<K> basis(PermIndex w) const {
        Vec<K> e = zero();
        e[w] = K::one();
        return e;
    }

    // T_g * x for a single generator index 0 <= g < n-1.
    Vec<K> gen_mul(int g, const Vec<K>& x) const {
        Vec<K> out = zero();
        const K qm1 = q_ - K::one();
        for (PermIndex w = 0; w < dim(); ++w) {
            const K& c = x[w];
            if (c.is_zero()) continue;
            PermIndex w2 = tab_->gen_left[static_cast<std::size_t>(g)][w];
            if (tab_->length[w2] > tab_->length[w]) {
                out[w2] = out[w2] + c;
            } else {
                out[w] = out[w] + qm1 * c;
                out[w2] = out[w2] + q_ * c;
            }
        }
        return out;
    }

    // T_w * x by peeling the reduced word of w.
    Vec<K> t_mul(PermIndex w, Vec<K> x) const {
        const std::vector<int>& word = tab_->word[w];
        for (std::size_t i = word.size(); i-- > 0;) x = gen_mul(word[i], std::move(x));
        return x;
    }

    Vec<K> mul(const Vec<K>& a, const Vec<K>& b) const {
        Vec<K> out = zero();
        for (PermIndex u = 0; u < dim(); ++u) {
            if (a[u].is_zero()) continue;
            Vec<K> t = t_mul(u, b);
            for (PermIndex v = 0; v < dim(); ++v)
                if (!t[v].is_zero()) out[v] = out[v] + a[u] * t[v];
        }
        return out;
    }

    Matrix<K> left_mult_matrix(const Vec<K>& a) const {
        Matrix<K> m(dim(), dim());
        for (PermIndex w = 0; w < dim(); ++w) {
            Vec<K> col = mul(a, basis(w));
            for (PermIndex v = 0; v < dim(); ++v) m.at(v, w) = std::move(col[v]);
        }
        return m;
    }

    // (T_u, T_w) = q^{l(u)} [w = u^{-1}], extended bilinearly.
    K bilinear(const Vec<K>& a, const Vec<K>& b) const {
        K acc = K::zero();
        for (PermIndex u = 0; u < dim(); ++u) {
            if (a[u].is_zero()) continue;
            const K& c = b[tab_->inverse[u]];
            if (c.is_zero()) continue;
            acc = acc + a[u] * c * scalar_pow(q_, tab_->length[u]);
        }
        return acc;
    }

    // X_n = [n]_q!^{-1} sum_w T_w, the q-symmetrizer.
    Vec<K> symmetrizer() const {
        require_parameter(q_, n_);
        K norm = quantum_factorial(q_, n_).inverse();
        Vec<K> e(dim(), norm);
        return e;
    }

    // Y_n = [n]_{1/q}!^{-1} sum_w (-q)^{-l(w)} T_w, the q-antisymmetrizer.
    Vec<K> antisymmetrizer() const {
        require_parameter(q_, n_);
        K norm = quantum_factorial(q_.inverse(), n_).inverse();
        Vec<K> e = zero();
        for (PermIndex w = 0; w < dim(); ++w) {
            int l = tab_->length[w];
            K s = scalar_pow(q_, -l) * norm;
            e[w] = (l % 2 == 0) ? s : -s;
        }
        return e;
    }

    // Murphy element L_k = sum_{i<k} q^{i-k} T_{(i,k)}, with L_1 = 0.
    Vec<K> murphy(int k) const {
        require(k >= 1 && k <= n_, "DimensionMismatch", "Murphy index out of range");
        Vec<K> e = zero();
        for (int i = 1; i < k; ++i) {
            PermIndex t = tab_->transposition(i - 1, k - 1);
            e[t] = e[t] + scalar_pow(q_, i - k);
        }
        return e;
    }

    // z = sum_w q^{-l(w)} T_w T_{w^{-1}}, the contraction of the Casimir.
    Vec<K> casimir_element() const {
        Vec<K> acc = zero();
        for (PermIndex w = 0; w < dim(); ++w) {
            Vec<K> t = t_mul(w, basis(tab_->inverse[w]));
            K s = scalar_pow(q_, -tab_->length[w]);
            for (PermIndex v = 0; v < dim(); ++v)
                if (!t[v].is_zero()) acc[v] = acc[v] + s * t[v];
        }
        return acc;
    }

    // The Casimir element of H (x) H as a list of pure tensors
    // (q^{-l(w)} T_w, T_{w^{-1}}).
    std::vector<std::pair<Vec<K>, Vec<K>>> casimir_pairs() const {
        std::vector<std::pair<Vec<K>, Vec<K>>> out;
        out.reserve(dim());
        for (PermIndex w = 0; w < dim(); ++w) {
            Vec<K> a = zero();
            a[w] = scalar_pow(q_, -tab_->length[w]);
            out.emplace_back(std::move(a), basis(tab_->inverse[w]));
        }
        return out;
    }

    const std::vector<HeckeBlock<K>>& blocks() const {
        if (!blocks_) blocks_ = hecke_blocks<K>(n_, q_);
        return *blocks_;
    }

    const HeckeBlock<K>& block(const Partition& shape) const {
        for (const HeckeBlock<K>& b : blocks())
            if (b.shape == shape) return b;
        fail("InternalCheckFailure", "no block for shape " + shape.to_string());
    }

private:
    int n_;
    K q_;
    const PermTable* tab_;
    mutable std::shared_ptr<const std::vector<HeckeBlock<K>>> blocks_;
};

// The image of T_u (x) T_v under H_l (x) H_m -> H_{l+m} placing the
// second factor on strands l+1 .. l+m.
template <ScalarField K>
Vec<K> hecke_embed(int l, int m, const Vec<K>& a, const Vec<K>& b) {
    if (l == 0) return b;
    if (m == 0) return a;
    const PermTable& tl = PermTable::get(l);
    const PermTable& tm = PermTable::get(m);
    const PermTable& tn = PermTable::get(l + m);
    require(a.size() == tl.size && b.size() == tm.size, "DimensionMismatch",
            "hecke_embed arguments do not match the stated degrees");
    Vec<K> out(tn.size, K::zero());
    std::vector<std::uint8_t> ol(static_cast<std::size_t>(l + m));
    for (PermIndex u = 0; u < tl.size; ++u) {
        if (a[u].is_zero()) continue;
        for (PermIndex v = 0; v < tm.size; ++v) {
            if (b[v].is_zero()) continue;
            for (int i = 0; i < l; ++i) ol[static_cast<std::size_t>(i)] = tl.one_line[u][static_cast<std::size_t>(i)];
            for (int j = 0; j < m; ++j)
                ol[static_cast<std::size_t>(l + j)] =
                    static_cast<std::uint8_t>(l + tm.one_line[v][static_cast<std::size_t>(j)]);
            PermIndex w = tn.index_of(ol);
            out[w] = out[w] + a[u] * b[v];
        }
    }
    return out;
}

namespace detail {

// Full block decomposition of H_{n,q}.  The regular representation is
// refined into joint eigenspaces of the Murphy elements L_2 .. L_n; the
// eigenspace of the content sequence of a standard tableau t of shape
// lambda has dimension d_lambda, and stacking these bases gives the
// transition matrix to a basis adapted to the Wedderburn decomposition.
// F_lambda is recovered as the lambda-component of the identity, the
// character from matrix traces in the adapted basis, and k_lambda from
// the eigenvalue of the Casimir contraction z.  As a final consistency
// check the closed form F_lambda = k_lambda sum_w q^{-l(w)}
// chi_lambda(T_w) T_{w^{-1}} is verified coefficient by coefficient.
template <ScalarField K>
std::vector<HeckeBlock<K>> build_hecke_blocks(int n, const K& q) {
    HeckeAlgebra<K> H(n, q);
    require_parameter(q, n);
    const PermTable& tab = H.perms();
    const std::size_t N = H.dim();

    std::vector<Partition> lambdas = partitions_of(n);
    struct TabInfo {
        std::size_t lambda_index;
        std::vector<int> contents;
    };
    std::vector<TabInfo> tabs;
    std::vector<long> dims(lambdas.size(), 0);
    for (std::size_t li = 0; li < lambdas.size(); ++li) {
        auto st = standard_tableaux(lambdas[li]);
        dims[li] = static_cast<long>(st.size());
        for (const StandardTableau& t : st)
            tabs.push_back({li, t.contents()});
    }

    struct Group {
        std::vector<std::size_t> members;
        EchelonBasis<K> basis;
    };
    std::vector<Group> groups;
    {
        Group all;
        all.basis = full_echelon<K>(N);
        for (std::size_t i = 0; i < tabs.size(); ++i) all.members.push_back(i);
        groups.push_back(std::move(all));
    }

    for (int k = 2; k <= n; ++k) {
        Vec<K> Lk = H.murphy(k);
        auto apply = [&](const Vec<K>& v) { return H.mul(Lk, v); };
        std::vector<Group> next;
        for (Group& g : groups) {
            std::vector<K> values;
            std::vector<std::vector<std::size_t>> buckets;
            for (std::size_t idx : g.members) {
                K e = quantum_integer(q, tabs[idx].contents[static_cast<std::size_t>(k - 1)]);
                std::size_t pos = values.size();
                for (std::size_t j = 0; j < values.size(); ++j)
                    if (values[j] == e) { pos = j; break; }
                if (pos == values.size()) {
                    values.push_back(std::move(e));
                    buckets.emplace_back();
                }
                buckets[pos].push_back(idx);
            }
            auto children = split_eigenspaces(g.basis, apply, values);
            for (std::size_t j = 0; j < children.size(); ++j) {
                if (children[j].rows.rows() == 0 && buckets[j].empty()) continue;
                next.push_back({std::move(buckets[j]), std::move(children[j])});
            }
        }
        groups = std::move(next);
    }

    std::vector<const Group*> leaf_of(tabs.size(), nullptr);
    for (const Group& g : groups) {
        require(g.members.size() == 1, "BlockSeparationFailure",
                "Murphy spectrum does not separate standard tableaux at this q");
        std::size_t idx = g.members[0];
        require(g.basis.rows.rows() ==
                    static_cast<std::size_t>(dims[tabs[idx].lambda_index]),
                "BlockSeparationFailure",
                "tableau eigenspace has unexpected dimension");
        leaf_of[idx] = &g;
    }

    Matrix<K> W(0, 0);
    std::vector<std::size_t> offset(lambdas.size(), 0);
    {
        std::vector<Matrix<K>> parts;
        std::size_t pos = 0;
        std::size_t ti = 0;
        for (std::size_t li = 0; li < lambdas.size(); ++li) {
            offset[li] = pos;
            for (long c = 0; c < dims[li]; ++c, ++ti) {
                parts.push_back(leaf_of[ti]->basis.rows);
                pos += parts.back().rows();
            }
        }
        require(pos == N, "BlockSeparationFailure",
                "eigenspace dimensions do not sum to n!");
        Matrix<K> acc = parts[0];
        for (std::size_t i = 1; i < parts.size(); ++i)
            acc = Matrix<K>::vstack(acc, parts[i]);
        W = std::move(acc);
    }

    Matrix<K> C = W.transpose();
    Matrix<K> Cinv = C.inverse();
    Vec<K> cid = Cinv.col(tab.identity());

    std::vector<HeckeBlock<K>> blocks;
    Vec<K> z = H.casimir_element();
    Vec<K> sum_f = H.zero();
    for (std::size_t li = 0; li < lambdas.size(); ++li) {
        HeckeBlock<K> blk;
        blk.shape = lambdas[li];
        blk.dim = dims[li];
        std::size_t o = offset[li];
        std::size_t width = static_cast<std::size_t>(dims[li] * dims[li]);

        Vec<K> F = H.zero();
        for (std::size_t i = 0; i < N; ++i) {
            K acc = K::zero();
            for (std::size_t j = 0; j < width; ++j)
                acc = acc + C.at(i, o + j) * cid[o + j];
            F[i] = std::move(acc);
        }

        Vec<K> chi(N, K::zero());
        for (std::size_t j = 0; j < width; ++j) {
            Vec<K> col = C.col(o + j);
            const K* crow = Cinv.row_ptr(o + j);
            for (PermIndex w = 0; w < N; ++w) {
                Vec<K> tw = H.t_mul(w, col);
                K acc = K::zero();
                for (std::size_t i = 0; i < N; ++i)
                    if (!tw[i].is_zero()) acc = acc + crow[i] * tw[i];
                chi[w] = chi[w] + acc;
            }
        }
        K dinv = scalar_from_long<K>(dims[li]).inverse();
        for (PermIndex w = 0; w < N; ++w) chi[w] = chi[w] * dinv;

        Vec<K> zF = H.mul(z, F);
        K zeta = K::zero();
        for (std::size_t i = 0; i < N; ++i) {
            if (!F[i].is_zero()) {
                zeta = zF[i] * F[i].inverse();
                break;
            }
        }
        require(!zeta.is_zero(), "InternalCheckFailure",
                "Casimir eigenvalue vanished on a block");
        for (std::size_t i = 0; i < N; ++i)
            require(zF[i] == zeta * F[i], "InternalCheckFailure",
                    "central idempotent is not a Casimir eigenvector");

        blk.z_eigenvalue = zeta;
        blk.k_value = scalar_from_long<K>(dims[li]) * zeta.inverse();

        Vec<K> expected = H.zero();
        for (PermIndex w = 0; w < N; ++w) {
            PermIndex wi = tab.inverse[w];
            expected[wi] = expected[wi] +
                           blk.k_value * scalar_pow(q, -tab.length[w]) * chi[w];
        }
        require(expected == F, "InternalCheckFailure",
                "character reconstruction of F_lambda failed");

        for (std::size_t i = 0; i < N; ++i) sum_f[i] = sum_f[i] + F[i];
        blk.idempotent = std::move(F);
        blk.character = std::move(chi);
        blocks.push_back(std::move(blk));
    }
    require(sum_f == H.one(), "InternalCheckFailure",
            "central idempotents do not sum to the identity");
    return blocks;
}

}  // namespace detail

template <ScalarField K>
std::shared_ptr<const std::vector<HeckeBlock<K>>> hecke_blocks(int n, const K& q) {
    static std::map<std::string, std::shared_ptr<const std::vector<HeckeBlock<K>>>> cache;
    std::string key = std::to_string(n) + "|" + q.to_string();
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto built = std::make_shared<const std::vector<HeckeBlock<K>>>(
        detail::build_hecke_blocks<K>(n, q));
    cache.emplace(std::move(key), built);
    return built;
}

}  // namespace qmat
