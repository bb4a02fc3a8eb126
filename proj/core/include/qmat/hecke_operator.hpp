#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <qmat/error.hpp>
#include <qmat/hecke_algebra.hpp>
#include <qmat/matrix.hpp>
#include <qmat/partitions.hpp>
#include <qmat/permutation.hpp>
#include <qmat/scalar.hpp>
#include <qmat/tensor_index.hpp>

namespace qmat {

// A Hecke operator (Hecke symmetry candidate) on V = K^d: an invertible
// solution R of the braid equation satisfying (R - q)(R + 1) = 0 whose
// half-adjoint R^# is again invertible.  Entries follow the convention
// R(x_c (x) x_e) = sum_{a,b} R[(a,b),(c,e)] x_a (x) x_b with pair index
// a*d + b.
template <ScalarField K>
struct HeckeOp {
    int d = 0;
    K q = K::one();
    Matrix<K> R;
    std::string name;
    std::optional<K> p;  // square root of q when the family carries one
};

// Drinfeld-Jimbo style deformation of the supersymmetry on K^{r|s}
// (first r basis vectors even, last s odd), with Hecke parameter q = p^2.
template <ScalarField K>
HeckeOp<K> make_super(int r, int s, const K& p) {
    require(r >= 0 && s >= 0 && r + s >= 1, "DimensionMismatch",
            "super family needs a nonempty graded dimension");
    require(!p.is_zero(), "DegenerateParameter", "super family needs p != 0");
    const int d = r + s;
    const std::size_t dd = static_cast<std::size_t>(d);
    HeckeOp<K> op;
    op.d = d;
    op.q = p * p;
    op.p = p;
    op.name = "super" + std::to_string(r) + "|" + std::to_string(s);
    op.R = Matrix<K>(dd * dd, dd * dd);
    auto odd = [&](int i) { return i >= r; };
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            std::size_t in = static_cast<std::size_t>(i * d + j);
            if (i == j) {
                op.R.at(in, in) = odd(i) ? -K::one() : op.q;
                continue;
            }
            std::size_t swapped = static_cast<std::size_t>(j * d + i);
            K sp = (odd(i) && odd(j)) ? -p : p;
            if (i < j) {
                op.R.at(swapped, in) = sp;
            } else {
                op.R.at(in, in) = op.q - K::one();
                op.R.at(swapped, in) = sp;
            }
        }
    }
    return op;
}

template <ScalarField K>
HeckeOp<K> make_standard(int d, const K& p) {
    HeckeOp<K> op = make_super(d, 0, p);
    op.name = "std" + std::to_string(d);
    return op;
}

template <ScalarField K>
HeckeOp<K> make_flip(int d) {
    HeckeOp<K> op = make_standard(d, K::one());
    op.name = "flip" + std::to_string(d);
    return op;
}

template <ScalarField K>
HeckeOp<K> make_superflip(int r, int s) {
    HeckeOp<K> op = make_super(r, s, K::one());
    op.name = "superflip" + std::to_string(r) + "|" + std::to_string(s);
    return op;
}

template <ScalarField K>
HeckeOp<K> operator_from_matrix(int d, K q, Matrix<K> R, std::string name) {
    require(d >= 1, "DimensionMismatch", "operator dimension must be positive");
    std::size_t dd = static_cast<std::size_t>(d) * static_cast<std::size_t>(d);
    require(R.rows() == dd && R.cols() == dd, "DimensionMismatch",
            "operator matrix must be d^2 x d^2");
    HeckeOp<K> op;
    op.d = d;
    op.q = std::move(q);
    op.R = std::move(R);
    op.name = std::move(name);
    return op;
}

// The half-adjoint R^#, the partial dualization of R on V* (x) V:
// R^#[(b,k),(i,j)] = R[(i,b),(j,k)].  R is closed when this is invertible.
template <ScalarField K>
Matrix<K> sharp_matrix(const Matrix<K>& R, int d) {
    const std::size_t dd = static_cast<std::size_t>(d);
    Matrix<K> out(dd * dd, dd * dd);
    for (std::size_t b = 0; b < dd; ++b)
        for (std::size_t k = 0; k < dd; ++k)
            for (std::size_t i = 0; i < dd; ++i)
                for (std::size_t j = 0; j < dd; ++j)
                    out.at(b * dd + k, i * dd + j) = R.at(i * dd + b, j * dd + k);
    return out;
}

template <ScalarField K>
CheckResult check_yang_baxter(const HeckeOp<K>& op) {
    Matrix<K> id = Matrix<K>::identity(static_cast<std::size_t>(op.d));
    Matrix<K> r1 = Matrix<K>::kronecker(op.R, id);
    Matrix<K> r2 = Matrix<K>::kronecker(id, op.R);
    if (r1 * r2 * r1 == r2 * r1 * r2) return CheckResult::pass();
    return CheckResult::failure("Yang-Baxter identity fails on V^3");
}

template <ScalarField K>
CheckResult check_hecke_relation(const HeckeOp<K>& op) {
    std::size_t m = op.R.rows();
    Matrix<K> a = op.R;
    Matrix<K> b = op.R;
    for (std::size_t i = 0; i < m; ++i) {
        a.at(i, i) = a.at(i, i) - op.q;
        b.at(i, i) = b.at(i, i) + K::one();
    }
    if ((a * b).is_zero()) return CheckResult::pass();
    return CheckResult::failure("Hecke relation (R - q)(R + 1) = 0 fails");
}

template <ScalarField K>
CheckResult check_closure(const HeckeOp<K>& op) {
    if (sharp_matrix(op.R, op.d).is_invertible()) return CheckResult::pass();
    return CheckResult::failure("half-adjoint R^# is not invertible");
}

// Gatekeeping order: braid equation first, then the Hecke relation, then
// closure; a later check is only meaningful once the earlier ones hold.
template <ScalarField K>
CheckResult validate_operator(const HeckeOp<K>& op) {
    if (op.q.is_zero()) return CheckResult::failure("parameter q vanishes");
    if (CheckResult r = check_yang_baxter(op); !r) return r;
    if (CheckResult r = check_hecke_relation(op); !r) return r;
    if (CheckResult r = check_closure(op); !r) return r;
    return CheckResult::pass();
}

template <ScalarField K>
void require_closure(const HeckeOp<K>& op) {
    require(sharp_matrix(op.R, op.d).is_invertible(), "NotClosed",
            "operator " + op.name + " is not closed (R^# is singular)");
}

// S' = -q S^{-1}: the partner Hecke operator with the two eigenspaces of
// S exchanged.  It satisfies the same Hecke relation with the same q.
template <ScalarField K>
HeckeOp<K> prime_operator(const HeckeOp<K>& op) {
    HeckeOp<K> out;
    out.d = op.d;
    out.q = op.q;
    out.p = op.p;
    out.name = op.name + "'";
    out.R = (-op.q) * op.R.inverse();
    return out;
}

// The representation rho of H_{n,q} on V^{(x)n} sending T_g to
// id^{g} (x) R (x) id^{n-g-2}.  Basis vectors of V^{(x)n} are indexed
// big-endian, first factor slowest.
template <ScalarField K>
class TensorRep {
public:
    TensorRep(const HeckeOp<K>& op, int n)
        : d_(op.d), n_(n), q_(op.q),
          dim_(ipow(static_cast<std::size_t>(op.d), n)),
          tab_(&PermTable::get(n)) {
        require(n >= 1, "DimensionMismatch", "tensor power must be positive");
        const std::size_t dd = static_cast<std::size_t>(d_) * static_cast<std::size_t>(d_);
        cols_.resize(dd);
        for (std::size_t in = 0; in < dd; ++in)
            for (std::size_t out = 0; out < dd; ++out)
                if (!op.R.at(out, in).is_zero())
                    cols_[in].emplace_back(out, op.R.at(out, in));
    }

    int d() const { return d_; }
    int n() const { return n_; }
    const K& q() const { return q_; }
    std::size_t dim() const { return dim_; }
    const PermTable& perms() const { return *tab_; }

    // R_g applied in place of tensor slots g, g+1.
    Vec<K> apply_gen(int g, const Vec<K>& v) const {
        const std::size_t dd = static_cast<std::size_t>(d_);
        const std::size_t right = ipow(dd, n_ - g - 2);
        const std::size_t hi_count = ipow(dd, g);
        const std::size_t block = dd * dd * right;
        Vec<K> out(dim_, K::zero());
        for (std::size_t hi = 0; hi < hi_count; ++hi) {
            const std::size_t base = hi * block;
            for (std::size_t lo = 0; lo < right; ++lo) {
                for (std::size_t in = 0; in < dd * dd; ++in) {
                    const K& c = v[base + in * right + lo];
                    if (c.is_zero()) continue;
                    for (const auto& [row, val] : cols_[in]) {
                        K& slot = out[base + row * right + lo];
                        slot = slot + val * c;
                    }
                }
            }
        }
        return out;
    }

    Vec<K> apply_word(const std::vector<int>& word, Vec<K> v) const {
        for (std::size_t i = word.size(); i-- > 0;) v = apply_gen(word[i], v);
        return v;
    }

    // rho(T_w) v.
    Vec<K> apply_basis(PermIndex w, Vec<K> v) const {
        return apply_word(tab_->word[w], std::move(v));
    }

    // rho(h) v for a Hecke algebra element h in the T-basis.
    Vec<K> apply_elem(const Vec<K>& h, const Vec<K>& v) const {
        require(h.size() == tab_->size, "DimensionMismatch",
                "element does not live in H_n for this tensor power");
        Vec<K> out(dim_, K::zero());
        for (PermIndex w = 0; w < tab_->size; ++w) {
            if (h[w].is_zero()) continue;
            Vec<K> t = apply_basis(w, v);
            for (std::size_t i = 0; i < dim_; ++i)
                if (!t[i].is_zero()) out[i] = out[i] + h[w] * t[i];
        }
        return out;
    }

    Matrix<K> basis_matrix(PermIndex w) const {
        Matrix<K> m(dim_, dim_);
        for (std::size_t c = 0; c < dim_; ++c) {
            Vec<K> e(dim_, K::zero());
            e[c] = K::one();
            Vec<K> col = apply_basis(w, std::move(e));
            for (std::size_t r = 0; r < dim_; ++r) m.at(r, c) = std::move(col[r]);
        }
        return m;
    }

    Matrix<K> elem_matrix(const Vec<K>& h) const {
        Matrix<K> m(dim_, dim_);
        for (std::size_t c = 0; c < dim_; ++c) {
            Vec<K> e(dim_, K::zero());
            e[c] = K::one();
            Vec<K> col = apply_elem(h, e);
            for (std::size_t r = 0; r < dim_; ++r) m.at(r, c) = std::move(col[r]);
        }
        return m;
    }

    // rho(L_k) v for the Murphy element L_k, 1 <= k <= n.
    Vec<K> apply_murphy(int k, const Vec<K>& v) const {
        Vec<K> out(dim_, K::zero());
        for (int i = 1; i < k; ++i) {
            PermIndex t = tab_->transposition(i - 1, k - 1);
            Vec<K> term = apply_word(tab_->word[t], v);
            K s = scalar_pow(q_, i - k);
            for (std::size_t c = 0; c < dim_; ++c)
                if (!term[c].is_zero()) out[c] = out[c] + s * term[c];
        }
        return out;
    }

private:
    int d_;
    int n_;
    K q_;
    std::size_t dim_;
    const PermTable* tab_;
    std::vector<std::vector<std::pair<std::size_t, K>>> cols_;
};

// sigma(h) = transpose of rho'(h) on the lift of S' = -q S^{-1}; this is
// the structure map of W*^{(x)n} making the pairing with V^{(x)n}
// H-invariant.  Anti-multiplicative in h, as it must be.
template <ScalarField K>
Matrix<K> sigma_matrix(const HeckeOp<K>& op, int n, const Vec<K>& h) {
    TensorRep<K> rep(prime_operator(op), n);
    return rep.elem_matrix(h).transpose();
}

// tau(h) = transpose of rho(h), the analogous structure map built from
// the operator itself rather than its prime partner.
template <ScalarField K>
Matrix<K> tau_matrix(const HeckeOp<K>& op, int n, const Vec<K>& h) {
    TensorRep<K> rep(op, n);
    return rep.elem_matrix(h).transpose();
}

// Multiplicity of the irreducible labelled by shape inside V^{(x)|shape|}:
// rank rho(F_shape) divided by the block dimension.
template <ScalarField K>
long multiplicity(const HeckeOp<K>& op, const Partition& shape) {
    int n = shape.weight();
    require(n >= 1, "DimensionMismatch", "shape must be nonempty");
    auto blocks = hecke_blocks<K>(n, op.q);
    const HeckeBlock<K>* blk = nullptr;
    for (const HeckeBlock<K>& b : *blocks)
        if (b.shape == shape) blk = &b;
    require(blk != nullptr, "InternalCheckFailure", "missing Hecke block");
    TensorRep<K> rep(op, n);
    std::size_t r = rep.elem_matrix(blk->idempotent).rank();
    require(r % static_cast<std::size_t>(blk->dim) == 0, "NonIntegralMultiplicity",
            "rank of rho(F_lambda) is not divisible by d_lambda");
    return static_cast<long>(r / static_cast<std::size_t>(blk->dim));
}

// Multiplicities of all shapes of weights 1..max_weight at once, by
// refining V^{(x)k} into joint eigenspaces of the Murphy elements level
// by level: the eigenspace of a standard tableau t at level k-1 is
// lifted by one tensor factor and split under rho(L_k) into the
// eigenspaces of the tableaux extending t.  All tableaux of one shape
// must produce equal dimensions, and the dimensions must fill d^k.
template <ScalarField K>
std::vector<std::vector<std::pair<Partition, long>>> multiplicity_table(
    const HeckeOp<K>& op, int max_weight) {
    require(max_weight >= 1, "DimensionMismatch", "max weight must be positive");
    require_parameter(op.q, max_weight);
    const std::size_t d = static_cast<std::size_t>(op.d);

    struct Node {
        Partition shape;
        detail::EchelonBasis<K> basis;
    };
    std::vector<Node> nodes;
    nodes.push_back({Partition({1}), detail::full_echelon<K>(d)});

    std::vector<std::vector<std::pair<Partition, long>>> table;
    auto aggregate = [&](int k) {
        std::vector<std::pair<Partition, long>> row;
        std::size_t total = 0;
        for (const Partition& lam : partitions_of(k)) {
            long mult = -1;
            std::size_t count = 0;
            for (const Node& nd : nodes) {
                if (nd.shape != lam) continue;
                long m = static_cast<long>(nd.basis.rows.rows());
                require(mult == -1 || mult == m, "BlockSeparationFailure",
                        "tableaux of one shape produced different multiplicities");
                mult = m;
                ++count;
            }
            if (count == 0) {
                row.emplace_back(lam, 0);
                continue;
            }
            require(count == count_standard_tableaux(lam), "BlockSeparationFailure",
                    "multiplicity pattern is inconsistent across tableaux");
            row.emplace_back(lam, mult);
            total += static_cast<std::size_t>(mult) * count;
        }
        require(total == ipow(d, k), "InternalCheckFailure",
                "multiplicities do not fill the tensor power");
        table.push_back(std::move(row));
    };

    aggregate(1);
    for (int k = 2; k <= max_weight; ++k) {
        TensorRep<K> rep(op, k);
        auto apply = [&](const Vec<K>& v) { return rep.apply_murphy(k, v); };
        std::vector<Node> next;
        for (Node& nd : nodes) {
            detail::EchelonBasis<K> lifted = detail::kron_lift(nd.basis, d);
            std::vector<Partition> shapes;
            std::vector<K> values;
            const std::vector<int>& parts = nd.shape.parts();
            for (int r = 0; r <= nd.shape.length(); ++r) {
                if (r > 0 && nd.shape.part(r - 1) <= nd.shape.part(r)) continue;
                std::vector<int> grown = parts;
                if (r == nd.shape.length()) grown.push_back(1);
                else grown[static_cast<std::size_t>(r)] += 1;
                shapes.push_back(Partition(std::move(grown)));
                K e = quantum_integer(op.q, nd.shape.part(r) - r);
                for (const K& seen : values)
                    require(!(seen == e), "BlockSeparationFailure",
                            "Murphy eigenvalues collide at this q");
                values.push_back(std::move(e));
            }
            auto children = detail::split_eigenspaces(lifted, apply, values);
            for (std::size_t j = 0; j < children.size(); ++j) {
                if (children[j].rows.rows() == 0) continue;
                next.push_back({shapes[j], std::move(children[j])});
            }
        }
        nodes = std::move(next);
        aggregate(k);
    }
    return table;
}

template <ScalarField K>
std::vector<std::pair<Partition, long>> multiplicities(const HeckeOp<K>& op, int n) {
    return multiplicity_table(op, n).back();
}

struct Birank {
    int r = 0;
    int s = 0;
};

// Determine the birank from the support and values of the multiplicity
// map up to max_weight: a candidate (r,s) must reproduce the support as
// the (r,s)-hook condition and every multiplicity as the hook
// semistandard tableau count; among the candidates that do, the one of
// minimal r+s wins.  An ambiguity at that minimum is reported as
// BirankUndetermined rather than guessed.
template <ScalarField K>
Birank birank(const HeckeOp<K>& op, int max_weight) {
    auto table = multiplicity_table(op, max_weight);
    std::vector<Birank> alive;
    for (int r = 0; r <= op.d; ++r) {
        for (int s = 0; s <= op.d; ++s) {
            if (r == 0 && s == 0) continue;
            bool ok = true;
            for (const auto& row : table) {
                for (const auto& [lam, mult] : row) {
                    bool in_hook = gamma_rs_contains(r, s, lam);
                    if (in_hook != (mult > 0)) { ok = false; break; }
                    if (mult > 0 &&
                        static_cast<std::uint64_t>(mult) != hook_ssyt_count(lam, r, s)) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) break;
            }
            if (ok) alive.push_back({r, s});
        }
    }
    require(!alive.empty(), "BirankUndetermined",
            "no hook pattern reproduces the observed multiplicities");
    int best = alive[0].r + alive[0].s;
    for (const Birank& b : alive) best = std::min(best, b.r + b.s);
    std::vector<Birank> minimal;
    for (const Birank& b : alive)
        if (b.r + b.s == best) minimal.push_back(b);
    require(minimal.size() == 1, "BirankUndetermined",
            "several minimal biranks match the probed multiplicities");
    return minimal[0];
}

// Deepen the probe until the birank becomes unique.  The true birank
// survives every probe depth, so the first unique answer is final.
template <ScalarField K>
Birank birank_auto(const HeckeOp<K>& op, int probe_cap = 6) {
    for (int probe = 2; probe < probe_cap; ++probe) {
        try {
            return birank(op, probe);
        } catch (const Error& e) {
            if (e.code() != "BirankUndetermined") throw;
        }
    }
    return birank(op, probe_cap);
}

}  // namespace qmat
