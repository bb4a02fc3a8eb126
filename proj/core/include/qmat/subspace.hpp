#pragma once

#include <cstddef>

#include "qmat/matrix.hpp"

namespace qmat {

/// Linear subspace of K^ambient, stored as the reduced row echelon basis of
/// its spanning rows. The rref basis is canonical, so equality of subspaces
/// is plain matrix equality.
template <ScalarField K>
class Subspace {
public:
    Subspace() : ambient_(0) {}

    static Subspace from_rows(Matrix<K> rows) {
        Subspace s;
        s.ambient_ = rows.cols();
        rows.rref();
        s.basis_ = Matrix<K>::drop_zero_rows(rows);
        return s;
    }

    static Subspace from_span(const std::vector<Vec<K>>& vectors, std::size_t ambient) {
        Matrix<K> m(vectors.size(), ambient);
        for (std::size_t i = 0; i < vectors.size(); ++i) m.set_row(i, vectors[i]);
        return from_rows(std::move(m));
    }

    /// Column space of a matrix, as a subspace of K^rows.
    static Subspace image(const Matrix<K>& m) { return from_rows(m.transpose()); }

    /// Null space { x : m x = 0 }, as a subspace of K^cols.
    static Subspace kernel(const Matrix<K>& m) { return from_rows(m.kernel()); }

    static Subspace zero(std::size_t ambient) {
        Subspace s;
        s.ambient_ = ambient;
        s.basis_ = Matrix<K>(0, ambient);
        return s;
    }

    static Subspace full(std::size_t ambient) {
        Subspace s;
        s.ambient_ = ambient;
        s.basis_ = Matrix<K>::identity(ambient);
        return s;
    }

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix<K>& basis() const { return basis_; }
    Vec<K> basis_vector(std::size_t i) const { return basis_.row(i); }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

    /// Residual of v after reduction against the basis; zero iff v lies here.
    Vec<K> reduce(Vec<K> v) const {
        require(v.size() == ambient_, "DimensionMismatch", "subspace membership ambient");
        for (std::size_t i = 0; i < basis_.rows(); ++i) {
            std::size_t lead = 0;
            while (lead < ambient_ && basis_.at(i, lead).is_zero()) ++lead;
            if (lead == ambient_ || v[lead].is_zero()) continue;
            K f = v[lead];
            for (std::size_t j = lead; j < ambient_; ++j)
                if (!basis_.at(i, j).is_zero()) v[j] = v[j] - f * basis_.at(i, j);
        }
        return v;
    }

    bool contains(const Vec<K>& v) const { return vec_is_zero(reduce(v)); }

    bool contains(const Subspace& other) const {
        for (std::size_t i = 0; i < other.dim(); ++i)
            if (!contains(other.basis_vector(i))) return false;
        return true;
    }

    friend Subspace operator+(const Subspace& a, const Subspace& b) {
        require(a.ambient_ == b.ambient_, "DimensionMismatch", "subspace sum ambients");
        return from_rows(Matrix<K>::vstack(a.basis_, b.basis_));
    }

    /// Zassenhaus intersection: rows [A|A; B|0], echelonize, read rows whose
    /// left half vanished.
    static Subspace intersect(const Subspace& a, const Subspace& b) {
        require(a.ambient_ == b.ambient_, "DimensionMismatch", "subspace intersection ambients");
        const std::size_t n = a.ambient_;
        Matrix<K> z(a.dim() + b.dim(), 2 * n);
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < n; ++j) {
                z.at(i, j) = a.basis_.at(i, j);
                z.at(i, n + j) = a.basis_.at(i, j);
            }
        for (std::size_t i = 0; i < b.dim(); ++i)
            for (std::size_t j = 0; j < n; ++j) z.at(a.dim() + i, j) = b.basis_.at(i, j);
        z.rref();
        std::vector<Vec<K>> rows;
        for (std::size_t i = 0; i < z.rows(); ++i) {
            bool left_zero = true;
            for (std::size_t j = 0; j < n; ++j)
                if (!z.at(i, j).is_zero()) {
                    left_zero = false;
                    break;
                }
            if (!left_zero) continue;
            Vec<K> r(n);
            bool nz = false;
            for (std::size_t j = 0; j < n; ++j) {
                r[j] = z.at(i, n + j);
                nz = nz || !r[j].is_zero();
            }
            if (nz) rows.push_back(std::move(r));
        }
        return from_span(rows, n);
    }

    /// Tensor product inside K^{ambA * ambB}, spanned by Kronecker products
    /// of basis vectors.
    static Subspace tensor(const Subspace& a, const Subspace& b) {
        std::vector<Vec<K>> rows;
        rows.reserve(a.dim() * b.dim());
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < b.dim(); ++j)
                rows.push_back(vec_kron(a.basis_vector(i), b.basis_vector(j)));
        return from_span(rows, a.ambient_ * b.ambient_);
    }

private:
    std::size_t ambient_;
    Matrix<K> basis_;
};

} // namespace qmat
