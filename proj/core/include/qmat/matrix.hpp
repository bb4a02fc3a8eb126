#pragma once

#include <cstddef>
#include <vector>

#include "qmat/error.hpp"
#include "qmat/poly.hpp"
#include "qmat/scalar.hpp"

namespace qmat {

template <ScalarField K>
using Vec = std::vector<K>;

/// Dense matrix over an exact scalar field. Row-major storage.
/// All elimination is exact; there is no tolerance anywhere.
template <ScalarField K>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, K::zero()) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<K> data)
        : rows_(rows), cols_(cols), a_(std::move(data)) {
        require(a_.size() == rows_ * cols_, "DimensionMismatch", "matrix data size");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = K::one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    K& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const K& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    K* row_ptr(std::size_t i) { return a_.data() + i * cols_; }
    const K* row_ptr(std::size_t i) const { return a_.data() + i * cols_; }

    bool is_zero() const {
        for (const K& v : a_)
            if (!v.is_zero()) return false;
        return true;
    }

    bool is_square() const { return rows_ == cols_; }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        require(x.rows_ == y.rows_ && x.cols_ == y.cols_, "DimensionMismatch", "matrix add");
        Matrix r = x;
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += y.a_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        require(x.rows_ == y.rows_ && x.cols_ == y.cols_, "DimensionMismatch", "matrix sub");
        Matrix r = x;
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] - y.a_[i];
        return r;
    }
    friend Matrix operator*(const K& s, const Matrix& x) {
        Matrix r = x;
        for (K& v : r.a_) v = s * v;
        return r;
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        require(x.cols_ == y.rows_, "DimensionMismatch", "matrix product shapes");
        Matrix r(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i) {
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const K& v = x.at(i, k);
                if (v.is_zero()) continue;
                const K* yr = y.row_ptr(k);
                K* rr = r.row_ptr(i);
                for (std::size_t j = 0; j < y.cols_; ++j) {
                    if (!yr[j].is_zero()) rr[j] += v * yr[j];
                }
            }
        }
        return r;
    }

    Vec<K> apply(const Vec<K>& x) const {
        require(x.size() == cols_, "DimensionMismatch", "matrix-vector shapes");
        Vec<K> y(rows_, K::zero());
        for (std::size_t i = 0; i < rows_; ++i) {
            const K* r = row_ptr(i);
            for (std::size_t j = 0; j < cols_; ++j)
                if (!r[j].is_zero() && !x[j].is_zero()) y[i] += r[j] * x[j];
        }
        return y;
    }

    static Matrix kronecker(const Matrix& x, const Matrix& y) {
        Matrix r(x.rows_ * y.rows_, x.cols_ * y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t j = 0; j < x.cols_; ++j) {
                const K& v = x.at(i, j);
                if (v.is_zero()) continue;
                for (std::size_t k = 0; k < y.rows_; ++k)
                    for (std::size_t l = 0; l < y.cols_; ++l) {
                        const K& w = y.at(k, l);
                        if (!w.is_zero()) r.at(i * y.rows_ + k, j * y.cols_ + l) = v * w;
                    }
            }
        return r;
    }

    static Matrix vstack(const Matrix& x, const Matrix& y) {
        if (x.rows_ == 0) return y;
        if (y.rows_ == 0) return x;
        require(x.cols_ == y.cols_, "DimensionMismatch", "vstack widths");
        Matrix r(x.rows_ + y.rows_, x.cols_);
        r.a_ = x.a_;
        r.a_.insert(r.a_.end(), y.a_.begin(), y.a_.end());
        return r;
    }

    Vec<K> row(std::size_t i) const { return Vec<K>(row_ptr(i), row_ptr(i) + cols_); }
    Vec<K> col(std::size_t j) const {
        Vec<K> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
        return c;
    }
    void set_row(std::size_t i, const Vec<K>& v) {
        require(v.size() == cols_, "DimensionMismatch", "set_row width");
        for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
    }
    void set_col(std::size_t j, const Vec<K>& v) {
        require(v.size() == rows_, "DimensionMismatch", "set_col height");
        for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
    }

    /// In-place reduced row echelon form. Returns the pivot column list.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t p = r;
            while (p < rows_ && at(p, c).is_zero()) ++p;
            if (p == rows_) continue;
            if (p != r)
                for (std::size_t j = c; j < cols_; ++j) std::swap(at(p, j), at(r, j));
            K inv = at(r, c).inverse();
            if (!inv.is_one())
                for (std::size_t j = c; j < cols_; ++j)
                    if (!at(r, j).is_zero()) at(r, j) = inv * at(r, j);
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || at(i, c).is_zero()) continue;
                K f = at(i, c);
                for (std::size_t j = c; j < cols_; ++j)
                    if (!at(r, j).is_zero()) at(i, j) = at(i, j) - f * at(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    std::size_t rank() const {
        Matrix m = *this;
        return m.rref().size();
    }

    /// Rows of the result span { x : A x = 0 }.
    Matrix kernel() const {
        Matrix m = *this;
        std::vector<std::size_t> piv = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (std::size_t c : piv) is_pivot[c] = true;
        std::size_t nfree = cols_ - piv.size();
        Matrix k(nfree, cols_);
        std::size_t ki = 0;
        for (std::size_t c = 0; c < cols_; ++c) {
            if (is_pivot[c]) continue;
            k.at(ki, c) = K::one();
            for (std::size_t pr = 0; pr < piv.size(); ++pr)
                k.at(ki, piv[pr]) = -m.at(pr, c);
            ++ki;
        }
        return k;
    }

    Matrix inverse() const {
        require(is_square(), "NotSquare", "inverse of a non-square matrix");
        Matrix aug(rows_, 2 * cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols_ + i) = K::one();
        }
        std::vector<std::size_t> piv = aug.rref();
        require(piv.size() == rows_ && piv[rows_ - 1] < cols_, "RankMismatch",
                "matrix is singular");
        Matrix inv(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
        return inv;
    }

    bool is_invertible() const { return is_square() && rank() == rows_; }

    /// Monic minimal polynomial, by Krylov iteration from every standard
    /// basis vector and lcm of the per-vector annihilators.
    Poly<K> minimal_polynomial() const {
        require(is_square(), "NotSquare", "minimal polynomial of a non-square matrix");
        const std::size_t n = rows_;
        Poly<K> mp = Poly<K>::one();
        // echelon rows of the Krylov space covered so far, to skip seeds
        Matrix covered(0, n);
        for (std::size_t seed = 0; seed < n; ++seed) {
            Vec<K> v(n, K::zero());
            v[seed] = K::one();
            if (covered.rows() > 0 && covered_contains(covered, v)) continue;
            // columns: v, Av, A^2 v, ... until dependence
            std::vector<Vec<K>> krylov{v};
            Poly<K> ann;
            for (;;) {
                Vec<K> w = apply(krylov.back());
                // solve krylov * c = w
                Matrix sys(n, krylov.size() + 1);
                for (std::size_t j = 0; j < krylov.size(); ++j) sys.set_col(j, krylov[j]);
                sys.set_col(krylov.size(), w);
                Matrix red = sys;
                std::vector<std::size_t> piv = red.rref();
                bool dependent = piv.empty() || piv.back() != krylov.size();
                if (dependent) {
                    std::vector<K> coeffs(krylov.size() + 1, K::zero());
                    for (std::size_t pr = 0; pr < piv.size(); ++pr)
                        coeffs[piv[pr]] = -red.at(pr, krylov.size());
                    coeffs[krylov.size()] = K::one();
                    ann = Poly<K>(std::move(coeffs));
                    break;
                }
                krylov.push_back(std::move(w));
            }
            mp = Poly<K>::lcm(mp, ann);
            Matrix kr(krylov.size(), n);
            for (std::size_t i = 0; i < krylov.size(); ++i) kr.set_row(i, krylov[i]);
            covered = Matrix::vstack(covered, kr);
            covered.rref();
            covered = drop_zero_rows(covered);
            if (mp.degree() == static_cast<int>(n)) break;
        }
        return mp;
    }

    /// Evaluates a polynomial at this matrix (Horner).
    Matrix eval_poly(const Poly<K>& p) const {
        require(is_square(), "NotSquare", "polynomial of a non-square matrix");
        Matrix acc(rows_, cols_);
        for (int i = p.degree(); i >= 0; --i) {
            acc = *this * acc;
            K c = p.coeff(i);
            if (!c.is_zero())
                for (std::size_t k = 0; k < rows_; ++k) acc.at(k, k) += c;
        }
        return acc;
    }

    static Matrix drop_zero_rows(const Matrix& m) {
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            bool z = true;
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (!m.at(i, j).is_zero()) {
                    z = false;
                    break;
                }
            if (!z) keep.push_back(i);
        }
        Matrix r(keep.size(), m.cols());
        for (std::size_t i = 0; i < keep.size(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(keep[i], j);
        return r;
    }

private:
    static bool covered_contains(const Matrix& echelon, const Vec<K>& v) {
        // reduce v against echelon rows (each with leading 1)
        Vec<K> w = v;
        for (std::size_t i = 0; i < echelon.rows(); ++i) {
            std::size_t lead = 0;
            while (lead < echelon.cols() && echelon.at(i, lead).is_zero()) ++lead;
            if (lead == echelon.cols()) continue;
            if (!w[lead].is_zero()) {
                K f = w[lead];
                for (std::size_t j = lead; j < echelon.cols(); ++j)
                    if (!echelon.at(i, j).is_zero()) w[j] = w[j] - f * echelon.at(i, j);
            }
        }
        for (const K& x : w)
            if (!x.is_zero()) return false;
        return true;
    }

    std::size_t rows_, cols_;
    std::vector<K> a_;
};

template <ScalarField K>
Vec<K> vec_kron(const Vec<K>& a, const Vec<K>& b) {
    Vec<K> r(a.size() * b.size(), K::zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) r[i * b.size() + j] = a[i] * b[j];
    }
    return r;
}

template <ScalarField K>
bool vec_is_zero(const Vec<K>& v) {
    for (const K& x : v)
        if (!x.is_zero()) return false;
    return true;
}

} // namespace qmat
