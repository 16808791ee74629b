#pragma once

// Subspaces in canonical form: the basis is a reduced row-echelon matrix with
// no zero rows, so two subspaces are equal iff their basis matrices are
// entrywise equal.

#include <optional>
#include <stdexcept>
#include <vector>

#include "hopfkern/matrix.hpp"

namespace hopfkern {

class Subspace {
public:
    Subspace() : ambient_(0) {}

    static Subspace zero(const CycloField* f, size_t ambient) {
        Subspace s;
        s.ambient_ = ambient;
        s.basis_ = Matrix(f, 0, ambient);
        return s;
    }

    static Subspace full(const CycloField* f, size_t ambient) {
        return from_matrix(Matrix::identity(f, ambient));
    }

    static Subspace from_matrix(const Matrix& rows) {
        RrefResult rr = rref(rows);
        Subspace s;
        s.ambient_ = rows.cols();
        s.pivots_ = rr.pivots;
        Matrix b(rows.field(), rr.rank, rows.cols());
        for (size_t i = 0; i < rr.rank; ++i)
            for (size_t j = 0; j < rows.cols(); ++j) b.at(i, j) = rr.mat.at(i, j);
        s.basis_ = std::move(b);
        return s;
    }

    static Subspace from_rows(const CycloField* f, const std::vector<Vec>& rows, size_t ambient) {
        if (rows.empty()) return zero(f, ambient);
        return from_matrix(Matrix::from_rows(f, rows, ambient));
    }

    static Subspace span_of(const Vec& v) {
        return from_rows(v[0].field_ptr(), {v}, v.size());
    }

    size_t ambient_dim() const { return ambient_; }
    size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<size_t>& pivots() const { return pivots_; }
    const CycloField* field() const { return basis_.field(); }

    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }

    // reduce v against the echelon basis; returns the residual
    Vec reduce(Vec v) const {
        for (size_t i = 0; i < basis_.rows(); ++i) {
            size_t pc = pivots_[i];
            if (v[pc].is_zero()) continue;
            FieldElem f = v[pc];
            for (size_t j = pc; j < ambient_; ++j) {
                const FieldElem& bj = basis_.at(i, j);
                if (!bj.is_zero()) v[j] -= f * bj;
            }
        }
        return v;
    }

    bool contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

    bool contains(const Subspace& o) const {
        if (o.ambient_ != ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
        for (size_t i = 0; i < o.dim(); ++i)
            if (!contains(o.basis_.row(i))) return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

    // coordinates of v in this basis; throws if v is outside the subspace
    Vec coordinates_of(const Vec& v) const {
        Vec coeff = vec_zero(field(), dim());
        Vec r = v;
        for (size_t i = 0; i < basis_.rows(); ++i) {
            size_t pc = pivots_[i];
            if (r[pc].is_zero()) continue;
            FieldElem f = r[pc];
            coeff[i] = f;
            for (size_t j = pc; j < ambient_; ++j) {
                const FieldElem& bj = basis_.at(i, j);
                if (!bj.is_zero()) r[j] -= f * bj;
            }
        }
        if (!vec_is_zero(r)) throw std::domain_error("Subspace: vector not in subspace");
        return coeff;
    }

    friend Subspace operator+(const Subspace& a, const Subspace& b) {
        if (a.ambient_ != b.ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        return from_matrix(Matrix::vstack(a.basis_, b.basis_));
    }

    // Zassenhaus: echelonize [A|A; B|0]; rows whose left half vanished carry a
    // basis of the intersection in the right half.
    static Subspace intersect(const Subspace& a, const Subspace& b) {
        if (a.ambient_ != b.ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
        const CycloField* f = a.field() ? a.field() : b.field();
        size_t n = a.ambient_;
        if (a.is_zero() || b.is_zero()) return zero(f, n);
        Matrix top = Matrix::hstack(a.basis_, a.basis_);
        Matrix bot = Matrix::hstack(b.basis_, Matrix(f, b.dim(), n));
        RrefResult rr = rref(Matrix::vstack(top, bot));
        std::vector<Vec> rows;
        for (size_t i = 0; i < rr.rank; ++i) {
            bool left_zero = true;
            for (size_t j = 0; j < n && left_zero; ++j)
                if (!rr.mat.at(i, j).is_zero()) left_zero = false;
            if (!left_zero) continue;
            Vec v;
            v.reserve(n);
            for (size_t j = 0; j < n; ++j) v.push_back(rr.mat.at(i, n + j));
            rows.push_back(std::move(v));
        }
        return from_rows(f, rows, n);
    }

private:
    size_t ambient_;
    Matrix basis_;
    std::vector<size_t> pivots_;
};

// left kernel: { v : v * m = 0 }, as a subspace of the row space side
inline Subspace left_kernel(const Matrix& m) {
    // nullspace of the transpose action: reduce [m | I] and take rows whose
    // m-part vanished
    Matrix aug = Matrix::hstack(m, Matrix::identity(m.field(), m.rows()));
    RrefResult rr = rref(std::move(aug));
    std::vector<Vec> rows;
    for (size_t i = 0; i < rr.rank; ++i) {
        if (rr.pivots[i] < m.cols()) continue; // pivot inside m: row not in kernel
        Vec v;
        v.reserve(m.rows());
        for (size_t j = 0; j < m.rows(); ++j) v.push_back(rr.mat.at(i, m.cols() + j));
        rows.push_back(std::move(v));
    }
    return Subspace::from_rows(m.field(), rows, m.rows());
}

// right kernel: { v : m * v^T = 0 }
inline Subspace right_kernel(const Matrix& m) { return left_kernel(m.transpose()); }

// image of the map v -> v * m, i.e. the row space of m
inline Subspace row_space(const Matrix& m) { return Subspace::from_matrix(m); }

} // namespace hopfkern
