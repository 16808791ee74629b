#pragma once

// Dense matrices over a cyclotomic field.
//
// Convention used throughout the library: elements are ROW vectors and linear
// maps act on the right, image(v) = v * M. A map from an n-dimensional space
// to an m-dimensional one is an n x m matrix whose i-th row is the image of
// the i-th basis vector.

#include <cassert>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hopfkern/cyclotomic.hpp"

namespace hopfkern {

using Vec = std::vector<FieldElem>;

inline Vec vec_zero(const CycloField* f, size_t n) {
    return Vec(n, FieldElem::zero(f));
}

inline Vec vec_unit(const CycloField* f, size_t n, size_t i) {
    Vec v = vec_zero(f, n);
    v[i] = FieldElem::one(f);
    return v;
}

inline bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

inline Vec vec_scale(const Vec& a, const FieldElem& c) {
    Vec r = a;
    for (auto& x : r) x *= c;
    return r;
}

inline FieldElem vec_dot(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    assert(!a.empty());
    FieldElem s = FieldElem::zero(a[0].field_ptr());
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    }
    return s;
}

class Matrix {
public:
    Matrix() : field_(nullptr), rows_(0), cols_(0) {}

    Matrix(const CycloField* f, size_t rows, size_t cols)
        : field_(f), rows_(rows), cols_(cols), e_(rows * cols, FieldElem::zero(f)) {}

    static Matrix identity(const CycloField* f, size_t n) {
        Matrix m(f, n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = FieldElem::one(f);
        return m;
    }

    static Matrix from_rows(const CycloField* f, const std::vector<Vec>& rows, size_t cols) {
        Matrix m(f, rows.size(), cols);
        for (size_t i = 0; i < rows.size(); ++i) {
            assert(rows[i].size() == cols);
            for (size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix row_vector(const Vec& v) {
        assert(!v.empty());
        return from_rows(v[0].field_ptr(), {v}, v.size());
    }

    const CycloField* field() const { return field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    FieldElem& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const FieldElem& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

    Vec row(size_t i) const {
        Vec v;
        v.reserve(cols_);
        for (size_t j = 0; j < cols_; ++j) v.push_back(at(i, j));
        return v;
    }

    void set_row(size_t i, const Vec& v) {
        assert(v.size() == cols_);
        for (size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
    }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        Matrix r = a;
        for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        Matrix r = a;
        for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("Matrix: shape mismatch " + a.shape() + " * " + b.shape());
        Matrix r(a.field_, a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i) {
            for (size_t k = 0; k < a.cols_; ++k) {
                const FieldElem& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (size_t j = 0; j < b.cols_; ++j) {
                    const FieldElem& bkj = b.at(k, j);
                    if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
                }
            }
        }
        return r;
    }

    Matrix scaled(const FieldElem& c) const {
        Matrix r = *this;
        for (auto& x : r.e_) x *= c;
        return r;
    }

    Matrix transpose() const {
        Matrix r(field_, cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    FieldElem trace() const {
        assert(rows_ == cols_);
        FieldElem t = FieldElem::zero(field_);
        for (size_t i = 0; i < rows_; ++i) t += at(i, i);
        return t;
    }

    // Kronecker product: (a (x) b)[(i*p+k)][(j*q+l)] = a[i][j] * b[k][l]
    static Matrix kron(const Matrix& a, const Matrix& b) {
        Matrix r(a.field_, a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t j = 0; j < a.cols_; ++j) {
                const FieldElem& aij = a.at(i, j);
                if (aij.is_zero()) continue;
                for (size_t k = 0; k < b.rows_; ++k)
                    for (size_t l = 0; l < b.cols_; ++l) {
                        const FieldElem& bkl = b.at(k, l);
                        if (!bkl.is_zero()) r.at(i * b.rows_ + k, j * b.cols_ + l) = aij * bkl;
                    }
            }
        return r;
    }

    static Matrix hstack(const Matrix& a, const Matrix& b) {
        assert(a.rows_ == b.rows_);
        Matrix r(a.field_, a.rows_, a.cols_ + b.cols_);
        for (size_t i = 0; i < a.rows_; ++i) {
            for (size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
            for (size_t j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
        }
        return r;
    }

    static Matrix vstack(const Matrix& a, const Matrix& b) {
        assert(a.cols_ == b.cols_ || a.rows_ == 0 || b.rows_ == 0);
        size_t cols = a.rows_ > 0 ? a.cols_ : b.cols_;
        Matrix r(a.field_ ? a.field_ : b.field_, a.rows_ + b.rows_, cols);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t j = 0; j < cols; ++j) r.at(i, j) = a.at(i, j);
        for (size_t i = 0; i < b.rows_; ++i)
            for (size_t j = 0; j < cols; ++j) r.at(a.rows_ + i, j) = b.at(i, j);
        return r;
    }

    std::string shape() const {
        return std::to_string(rows_) + "x" + std::to_string(cols_);
    }

    std::string to_string() const {
        std::string out;
        for (size_t i = 0; i < rows_; ++i) {
            out += "[";
            for (size_t j = 0; j < cols_; ++j) {
                if (j) out += ", ";
                out += at(i, j).to_string();
            }
            out += "]\n";
        }
        return out;
    }

private:
    const CycloField* field_;
    size_t rows_, cols_;
    std::vector<FieldElem> e_;
};

inline Vec operator*(const Vec& v, const Matrix& m) {
    assert(v.size() == m.rows());
    Vec r = vec_zero(m.field(), m.cols());
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        for (size_t j = 0; j < m.cols(); ++j) {
            const FieldElem& x = m.at(i, j);
            if (!x.is_zero()) r[j] += v[i] * x;
        }
    }
    return r;
}

struct RrefResult {
    Matrix mat;
    size_t rank = 0;
    std::vector<size_t> pivots; // pivot column of each nonzero row
};

// Gauss-Jordan reduction to reduced row-echelon form with first-nonzero
// pivoting. Exact; the result is the canonical form of the row space.
inline RrefResult rref(Matrix m) {
    RrefResult res;
    size_t rows = m.rows(), cols = m.cols();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = rows;
        for (size_t i = r; i < rows; ++i) {
            if (!m.at(i, c).is_zero()) { piv = i; break; }
        }
        if (piv == rows) continue;
        if (piv != r) {
            for (size_t j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        }
        FieldElem inv = m.at(r, c).inverse();
        for (size_t j = c; j < cols; ++j) {
            if (!m.at(r, j).is_zero()) m.at(r, j) *= inv;
        }
        for (size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const FieldElem f = m.at(i, c);
            if (f.is_zero()) continue;
            for (size_t j = c; j < cols; ++j) {
                if (!m.at(r, j).is_zero()) m.at(i, j) -= f * m.at(r, j);
            }
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    res.mat = std::move(m);
    return res;
}

inline size_t rank(const Matrix& m) { return rref(m).rank; }

// Solve X * a = rhs for X (expresses each row of rhs in the row space of a).
// Returns std::nullopt if some row is not in the row space.
inline std::optional<Matrix> solve_right(const Matrix& a, const Matrix& rhs) {
    assert(a.cols() == rhs.cols());
    // reduce [a | I], track the transformation
    Matrix aug = Matrix::hstack(a, Matrix::identity(a.field(), a.rows()));
    RrefResult rr = rref(std::move(aug));
    // rows of rr.mat: [echelon of a | T] with echelon = T * a
    Matrix x(a.field(), rhs.rows(), a.rows());
    for (size_t i = 0; i < rhs.rows(); ++i) {
        Vec v = rhs.row(i);
        Vec coeff = vec_zero(a.field(), a.rows());
        for (size_t row = 0; row < rr.rank; ++row) {
            size_t pc = rr.pivots[row];
            if (pc >= a.cols()) break; // pivot fell into the augmented part
            if (v[pc].is_zero()) continue;
            FieldElem f = v[pc];
            for (size_t j = 0; j < a.cols(); ++j) {
                const FieldElem& mj = rr.mat.at(row, j);
                if (!mj.is_zero()) v[j] -= f * mj;
            }
            for (size_t j = 0; j < a.rows(); ++j) {
                const FieldElem& tj = rr.mat.at(row, a.cols() + j);
                if (!tj.is_zero()) coeff[j] += f * tj;
            }
        }
        if (!vec_is_zero(v)) return std::nullopt;
        x.set_row(i, coeff);
    }
    return x;
}

// Matrix inverse; throws if singular.
inline Matrix inverse(const Matrix& a) {
    assert(a.rows() == a.cols());
    auto x = solve_right(a, Matrix::identity(a.field(), a.rows()));
    if (!x) throw std::domain_error("Matrix: singular");
    return *x;
}

} // namespace hopfkern
