#pragma once

// Structure-constant representation of a finite-dimensional Hopf algebra over
// a cyclotomic field, with exact verification of all axioms.
//
// Tensor conventions (all row-vector based, see matrix.hpp):
//   mult[i].at(j,k)   : coefficient of b_k in b_i * b_j
//   comult[i].at(j,k) : coefficient of b_j (x) b_k in Delta(b_i)
//   antipode.row(i)   : coordinates of S(b_i)
//   unit              : coordinates of 1
//   counit[i]         : eps(b_i)
// Elements of H (x) H are row vectors of length n^2 indexed by j*n+k.

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hopfkern/matrix.hpp"
#include "hopfkern/subspace.hpp"

namespace hopfkern {

struct HopfError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// input fails structural/axiom requirements
struct InvalidInputError : HopfError {
    using HopfError::HopfError;
};

// input is a bialgebra/Hopf algebra but not semisimple
struct NotSemisimpleError : HopfError {
    using HopfError::HopfError;
};

// an exact certification step needed an eigenvalue outside Q(zeta_N)
struct FieldTooSmallError : HopfError {
    using HopfError::HopfError;
};

class HopfAlgebraData {
public:
    HopfAlgebraData() = default;

    HopfAlgebraData(FieldPtr field, std::string name, size_t dim,
                    std::vector<Matrix> mult, Vec unit,
                    std::vector<Matrix> comult, Vec counit, Matrix antipode)
        : field_(std::move(field)),
          name_(std::move(name)),
          dim_(dim),
          mult_(std::move(mult)),
          unit_(std::move(unit)),
          comult_(std::move(comult)),
          counit_(std::move(counit)),
          antipode_(std::move(antipode)) {
        check_shapes();
    }

    const CycloField* field() const { return field_.get(); }
    const FieldPtr& field_owner() const { return field_; }
    const std::string& name() const { return name_; }
    size_t dim() const { return dim_; }

    const std::vector<Matrix>& mult() const { return mult_; }
    const std::vector<Matrix>& comult() const { return comult_; }
    const Vec& unit() const { return unit_; }
    const Vec& counit() const { return counit_; }
    const Matrix& antipode() const { return antipode_; }

    FieldElem zero_scalar() const { return FieldElem::zero(field()); }
    FieldElem one_scalar() const { return FieldElem::one(field()); }

    // b_i * b_j as a coordinate vector
    Vec basis_product(size_t i, size_t j) const { return mult_[i].row(j); }

    Vec multiply(const Vec& x, const Vec& y) const {
        Vec r = vec_zero(field(), dim_);
        for (size_t i = 0; i < dim_; ++i) {
            if (x[i].is_zero()) continue;
            for (size_t j = 0; j < dim_; ++j) {
                if (y[j].is_zero()) continue;
                FieldElem c = x[i] * y[j];
                const Matrix& mi = mult_[i];
                for (size_t k = 0; k < dim_; ++k) {
                    const FieldElem& m = mi.at(j, k);
                    if (!m.is_zero()) r[k] += c * m;
                }
            }
        }
        return r;
    }

    // matrix of x -> a * x (acting on row vectors from the right)
    Matrix left_mult_matrix(const Vec& a) const {
        Matrix l(field(), dim_, dim_);
        for (size_t i = 0; i < dim_; ++i) {
            if (a[i].is_zero()) continue;
            const Matrix& mi = mult_[i];
            for (size_t j = 0; j < dim_; ++j)
                for (size_t k = 0; k < dim_; ++k) {
                    const FieldElem& m = mi.at(j, k);
                    if (!m.is_zero()) l.at(j, k) += a[i] * m;
                }
        }
        return l;
    }

    // matrix of x -> x * b
    Matrix right_mult_matrix(const Vec& b) const {
        Matrix r(field(), dim_, dim_);
        for (size_t j = 0; j < dim_; ++j) {
            const Matrix& mj = mult_[j];
            for (size_t q = 0; q < dim_; ++q) {
                if (b[q].is_zero()) continue;
                for (size_t k = 0; k < dim_; ++k) {
                    const FieldElem& m = mj.at(q, k);
                    if (!m.is_zero()) r.at(j, k) += b[q] * m;
                }
            }
        }
        return r;
    }

    // Delta(x) as an n x n coefficient matrix
    Matrix comult_of(const Vec& x) const {
        Matrix d(field(), dim_, dim_);
        for (size_t i = 0; i < dim_; ++i) {
            if (x[i].is_zero()) continue;
            const Matrix& ci = comult_[i];
            for (size_t j = 0; j < dim_; ++j)
                for (size_t k = 0; k < dim_; ++k) {
                    const FieldElem& c = ci.at(j, k);
                    if (!c.is_zero()) d.at(j, k) += x[i] * c;
                }
        }
        return d;
    }

    // Delta(x) flattened to a row vector of length n^2
    Vec comult_vec(const Vec& x) const {
        Matrix d = comult_of(x);
        Vec v;
        v.reserve(dim_ * dim_);
        for (size_t j = 0; j < dim_; ++j)
            for (size_t k = 0; k < dim_; ++k) v.push_back(d.at(j, k));
        return v;
    }

    FieldElem counit_of(const Vec& x) const { return vec_dot(x, counit_); }

    Vec antipode_of(const Vec& x) const { return x * antipode_; }

    // product in H (x) H of two coefficient matrices
    Matrix tensor_square_product(const Matrix& a, const Matrix& b) const {
        Matrix r(field(), dim_, dim_);
        for (size_t j = 0; j < dim_; ++j)
            for (size_t k = 0; k < dim_; ++k) {
                const FieldElem& ajk = a.at(j, k);
                if (ajk.is_zero()) continue;
                for (size_t l = 0; l < dim_; ++l)
                    for (size_t m = 0; m < dim_; ++m) {
                        const FieldElem& blm = b.at(l, m);
                        if (blm.is_zero()) continue;
                        FieldElem c = ajk * blm;
                        const Matrix& mp = mult_[j];
                        const Matrix& mq = mult_[k];
                        for (size_t p = 0; p < dim_; ++p) {
                            const FieldElem& fp = mp.at(l, p);
                            if (fp.is_zero()) continue;
                            FieldElem cf = c * fp;
                            for (size_t q = 0; q < dim_; ++q) {
                                const FieldElem& fq = mq.at(m, q);
                                if (!fq.is_zero()) r.at(p, q) += cf * fq;
                            }
                        }
                    }
            }
        return r;
    }

private:
    FieldPtr field_;
    std::string name_;
    size_t dim_ = 0;
    std::vector<Matrix> mult_;
    Vec unit_;
    std::vector<Matrix> comult_;
    Vec counit_;
    Matrix antipode_;

    void check_shapes() const {
        if (dim_ == 0) throw InvalidInputError("algebra dimension must be positive");
        auto bad = [&](const std::string& what) {
            throw InvalidInputError(name_ + ": tensor shape mismatch in " + what);
        };
        if (mult_.size() != dim_) bad("mult");
        if (comult_.size() != dim_) bad("comult");
        for (const Matrix& m : mult_)
            if (m.rows() != dim_ || m.cols() != dim_) bad("mult");
        for (const Matrix& c : comult_)
            if (c.rows() != dim_ || c.cols() != dim_) bad("comult");
        if (unit_.size() != dim_) bad("unit");
        if (counit_.size() != dim_) bad("counit");
        if (antipode_.rows() != dim_ || antipode_.cols() != dim_) bad("antipode");
    }
};

using HopfPtr = std::shared_ptr<const HopfAlgebraData>;

struct AxiomCheck {
    std::string axiom;
    bool pass = true;
    std::string witness; // first violating basis indices, empty when pass
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    std::string summary() const {
        std::string out;
        for (const auto& c : checks) {
            out += (c.pass ? "pass  " : "FAIL  ") + c.axiom;
            if (!c.pass && !c.witness.empty()) out += "  [" + c.witness + "]";
            out += "\n";
        }
        return out;
    }
};

// Exhaustive exact check of the bialgebra and antipode axioms on basis
// elements; also checks S^2 = id, which holds for the semisimple inputs this
// library accepts.
inline AxiomReport verify_hopf(const HopfAlgebraData& h) {
    const size_t n = h.dim();
    const CycloField* f = h.field();
    AxiomReport rep;

    auto add = [&](const std::string& name, bool ok, const std::string& wit) {
        rep.checks.push_back({name, ok, ok ? "" : wit});
    };

    // unit laws
    {
        bool ok = true;
        std::string wit;
        for (size_t i = 0; i < n && ok; ++i) {
            if (h.multiply(h.unit(), vec_unit(f, n, i)) != vec_unit(f, n, i)) {
                ok = false;
                wit = "1*b" + std::to_string(i);
            }
        }
        add("unit_left", ok, wit);
        ok = true;
        for (size_t i = 0; i < n && ok; ++i) {
            if (h.multiply(vec_unit(f, n, i), h.unit()) != vec_unit(f, n, i)) {
                ok = false;
                wit = "b" + std::to_string(i) + "*1";
            }
        }
        add("unit_right", ok, wit);
    }

    // associativity
    {
        bool ok = true;
        std::string wit;
        for (size_t i = 0; i < n && ok; ++i)
            for (size_t j = 0; j < n && ok; ++j) {
                Vec ij = h.basis_product(i, j);
                for (size_t k = 0; k < n; ++k) {
                    Vec lhs = h.multiply(ij, vec_unit(f, n, k));
                    Vec rhs = h.multiply(vec_unit(f, n, i), h.basis_product(j, k));
                    if (lhs != rhs) {
                        ok = false;
                        wit = "(b" + std::to_string(i) + " b" + std::to_string(j) + ") b" +
                              std::to_string(k);
                        break;
                    }
                }
            }
        add("associativity", ok, wit);
    }

    // counit laws: (eps (x) id) Delta = id = (id (x) eps) Delta
    {
        bool okl = true, okr = true;
        std::string witl, witr;
        for (size_t i = 0; i < n; ++i) {
            Matrix d = h.comult_of(vec_unit(f, n, i));
            Vec left = vec_zero(f, n), right = vec_zero(f, n);
            for (size_t j = 0; j < n; ++j)
                for (size_t k = 0; k < n; ++k) {
                    const FieldElem& c = d.at(j, k);
                    if (c.is_zero()) continue;
                    left[k] += c * h.counit()[j];
                    right[j] += c * h.counit()[k];
                }
            if (okl && left != vec_unit(f, n, i)) { okl = false; witl = "b" + std::to_string(i); }
            if (okr && right != vec_unit(f, n, i)) { okr = false; witr = "b" + std::to_string(i); }
        }
        add("counit_left", okl, witl);
        add("counit_right", okr, witr);
    }

    // coassociativity: (Delta (x) id) Delta = (id (x) Delta) Delta
    {
        bool ok = true;
        std::string wit;
        for (size_t i = 0; i < n && ok; ++i) {
            const Matrix& ci = h.comult()[i];
            // lhs[(p,q,r)] = sum_j ci[j][r] * comult[j][p][q]
            // rhs[(p,q,r)] = sum_j ci[p][j] * comult[j][q][r]
            for (size_t p = 0; p < n && ok; ++p)
                for (size_t q = 0; q < n && ok; ++q)
                    for (size_t r = 0; r < n; ++r) {
                        FieldElem lhs = h.zero_scalar(), rhs = h.zero_scalar();
                        for (size_t j = 0; j < n; ++j) {
                            if (!ci.at(j, r).is_zero() && !h.comult()[j].at(p, q).is_zero())
                                lhs += ci.at(j, r) * h.comult()[j].at(p, q);
                            if (!ci.at(p, j).is_zero() && !h.comult()[j].at(q, r).is_zero())
                                rhs += ci.at(p, j) * h.comult()[j].at(q, r);
                        }
                        if (lhs != rhs) {
                            ok = false;
                            wit = "b" + std::to_string(i);
                            break;
                        }
                    }
        }
        add("coassociativity", ok, wit);
    }

    // Delta is an algebra map
    {
        bool ok = true;
        std::string wit;
        Matrix unit_tensor = h.comult_of(h.unit());
        Matrix expected(f, n, n);
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) expected.at(j, k) = h.unit()[j] * h.unit()[k];
        if (unit_tensor != expected) {
            ok = false;
            wit = "Delta(1) != 1(x)1";
        }
        for (size_t i = 0; i < n && ok; ++i)
            for (size_t j = 0; j < n; ++j) {
                Matrix lhs = h.comult_of(h.basis_product(i, j));
                Matrix rhs = h.tensor_square_product(h.comult()[i], h.comult()[j]);
                if (lhs != rhs) {
                    ok = false;
                    wit = "Delta(b" + std::to_string(i) + " b" + std::to_string(j) + ")";
                    break;
                }
            }
        add("comult_algebra_map", ok, wit);
    }

    // eps is an algebra map
    {
        bool ok = true;
        std::string wit;
        if (h.counit_of(h.unit()) != h.one_scalar()) {
            ok = false;
            wit = "eps(1) != 1";
        }
        for (size_t i = 0; i < n && ok; ++i)
            for (size_t j = 0; j < n; ++j) {
                if (h.counit_of(h.basis_product(i, j)) != h.counit()[i] * h.counit()[j]) {
                    ok = false;
                    wit = "eps(b" + std::to_string(i) + " b" + std::to_string(j) + ")";
                    break;
                }
            }
        add("counit_algebra_map", ok, wit);
    }

    // antipode axioms: m(S (x) id)Delta = u eps = m(id (x) S)Delta
    {
        bool okl = true, okr = true;
        std::string witl, witr;
        for (size_t i = 0; i < n; ++i) {
            const Matrix& ci = h.comult()[i];
            Vec lhs = vec_zero(f, n), rhs = vec_zero(f, n);
            for (size_t j = 0; j < n; ++j)
                for (size_t k = 0; k < n; ++k) {
                    const FieldElem& c = ci.at(j, k);
                    if (c.is_zero()) continue;
                    Vec sl = h.multiply(h.antipode().row(j), vec_unit(f, n, k));
                    Vec sr = h.multiply(vec_unit(f, n, j), h.antipode().row(k));
                    for (size_t t = 0; t < n; ++t) {
                        if (!sl[t].is_zero()) lhs[t] += c * sl[t];
                        if (!sr[t].is_zero()) rhs[t] += c * sr[t];
                    }
                }
            Vec expect = vec_scale(h.unit(), h.counit()[i]);
            if (okl && lhs != expect) { okl = false; witl = "b" + std::to_string(i); }
            if (okr && rhs != expect) { okr = false; witr = "b" + std::to_string(i); }
        }
        add("antipode_left", okl, witl);
        add("antipode_right", okr, witr);
    }

    // S^2 = id (holds for the semisimple algebras this library accepts)
    {
        Matrix s2 = h.antipode() * h.antipode();
        bool ok = s2 == Matrix::identity(f, n);
        add("antipode_involutive", ok, "S^2 != id");
    }

    return rep;
}

inline bool is_commutative(const HopfAlgebraData& h) {
    for (size_t i = 0; i < h.dim(); ++i)
        for (size_t j = i + 1; j < h.dim(); ++j)
            if (h.basis_product(i, j) != h.basis_product(j, i)) return false;
    return true;
}

inline bool is_cocommutative(const HopfAlgebraData& h) {
    for (size_t i = 0; i < h.dim(); ++i)
        if (h.comult()[i] != h.comult()[i].transpose()) return false;
    return true;
}

inline void require_verified(const HopfAlgebraData& h) {
    AxiomReport rep = verify_hopf(h);
    if (!rep.all_pass()) {
        std::string bad;
        for (const auto& c : rep.checks)
            if (!c.pass) bad += (bad.empty() ? "" : ", ") + c.axiom;
        throw InvalidInputError(h.name() + ": axiom check failed: " + bad);
    }
}

// The dual Hopf algebra on the dual basis: multiplication and comultiplication
// tensors swap roles (transposed), unit and counit swap, antipode transposes.
inline HopfAlgebraData dual(const HopfAlgebraData& h) {
    const size_t n = h.dim();
    const CycloField* f = h.field();
    std::vector<Matrix> mult(n, Matrix(f, n, n));
    std::vector<Matrix> comult(n, Matrix(f, n, n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                // (b^i b^j)(b_k) = Delta(b_k)[i][j]
                const FieldElem& c = h.comult()[k].at(i, j);
                if (!c.is_zero()) mult[i].at(j, k) = c;
                // Delta(b^i)(b_j (x) b_k) = (b_j b_k)(b_i)
                const FieldElem& m = h.mult()[j].at(k, i);
                if (!m.is_zero()) comult[i].at(j, k) = m;
            }
    std::string name = h.name().size() > 5 && h.name().substr(h.name().size() - 5) == "-dual"
                           ? h.name().substr(0, h.name().size() - 5)
                           : h.name() + "-dual";
    return HopfAlgebraData(h.field_owner(), name, n, std::move(mult), h.counit(),
                           std::move(comult), h.unit(), h.antipode().transpose());
}

// The idempotent two-sided integral: x L = L x = eps(x) L, normalized by
// eps(L) = 1. Failure modes signal malformed or non-semisimple input.
inline Vec integral(const HopfAlgebraData& h) {
    const size_t n = h.dim();
    const CycloField* f = h.field();
    Matrix sys(f, n, 0);
    for (size_t i = 0; i < n; ++i) {
        Matrix li = h.left_mult_matrix(vec_unit(f, n, i));
        Matrix ri = h.right_mult_matrix(vec_unit(f, n, i));
        Matrix eps_id = Matrix::identity(f, n).scaled(h.counit()[i]);
        sys = Matrix::hstack(sys, Matrix::hstack(li - eps_id, ri - eps_id));
    }
    Subspace sol = left_kernel(sys);
    if (sol.dim() != 1)
        throw InvalidInputError(h.name() + ": two-sided integral space has dimension " +
                                std::to_string(sol.dim()) + ", expected 1");
    Vec lam = sol.basis().row(0);
    FieldElem e = h.counit_of(lam);
    if (e.is_zero())
        throw NotSemisimpleError(h.name() + ": eps(integral) = 0, algebra is not semisimple");
    lam = vec_scale(lam, e.inverse());
    if (h.multiply(lam, lam) != lam)
        throw InvalidInputError(h.name() + ": normalized integral is not idempotent");
    return lam;
}

struct HopfMorphism {
    const HopfAlgebraData* source = nullptr;
    const HopfAlgebraData* target = nullptr;
    Matrix matrix; // dim(source) x dim(target); row i = image of source b_i
};

// Certifies that the matrix intertwines all five structure maps; returns the
// first violated condition, or nullopt when the map is a Hopf morphism.
inline std::optional<std::string> morphism_violation(const HopfAlgebraData& a,
                                                     const HopfAlgebraData& b,
                                                     const Matrix& m) {
    if (m.rows() != a.dim() || m.cols() != b.dim()) return "shape mismatch";
    const CycloField* f = a.field();
    const size_t n = a.dim();
    if (a.unit() * m != b.unit()) return "f(1) != 1";
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Vec lhs = a.basis_product(i, j) * m;
            Vec rhs = b.multiply(m.row(i), m.row(j));
            if (lhs != rhs)
                return "f(b" + std::to_string(i) + " b" + std::to_string(j) +
                       ") != f(b" + std::to_string(i) + ") f(b" + std::to_string(j) + ")";
        }
    for (size_t i = 0; i < n; ++i) {
        if (a.counit_of(vec_unit(f, n, i)) != b.counit_of(m.row(i)))
            return "eps(f(b" + std::to_string(i) + ")) != eps(b" + std::to_string(i) + ")";
    }
    for (size_t i = 0; i < n; ++i) {
        // (f (x) f)(Delta_A(b_i)) vs Delta_B(f(b_i))
        Matrix da = a.comult()[i];
        Matrix lhs(f, b.dim(), b.dim());
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                const FieldElem& c = da.at(j, k);
                if (c.is_zero()) continue;
                for (size_t p = 0; p < b.dim(); ++p) {
                    const FieldElem& mp = m.at(j, p);
                    if (mp.is_zero()) continue;
                    FieldElem cf = c * mp;
                    for (size_t q = 0; q < b.dim(); ++q) {
                        const FieldElem& mq = m.at(k, q);
                        if (!mq.is_zero()) lhs.at(p, q) += cf * mq;
                    }
                }
            }
        if (lhs != b.comult_of(m.row(i)))
            return "Delta(f(b" + std::to_string(i) + ")) != (f(x)f)(Delta(b" +
                   std::to_string(i) + "))";
    }
    for (size_t i = 0; i < n; ++i) {
        if (a.antipode().row(i) * m != b.antipode_of(m.row(i)))
            return "S(f(b" + std::to_string(i) + ")) != f(S(b" + std::to_string(i) + "))";
    }
    return std::nullopt;
}

inline HopfMorphism morphism_check(const HopfAlgebraData& a, const HopfAlgebraData& b,
                                   Matrix m) {
    if (auto v = morphism_violation(a, b, m))
        throw InvalidInputError("not a Hopf algebra map: " + *v);
    return HopfMorphism{&a, &b, std::move(m)};
}

} // namespace hopfkern
