#pragma once

// Subcoalgebra and Hopf-subalgebra machinery: exact closure fixpoints,
// normality via both adjoint actions, Hopf ideals, and quotient Hopf algebras
// with canonical projection/section.

#include <memory>
#include <string>
#include <vector>

#include "hopfkern/hopf.hpp"

namespace hopfkern {

// span{ v (x) w : v in V, w in W } inside H (x) H (ambient n^2)
inline Subspace tensor_product_space(const Subspace& v, const Subspace& w) {
    const CycloField* f = v.field() ? v.field() : w.field();
    size_t n = v.ambient_dim();
    std::vector<Vec> rows;
    rows.reserve(v.dim() * w.dim());
    for (size_t a = 0; a < v.dim(); ++a)
        for (size_t b = 0; b < w.dim(); ++b) {
            Vec t = vec_zero(f, n * n);
            for (size_t j = 0; j < n; ++j) {
                const FieldElem& vj = v.basis().at(a, j);
                if (vj.is_zero()) continue;
                for (size_t k = 0; k < n; ++k) {
                    const FieldElem& wk = w.basis().at(b, k);
                    if (!wk.is_zero()) t[j * n + k] = vj * wk;
                }
            }
            rows.push_back(std::move(t));
        }
    return Subspace::from_rows(f, rows, n * n);
}

inline bool is_subcoalgebra(const HopfAlgebraData& h, const Subspace& v) {
    Subspace vv = tensor_product_space(v, v);
    for (size_t a = 0; a < v.dim(); ++a)
        if (!vv.contains(h.comult_vec(v.basis().row(a)))) return false;
    return true;
}

inline bool is_subalgebra_space(const HopfAlgebraData& h, const Subspace& v) {
    for (size_t a = 0; a < v.dim(); ++a)
        for (size_t b = 0; b < v.dim(); ++b)
            if (!v.contains(h.multiply(v.basis().row(a), v.basis().row(b)))) return false;
    return true;
}

inline bool is_antipode_stable(const HopfAlgebraData& h, const Subspace& v) {
    for (size_t a = 0; a < v.dim(); ++a)
        if (!v.contains(h.antipode_of(v.basis().row(a)))) return false;
    return true;
}

// sum over Delta(b_i) of b_j * w * S(b_k)
inline Vec adjoint_left(const HopfAlgebraData& h, size_t i, const Vec& w) {
    const CycloField* f = h.field();
    size_t n = h.dim();
    Vec r = vec_zero(f, n);
    const Matrix& ci = h.comult()[i];
    for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k) {
            const FieldElem& c = ci.at(j, k);
            if (c.is_zero()) continue;
            Vec t = h.multiply(h.multiply(vec_unit(f, n, j), w), h.antipode().row(k));
            for (size_t p = 0; p < n; ++p)
                if (!t[p].is_zero()) r[p] += c * t[p];
        }
    return r;
}

// sum over Delta(b_i) of S(b_j) * w * b_k
inline Vec adjoint_right(const HopfAlgebraData& h, size_t i, const Vec& w) {
    const CycloField* f = h.field();
    size_t n = h.dim();
    Vec r = vec_zero(f, n);
    const Matrix& ci = h.comult()[i];
    for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k) {
            const FieldElem& c = ci.at(j, k);
            if (c.is_zero()) continue;
            Vec t = h.multiply(h.multiply(h.antipode().row(j), w), vec_unit(f, n, k));
            for (size_t p = 0; p < n; ++p)
                if (!t[p].is_zero()) r[p] += c * t[p];
        }
    return r;
}

// stability of v under both adjoint actions, the normality condition for
// Hopf subalgebras (with S^2 = id the two sides agree; both are checked)
inline bool is_adjoint_stable(const HopfAlgebraData& h, const Subspace& v) {
    for (size_t i = 0; i < h.dim(); ++i)
        for (size_t a = 0; a < v.dim(); ++a) {
            Vec w = v.basis().row(a);
            if (!v.contains(adjoint_left(h, i, w))) return false;
            if (!v.contains(adjoint_right(h, i, w))) return false;
        }
    return true;
}

struct HopfSubalgebraHandle {
    const HopfAlgebraData* parent = nullptr;
    Subspace space;
    bool is_subalgebra = false;
    bool is_subcoalgebra = false;
    bool contains_unit = false;
    bool antipode_stable = false;
    bool is_normal = false;

    size_t dim() const { return space.dim(); }
    bool is_hopf_subalgebra() const {
        return is_subalgebra && is_subcoalgebra && contains_unit && antipode_stable;
    }
};

// compute every flag by the corresponding exact closure check
inline HopfSubalgebraHandle certify_subalgebra(const HopfAlgebraData& h, Subspace space) {
    HopfSubalgebraHandle k;
    k.parent = &h;
    k.is_subalgebra = is_subalgebra_space(h, space);
    k.is_subcoalgebra = is_subcoalgebra(h, space);
    k.contains_unit = space.contains(h.unit());
    k.antipode_stable = is_antipode_stable(h, space);
    k.is_normal = k.is_hopf_subalgebra() && is_adjoint_stable(h, space);
    k.space = std::move(space);
    return k;
}

inline bool is_normal(const HopfAlgebraData& h, const HopfSubalgebraHandle& k) {
    if (!k.is_hopf_subalgebra())
        throw InvalidInputError("normality test requires a certified Hopf subalgebra");
    return is_adjoint_stable(h, k.space);
}

// Greatest fixpoint of D -> { x in D : Delta(x) in D (x) D }: the largest
// subcoalgebra contained in v.
inline Subspace largest_subcoalgebra_in(const HopfAlgebraData& h, const Subspace& v) {
    const CycloField* f = h.field();
    Subspace d = v;
    for (size_t round = 0; round <= h.dim() + 1; ++round) {
        if (d.is_zero()) return d;
        Subspace dd = tensor_product_space(d, d);
        // rows: residuals of Delta(basis) modulo D(x)D; kernel = surviving combos
        Matrix resid(f, d.dim(), h.dim() * h.dim());
        for (size_t a = 0; a < d.dim(); ++a)
            resid.set_row(a, dd.reduce(h.comult_vec(d.basis().row(a))));
        Subspace keep = left_kernel(resid);
        if (keep.dim() == d.dim()) return d; // fixpoint
        std::vector<Vec> rows;
        for (size_t t = 0; t < keep.dim(); ++t)
            rows.push_back(keep.basis().row(t) * d.basis());
        d = Subspace::from_rows(f, rows, h.dim());
    }
    throw std::logic_error("largest_subcoalgebra_in: fixpoint failed to terminate");
}

enum class ClosureMode { hopf, normal_hopf };

// Least fixpoint of W -> W + span{1} + W*W + S(W) (+ both adjoint images of W
// in normal mode). Dimension strictly increases until stable, so at most
// dim(H) rounds are needed; exceeding the cap is a logic error.
inline HopfSubalgebraHandle closure(const HopfAlgebraData& h, const Subspace& v,
                                    ClosureMode mode) {
    const CycloField* f = h.field();
    size_t n = h.dim();
    std::vector<Vec> seed;
    for (size_t a = 0; a < v.dim(); ++a) seed.push_back(v.basis().row(a));
    seed.push_back(h.unit());
    Subspace w = Subspace::from_rows(f, seed, n);
    for (size_t round = 0; round <= n + 1; ++round) {
        std::vector<Vec> rows;
        for (size_t a = 0; a < w.dim(); ++a) rows.push_back(w.basis().row(a));
        for (size_t a = 0; a < w.dim(); ++a) {
            Vec wa = w.basis().row(a);
            rows.push_back(h.antipode_of(wa));
            for (size_t b = 0; b < w.dim(); ++b)
                rows.push_back(h.multiply(wa, w.basis().row(b)));
            if (mode == ClosureMode::normal_hopf) {
                for (size_t i = 0; i < n; ++i) {
                    rows.push_back(adjoint_left(h, i, wa));
                    rows.push_back(adjoint_right(h, i, wa));
                }
            }
        }
        Subspace next = Subspace::from_rows(f, rows, n);
        if (next.dim() == w.dim()) return certify_subalgebra(h, next);
        w = std::move(next);
    }
    throw std::logic_error("closure: fixpoint failed to terminate");
}

struct HopfIdealCheck {
    bool left_ideal = false;
    bool right_ideal = false;
    bool coideal = false;      // Delta(I) in I(x)H + H(x)I
    bool antipode_stable = false;
    bool counit_zero = false;

    bool ok() const {
        return left_ideal && right_ideal && coideal && antipode_stable && counit_zero;
    }

    std::string violation() const {
        std::string out;
        auto note = [&](bool flag, const char* name) {
            if (!flag) out += (out.empty() ? "" : ", ") + std::string(name);
        };
        note(left_ideal, "not a left ideal");
        note(right_ideal, "not a right ideal");
        note(coideal, "not a coideal");
        note(antipode_stable, "not antipode-stable");
        note(counit_zero, "counit does not vanish");
        return out;
    }
};

inline HopfIdealCheck check_hopf_ideal(const HopfAlgebraData& h, const Subspace& ideal) {
    const CycloField* f = h.field();
    size_t n = h.dim();
    HopfIdealCheck c;
    c.left_ideal = c.right_ideal = c.coideal = c.antipode_stable = c.counit_zero = true;
    // I(x)H + H(x)I
    std::vector<Vec> mixed;
    for (size_t a = 0; a < ideal.dim(); ++a) {
        Vec w = ideal.basis().row(a);
        for (size_t j = 0; j < n; ++j) {
            Vec t1 = vec_zero(f, n * n), t2 = vec_zero(f, n * n);
            for (size_t p = 0; p < n; ++p) {
                if (w[p].is_zero()) continue;
                t1[p * n + j] = w[p];
                t2[j * n + p] = w[p];
            }
            mixed.push_back(std::move(t1));
            mixed.push_back(std::move(t2));
        }
    }
    Subspace mixed_space = Subspace::from_rows(f, mixed, n * n);
    for (size_t a = 0; a < ideal.dim(); ++a) {
        Vec w = ideal.basis().row(a);
        for (size_t i = 0; i < n; ++i) {
            if (c.left_ideal && !ideal.contains(h.multiply(vec_unit(f, n, i), w)))
                c.left_ideal = false;
            if (c.right_ideal && !ideal.contains(h.multiply(w, vec_unit(f, n, i))))
                c.right_ideal = false;
        }
        if (c.coideal && !mixed_space.contains(h.comult_vec(w))) c.coideal = false;
        if (c.antipode_stable && !ideal.contains(h.antipode_of(w))) c.antipode_stable = false;
        if (c.counit_zero && !h.counit_of(w).is_zero()) c.counit_zero = false;
    }
    return c;
}

struct QuotientData {
    const HopfAlgebraData* parent = nullptr;
    Subspace ideal;
    std::shared_ptr<const HopfAlgebraData> quotient;
    Matrix projection; // dim(H) x dim(Q)
    Matrix section;    // dim(Q) x dim(H), projection(section) = id
};

// Quotient by a verified Hopf ideal. The quotient basis is the set of
// non-pivot coordinates of the echelonized ideal, which makes the whole
// construction canonical.
inline QuotientData quotient_by_ideal(const HopfAlgebraData& h, const Subspace& ideal,
                                      std::string name = "") {
    HopfIdealCheck chk = check_hopf_ideal(h, ideal);
    if (!chk.ok())
        throw InvalidInputError(h.name() + ": not a Hopf ideal: " + chk.violation());

    const CycloField* f = h.field();
    size_t n = h.dim();
    std::vector<bool> is_pivot(n, false);
    for (size_t p : ideal.pivots()) is_pivot[p] = true;
    std::vector<size_t> keep;
    for (size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) keep.push_back(j);
    size_t m = keep.size();

    auto restrict_vec = [&](const Vec& x) {
        Vec r;
        r.reserve(m);
        for (size_t q : keep) r.push_back(x[q]);
        return r;
    };

    Matrix projection(f, n, m);
    for (size_t i = 0; i < n; ++i)
        projection.set_row(i, restrict_vec(ideal.reduce(vec_unit(f, n, i))));
    Matrix section(f, m, n);
    for (size_t q = 0; q < m; ++q) section.at(q, keep[q]) = FieldElem::one(f);

    std::vector<Matrix> mult(m, Matrix(f, m, m));
    std::vector<Matrix> comult(m, Matrix(f, m, m));
    Matrix antipode(f, m, m);
    for (size_t a = 0; a < m; ++a) {
        for (size_t b = 0; b < m; ++b) {
            Vec prod = h.multiply(vec_unit(f, n, keep[a]), vec_unit(f, n, keep[b]));
            mult[a].set_row(b, prod * projection);
        }
        Matrix w = h.comult()[keep[a]];
        Matrix down = projection.transpose() * w * projection;
        comult[a] = std::move(down);
        antipode.set_row(a, h.antipode().row(keep[a]) * projection);
    }
    Vec unit = h.unit() * projection;
    Vec counit;
    for (size_t q : keep) counit.push_back(h.counit()[q]);

    if (name.empty()) name = h.name() + "/I" + std::to_string(ideal.dim());
    auto q = std::make_shared<const HopfAlgebraData>(
        h.field_owner(), name, m, std::move(mult), std::move(unit), std::move(comult),
        std::move(counit), std::move(antipode));

    // the construction is exact: any failure here is an upstream bug
    AxiomReport rep = verify_hopf(*q);
    if (!rep.all_pass())
        throw std::logic_error(h.name() + ": induced quotient structure ill-defined:\n" +
                               rep.summary());
    if (auto v = morphism_violation(h, *q, projection))
        throw std::logic_error(h.name() + ": quotient projection is not a Hopf map: " + *v);
    if (section * projection != Matrix::identity(f, m))
        throw std::logic_error(h.name() + ": projection(section) != id");

    QuotientData out;
    out.parent = &h;
    out.ideal = ideal;
    out.quotient = std::move(q);
    out.projection = std::move(projection);
    out.section = std::move(section);
    return out;
}

// The idempotent integral of a Hopf subalgebra, solved inside the subalgebra:
// the unique x in K with k x = x k = eps(k) x for all k in K and eps(x) = 1.
inline Vec subalgebra_integral(const HopfAlgebraData& h, const Subspace& k) {
    const CycloField* f = h.field();
    size_t r = k.dim();
    Matrix sys(f, r, 0);
    for (size_t a = 0; a < r; ++a) {
        Vec ka = k.basis().row(a);
        FieldElem eps = h.counit_of(ka);
        Matrix left(f, r, r), right(f, r, r);
        for (size_t b = 0; b < r; ++b) {
            Vec kb = k.basis().row(b);
            left.set_row(b, k.coordinates_of(h.multiply(ka, kb)));
            right.set_row(b, k.coordinates_of(h.multiply(kb, ka)));
        }
        Matrix eps_id = Matrix::identity(f, r).scaled(eps);
        sys = Matrix::hstack(sys, Matrix::hstack(left - eps_id, right - eps_id));
    }
    Subspace sol = left_kernel(sys);
    if (sol.dim() != 1)
        throw InvalidInputError(h.name() + ": subalgebra integral space has dimension " +
                                std::to_string(sol.dim()));
    Vec lam = sol.basis().row(0) * k.basis();
    FieldElem e = h.counit_of(lam);
    if (e.is_zero())
        throw NotSemisimpleError(h.name() + ": subalgebra integral has vanishing counit");
    return vec_scale(lam, e.inverse());
}

// K+ = K intersect ker(eps), the augmentation ideal of a Hopf subalgebra
inline Subspace augmentation_ideal(const HopfAlgebraData& h, const Subspace& k) {
    Matrix eps_col(h.field(), h.dim(), 1);
    for (size_t i = 0; i < h.dim(); ++i) eps_col.at(i, 0) = h.counit()[i];
    return Subspace::intersect(k, left_kernel(eps_col));
}

// H * K+ for a normal Hopf subalgebra K; equality with K+ * H is asserted
// rather than assumed.
inline QuotientData quotient_by_subalgebra(const HopfAlgebraData& h,
                                           const HopfSubalgebraHandle& k) {
    if (!k.is_hopf_subalgebra())
        throw InvalidInputError(h.name() + ": quotient requires a Hopf subalgebra");
    if (!k.is_normal)
        throw InvalidInputError(h.name() + ": quotient requires a normal Hopf subalgebra");
    const CycloField* f = h.field();
    size_t n = h.dim();
    Subspace kplus = augmentation_ideal(h, k.space);
    std::vector<Vec> left_rows, right_rows;
    for (size_t i = 0; i < n; ++i)
        for (size_t a = 0; a < kplus.dim(); ++a) {
            Vec w = kplus.basis().row(a);
            left_rows.push_back(h.multiply(vec_unit(f, n, i), w));
            right_rows.push_back(h.multiply(w, vec_unit(f, n, i)));
        }
    Subspace ideal = Subspace::from_rows(f, left_rows, n);
    if (ideal != Subspace::from_rows(f, right_rows, n))
        throw std::logic_error(h.name() + ": H*K+ != K+*H for a normal K");
    QuotientData q = quotient_by_ideal(h, ideal,
                                       h.name() + "//K" + std::to_string(k.dim()));
    if (q.quotient->dim() * k.dim() != n)
        throw InvalidInputError(h.name() + ": dim(H//K) * dim(K) != dim(H)");
    return q;
}

} // namespace hopfkern
