#pragma once

// Both kernel notions and the machinery connecting them: the set of
// cocharacters acting trivially on a module, the Hopf subalgebra it spans,
// the trivial-action subspace S_M with its largest-subcoalgebra oracle, the
// largest Hopf ideal inside an annihilator, the categorical Hopf kernel of a
// morphism, and the exact equality verifier tying them together.

#include <string>
#include <vector>

#include "hopfkern/context.hpp"
#include "hopfkern/subalgebra.hpp"

namespace hopfkern {

// ker(chi) = { d in Irr(H*) : chi(d) = eps(d) chi(1) }, as indices into the
// cocharacter list
inline std::vector<size_t> ker_set(const Character& chi, const IrrData& cochars) {
    std::vector<size_t> out;
    for (size_t j = 0; j < cochars.size(); ++j) {
        const Character& d = cochars.chi(j);
        if (char_eval(chi, d.values) == d.degree * chi.degree) out.push_back(j);
    }
    return out;
}

// index of the cocharacter whose element vector matches v, or npos
inline size_t find_cocharacter(const IrrData& cochars, const Vec& v) {
    for (size_t j = 0; j < cochars.size(); ++j)
        if (cochars.chi(j).values == v) return j;
    return static_cast<size_t>(-1);
}

// a kernel set is closed under the fusion product and under star; violation
// means an upstream computation is wrong
inline bool ker_set_is_closed(const AlgebraContext& ctx, const std::vector<size_t>& ker) {
    std::vector<bool> in(ctx.cochars.size(), false);
    for (size_t j : ker) in[j] = true;
    for (size_t a : ker) {
        // star
        Vec dstar = ctx.algebra().antipode_of(ctx.cochars.chi(a).values);
        size_t js = find_cocharacter(ctx.cochars, dstar);
        if (js == static_cast<size_t>(-1) || !in[js]) return false;
        for (size_t b : ker) {
            Character prod = char_product(ctx.cochars.chi(a), ctx.cochars.chi(b));
            std::vector<long> mult = decompose(prod, ctx.cochars);
            for (size_t j = 0; j < mult.size(); ++j)
                if (mult[j] > 0 && !in[j]) return false;
        }
    }
    return true;
}

// The simple subcoalgebra attached to a cocharacter: the image of
// x -> sum xi_d(x_1) x_2, of dimension eps(d)^2.
inline Subspace simple_subcoalgebra(const AlgebraContext& ctx, size_t j) {
    const HopfAlgebraData& h = ctx.algebra();
    const CycloField* f = h.field();
    size_t n = h.dim();
    const Vec& xi = ctx.cochars.blocks[j].idempotent; // functional on H
    Matrix p(f, n, n);
    for (size_t i = 0; i < n; ++i) {
        const Matrix& ci = h.comult()[i];
        Vec row = vec_zero(f, n);
        for (size_t k = 0; k < n; ++k) {
            if (xi[k].is_zero()) continue;
            for (size_t l = 0; l < n; ++l) {
                const FieldElem& c = ci.at(k, l);
                if (!c.is_zero()) row[l] += xi[k] * c;
            }
        }
        p.set_row(i, row);
    }
    Subspace img = row_space(p);
    long eps = ctx.cochars.blocks[j].degree;
    if (img.dim() != static_cast<size_t>(eps * eps))
        throw std::logic_error(h.name() + ": simple subcoalgebra has dimension " +
                               std::to_string(img.dim()) + ", expected " +
                               std::to_string(eps * eps));
    if (!is_subcoalgebra(h, img))
        throw std::logic_error(h.name() + ": cocharacter projector image is not a subcoalgebra");
    return img;
}

// H_chi: the span of the simple subcoalgebras of the kernel set, certified as
// a Hopf subalgebra of dimension sum eps(d)^2
inline HopfSubalgebraHandle kernel_subalgebra(const AlgebraContext& ctx,
                                              const std::vector<size_t>& ker) {
    const HopfAlgebraData& h = ctx.algebra();
    Subspace space = Subspace::zero(h.field(), h.dim());
    long expected = 0;
    for (size_t j : ker) {
        space = space + simple_subcoalgebra(ctx, j);
        long eps = ctx.cochars.blocks[j].degree;
        expected += eps * eps;
    }
    if (space.dim() != static_cast<size_t>(expected))
        throw std::logic_error(h.name() + ": kernel subalgebra dimension " +
                               std::to_string(space.dim()) + " != sum of eps(d)^2 = " +
                               std::to_string(expected));
    HopfSubalgebraHandle k = certify_subalgebra(h, space);
    if (!k.is_hopf_subalgebra())
        throw std::logic_error(h.name() + ": kernel span failed Hopf subalgebra certification");
    return k;
}

// S_M = { h : rho(h) m = eps(h) m for all m }
inline Subspace sm_space(const Representation& r) {
    const HopfAlgebraData& h = *r.algebra;
    const CycloField* f = h.field();
    size_t n = h.dim(), m = r.module_dim;
    Matrix sys(f, n, m * m);
    for (size_t i = 0; i < n; ++i) {
        Matrix diff = r.matrices[i] - Matrix::identity(f, m).scaled(h.counit()[i]);
        Vec flat;
        flat.reserve(m * m);
        for (size_t s = 0; s < m; ++s)
            for (size_t t = 0; t < m; ++t) flat.push_back(diff.at(s, t));
        sys.set_row(i, flat);
    }
    return left_kernel(sys);
}

// Ann(M) = { h : rho(h) = 0 }
inline Subspace annihilator(const Representation& r) {
    const HopfAlgebraData& h = *r.algebra;
    const CycloField* f = h.field();
    size_t n = h.dim(), m = r.module_dim;
    Matrix sys(f, n, m * m);
    for (size_t i = 0; i < n; ++i) {
        Vec flat;
        flat.reserve(m * m);
        for (size_t s = 0; s < m; ++s)
            for (size_t t = 0; t < m; ++t) flat.push_back(r.matrices[i].at(s, t));
        sys.set_row(i, flat);
    }
    return left_kernel(sys);
}

// The largest Hopf subalgebra inside S_M: the largest subcoalgebra, then
// verified to be product- and antipode-closed.
inline HopfSubalgebraHandle largest_hopf_in_sm(const AlgebraContext& ctx,
                                               const Representation& r) {
    const HopfAlgebraData& h = ctx.algebra();
    Subspace sm = sm_space(r);
    Subspace sub = largest_subcoalgebra_in(h, sm);
    return certify_subalgebra(h, sub);
}

// rho (x) rho_prev through the comultiplication: the action on M (x) M_prev
inline Representation tensor_step(const Representation& base, const Representation& prev) {
    const HopfAlgebraData& h = *base.algebra;
    const CycloField* f = h.field();
    size_t n = h.dim();
    Representation out;
    out.algebra = &h;
    out.module_dim = base.module_dim * prev.module_dim;
    for (size_t i = 0; i < n; ++i) {
        Matrix m(f, out.module_dim, out.module_dim);
        const Matrix& ci = h.comult()[i];
        for (size_t p = 0; p < n; ++p)
            for (size_t q = 0; q < n; ++q) {
                const FieldElem& c = ci.at(p, q);
                if (c.is_zero()) continue;
                m = m + Matrix::kron(base.matrices[p], prev.matrices[q]).scaled(c);
            }
        out.matrices.push_back(std::move(m));
    }
    return out;
}

// the one-dimensional trivial module: every basis element acts by its counit
inline Representation trivial_representation(const HopfAlgebraData& h) {
    Representation r;
    r.algebra = &h;
    r.module_dim = 1;
    for (size_t i = 0; i < h.dim(); ++i) {
        Matrix m(h.field(), 1, 1);
        m.at(0, 0) = h.counit()[i];
        r.matrices.push_back(std::move(m));
    }
    return r;
}

// I_M: the intersection of the annihilators of all tensor powers of M,
// starting from the trivial power (annihilator ker eps). The running
// intersection stabilizes after at most dim(H) steps; it is certified to be a
// Hopf ideal before use.
inline Subspace hopf_ideal_of_module(const AlgebraContext& ctx, const Representation& r) {
    const HopfAlgebraData& h = ctx.algebra();
    Subspace ideal = annihilator(trivial_representation(h)); // = ker eps
    Representation power = r;
    for (size_t k = 1; k <= h.dim() + 1; ++k) {
        if (ideal.is_zero()) break;
        Subspace next = Subspace::intersect(ideal, annihilator(power));
        if (next == ideal) break; // stabilized for one extra step
        ideal = std::move(next);
        if (k == h.dim() + 1)
            throw std::logic_error(h.name() + ": annihilator intersection failed to stabilize");
        power = tensor_step(r, power);
    }
    HopfIdealCheck chk = check_hopf_ideal(h, ideal);
    if (!chk.ok())
        throw std::logic_error(h.name() +
                               ": largest-annihilator intersection is not a Hopf ideal: " +
                               chk.violation());
    return ideal;
}

// HKer(f) = { a : a_1 (x) f(a_2) (x) a_3 = a_1 (x) 1 (x) a_2 }, one exact
// linear system over H (x) B (x) H; certified to be a Hopf subalgebra.
inline HopfSubalgebraHandle hopf_kernel(const HopfMorphism& f) {
    const HopfAlgebraData& h = *f.source;
    const HopfAlgebraData& b = *f.target;
    const CycloField* fl = h.field();
    size_t n = h.dim(), mb = b.dim();
    Matrix sys(fl, n, n * mb * n);
    for (size_t i = 0; i < n; ++i) {
        Vec row = vec_zero(fl, n * mb * n);
        const Matrix& ci = h.comult()[i];
        // (id (x) f (x) id) Delta^2(b_i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                const FieldElem& c1 = ci.at(j, k);
                if (c1.is_zero()) continue;
                const Matrix& cj = h.comult()[j];
                for (size_t p = 0; p < n; ++p)
                    for (size_t q = 0; q < n; ++q) {
                        const FieldElem& c2 = cj.at(p, q);
                        if (c2.is_zero()) continue;
                        FieldElem coeff = c1 * c2;
                        for (size_t s = 0; s < mb; ++s) {
                            const FieldElem& fq = f.matrix.at(q, s);
                            if (!fq.is_zero()) row[(p * mb + s) * n + k] += coeff * fq;
                        }
                    }
            }
        // minus a_1 (x) 1_B (x) a_2
        for (size_t p = 0; p < n; ++p)
            for (size_t k = 0; k < n; ++k) {
                const FieldElem& c = ci.at(p, k);
                if (c.is_zero()) continue;
                for (size_t s = 0; s < mb; ++s) {
                    const FieldElem& us = b.unit()[s];
                    if (!us.is_zero()) row[(p * mb + s) * n + k] -= c * us;
                }
            }
        sys.set_row(i, row);
    }
    Subspace space = left_kernel(sys);
    HopfSubalgebraHandle k = certify_subalgebra(h, space);
    if (!k.is_hopf_subalgebra())
        throw std::logic_error(h.name() + ": Hopf kernel failed subalgebra certification");
    return k;
}

struct KernelReport {
    size_t char_index = 0;          // index into Irr(H)
    std::vector<size_t> ker;        // indices into Irr(H*)
    bool ker_closed = false;        // fusion/star closure of the kernel set
    Subspace kernel_space;          // H_chi
    Subspace sm;                    // S_M for the block module
    Subspace hker;                  // HKer of the canonical projection
    size_t quotient_dim = 0;        // dim of H / I_M
    bool hopf_kernel_matches = false;    // H_chi = HKer(pi)
    bool sm_oracle_matches = false;      // H_chi = largest Hopf subalgebra in S_M
    bool quotient_module_matches = false;// H_chi = kernel of H/I_M as an H-module
    bool normal = false;
};

// Runs the whole pipeline for one irreducible character and records the three
// exact equalities. Inequality is recorded, never thrown.
inline KernelReport verify_kernel_theorems(const AlgebraContext& ctx, size_t chi_index) {
    const HopfAlgebraData& h = ctx.algebra();
    KernelReport rep;
    rep.char_index = chi_index;
    const Character& chi = ctx.irr.chi(chi_index);

    rep.ker = ker_set(chi, ctx.cochars);
    rep.ker_closed = ker_set_is_closed(ctx, rep.ker);
    HopfSubalgebraHandle hchi = kernel_subalgebra(ctx, rep.ker);
    rep.kernel_space = hchi.space;
    rep.normal = hchi.is_normal;

    Representation m = rep_from_block(h, ctx.irr, chi_index);
    rep.sm = sm_space(m);
    HopfSubalgebraHandle oracle = largest_hopf_in_sm(ctx, m);
    rep.sm_oracle_matches = oracle.is_hopf_subalgebra() && oracle.space == rep.kernel_space;

    Subspace ideal = hopf_ideal_of_module(ctx, m);
    QuotientData q = quotient_by_ideal(h, ideal);
    rep.quotient_dim = q.quotient->dim();
    HopfMorphism pi{&h, q.quotient.get(), q.projection};
    HopfSubalgebraHandle hker = hopf_kernel(pi);
    rep.hker = hker.space;
    rep.hopf_kernel_matches = rep.hker == rep.kernel_space;

    // the quotient as an H-module via pi: character = trace of left
    // multiplication by pi(b_i) on the quotient
    Vec values = vec_zero(h.field(), h.dim());
    for (size_t i = 0; i < h.dim(); ++i) {
        Vec img = q.projection.row(i);
        FieldElem tr = h.zero_scalar();
        const HopfAlgebraData& b = *q.quotient;
        for (size_t t = 0; t < b.dim(); ++t) {
            Vec prod = b.multiply(img, vec_unit(b.field(), b.dim(), t));
            tr += prod[t];
        }
        values[i] = tr;
    }
    Character chi_b = Character::from_values(h, std::move(values));
    std::vector<size_t> ker_b = ker_set(chi_b, ctx.cochars);
    HopfSubalgebraHandle hb = kernel_subalgebra(ctx, ker_b);
    rep.quotient_module_matches = hb.space == rep.kernel_space;

    return rep;
}

} // namespace hopfkern
