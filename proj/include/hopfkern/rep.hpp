#pragma once

// Semisimple decomposition over an exact cyclotomic field: center, central
// primitive idempotents, irreducible characters of the algebra and of its
// dual, character arithmetic, and the Fourier-type isomorphism H* -> H given
// by pairing against the integral.
//
// Eigenvalues are LOCATED numerically and RECONSTRUCTED exactly; every split
// is then certified by an exact kernel computation, so no floating-point value
// can reach a result.

#include <algorithm>
#include <string>
#include <vector>

#include "hopfkern/hopf.hpp"
#include "hopfkern/numeric.hpp"

namespace hopfkern {

struct Character {
    const HopfAlgebraData* algebra = nullptr;
    Vec values;         // chi(b_i)
    FieldElem degree;   // chi(1)

    static Character from_values(const HopfAlgebraData& h, Vec values) {
        Character c;
        c.algebra = &h;
        c.degree = vec_dot(values, h.unit());
        c.values = std::move(values);
        return c;
    }
};

// evaluation of a character at an element given by coordinates
inline FieldElem char_eval(const Character& chi, const Vec& d) {
    return vec_dot(d, chi.values);
}

struct IrrBlock {
    Vec idempotent;       // central primitive idempotent
    size_t block_dim = 0; // dim of H * idempotent (= degree^2 over a splitting field)
    long degree = 0;
    Character character;
    Subspace block_space; // echelon basis of H * idempotent
};

struct IrrData {
    const HopfAlgebraData* algebra = nullptr;
    std::vector<IrrBlock> blocks;

    size_t size() const { return blocks.size(); }
    const Character& chi(size_t i) const { return blocks[i].character; }
};

inline Subspace center(const HopfAlgebraData& h) {
    const CycloField* f = h.field();
    size_t n = h.dim();
    Matrix sys(f, n, 0);
    for (size_t i = 0; i < n; ++i) {
        Matrix diff = h.right_mult_matrix(vec_unit(f, n, i)) -
                      h.left_mult_matrix(vec_unit(f, n, i));
        if (!diff.is_zero()) sys = Matrix::hstack(sys, diff);
    }
    if (sys.cols() == 0) return Subspace::full(f, n);
    return left_kernel(sys);
}

// Splits the center into one-dimensional joint eigenspaces of the
// multiplication operators and normalizes each to an idempotent. All returned
// idempotents are certified exactly.
inline std::vector<Vec> central_primitive_idempotents(const HopfAlgebraData& h) {
    const CycloField* f = h.field();
    size_t n = h.dim();
    Subspace z = center(h);
    size_t c = z.dim();
    BigInt denom_bound = BigInt(n) * BigInt(h.field()->order()) * BigInt(h.field()->order());

    // multiplication action of each center basis vector, in center coordinates
    std::vector<Matrix> acts;
    for (size_t a = 0; a < c; ++a) {
        Matrix act(f, c, c);
        for (size_t b = 0; b < c; ++b)
            act.set_row(b, z.coordinates_of(h.multiply(z.basis().row(b), z.basis().row(a))));
        acts.push_back(std::move(act));
    }

    std::vector<Subspace> pieces = {Subspace::full(f, c)};
    for (size_t a = 0; a < c; ++a) {
        std::vector<Subspace> next;
        for (const Subspace& piece : pieces) {
            if (piece.dim() <= 1) {
                next.push_back(piece);
                continue;
            }
            // restrict the action to the invariant piece
            size_t d = piece.dim();
            Matrix restr(f, d, d);
            for (size_t t = 0; t < d; ++t)
                restr.set_row(t, piece.coordinates_of(piece.basis().row(t) * acts[a]));
            std::vector<FieldElem> cands = field_eigenvalue_candidates(restr, denom_bound);
            size_t covered = 0;
            for (const FieldElem& lam : cands) {
                Matrix shifted = restr - Matrix::identity(f, d).scaled(lam);
                Subspace ker = left_kernel(shifted); // exact certification of lam
                if (ker.is_zero()) continue;
                covered += ker.dim();
                std::vector<Vec> rows;
                for (size_t t = 0; t < ker.dim(); ++t)
                    rows.push_back(ker.basis().row(t) * piece.basis());
                next.push_back(Subspace::from_rows(f, rows, c));
            }
            if (covered != d)
                throw FieldTooSmallError(
                    h.name() + ": center does not split over Q(zeta_" +
                    std::to_string(h.field()->order()) +
                    ") (candidate eigenvalues certified " + std::to_string(covered) + " of " +
                    std::to_string(d) + " dimensions; reconstruction denominators bounded by " +
                    denom_bound.to_string() + "); re-supply the algebra with larger N");
        }
        pieces = std::move(next);
    }
    for (const Subspace& piece : pieces)
        if (piece.dim() != 1)
            throw FieldTooSmallError(h.name() +
                                     ": central splitting stalled on a subspace of dimension " +
                                     std::to_string(piece.dim()) +
                                     "; re-supply the algebra with larger N");

    std::vector<Vec> idems;
    for (const Subspace& piece : pieces) {
        Vec u = piece.basis().row(0) * z.basis(); // ambient coordinates
        Vec usq = h.multiply(u, u);
        size_t j = 0;
        while (j < n && u[j].is_zero()) ++j;
        FieldElem mu = usq[j] / u[j];
        if (mu.is_zero())
            throw NotSemisimpleError(h.name() + ": central eigenvector squares to zero");
        if (usq != vec_scale(u, mu))
            throw std::logic_error(h.name() + ": eigenvector square not proportional");
        idems.push_back(vec_scale(u, mu.inverse()));
    }

    // exact certification of the full system
    Vec sum = vec_zero(f, n);
    for (const Vec& e : idems) sum = vec_add(sum, e);
    if (sum != h.unit()) throw std::logic_error(h.name() + ": idempotents do not sum to 1");
    for (size_t i = 0; i < idems.size(); ++i)
        for (size_t j = 0; j < idems.size(); ++j) {
            Vec p = h.multiply(idems[i], idems[j]);
            if (i == j ? p != idems[i] : !vec_is_zero(p))
                throw std::logic_error(h.name() + ": idempotent orthogonality failed");
        }
    return idems;
}

// Full irreducible data: block spaces, integer degrees (square roots of block
// dimensions) and characters chi = trace on the block / degree. Blocks are
// sorted by (degree, character values) so results are deterministic.
inline IrrData irr_characters(const HopfAlgebraData& h) {
    const CycloField* f = h.field();
    size_t n = h.dim();
    IrrData irr;
    irr.algebra = &h;
    for (const Vec& xi : central_primitive_idempotents(h)) {
        IrrBlock blk;
        blk.idempotent = xi;
        blk.block_space = row_space(h.right_mult_matrix(xi));
        blk.block_dim = blk.block_space.dim();
        BigInt deg;
        try {
            deg = BigInt::isqrt_exact(BigInt(blk.block_dim));
        } catch (const std::domain_error&) {
            throw FieldTooSmallError(h.name() + ": block dimension " +
                                     std::to_string(blk.block_dim) +
                                     " is not a perfect square, so Q(zeta_" +
                                     std::to_string(f->order()) +
                                     ") is not a splitting field; re-supply with larger N");
        }
        blk.degree = deg.to_slonglong();
        // chi(b_i) = trace of left multiplication on the block, divided by degree
        Vec values = vec_zero(f, n);
        FieldElem degree_inv = FieldElem::from_int(f, blk.degree).inverse();
        for (size_t i = 0; i < n; ++i) {
            FieldElem tr = FieldElem::zero(f);
            for (size_t t = 0; t < blk.block_dim; ++t) {
                Vec img = h.multiply(vec_unit(f, n, i), blk.block_space.basis().row(t));
                tr += blk.block_space.coordinates_of(img)[t];
            }
            values[i] = tr * degree_inv;
        }
        blk.character = Character::from_values(h, std::move(values));
        irr.blocks.push_back(std::move(blk));
    }
    std::sort(irr.blocks.begin(), irr.blocks.end(), [](const IrrBlock& a, const IrrBlock& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        for (size_t i = 0; i < a.character.values.size(); ++i) {
            std::string sa = a.character.values[i].to_string();
            std::string sb = b.character.values[i].to_string();
            if (sa != sb) return sa < sb;
        }
        return false;
    });

    // Wedderburn consistency
    size_t total = 0;
    long degsq = 0;
    for (const IrrBlock& b : irr.blocks) {
        total += b.block_dim;
        degsq += b.degree * b.degree;
    }
    if (total != n || static_cast<size_t>(degsq) != n)
        throw std::logic_error(h.name() + ": block dimensions do not sum to dim H");
    for (size_t i = 0; i < irr.size(); ++i)
        for (size_t j = 0; j < irr.size(); ++j) {
            FieldElem v = char_eval(irr.chi(i), irr.blocks[j].idempotent);
            FieldElem expect = i == j ? FieldElem::from_int(f, irr.blocks[i].degree)
                                      : FieldElem::zero(f);
            if (v != expect)
                throw std::logic_error(h.name() + ": chi_i(xi_j) != degree * delta_ij");
        }
    return irr;
}

// Irr(H*) with each character realized, via the canonical identification
// (H*)* = H, as an element vector of H: the value of d at the dual basis
// vector b^i is exactly the i-th coordinate of d as an element of H.
inline IrrData irr_cocharacters(const HopfAlgebraData& hdual) {
    return irr_characters(hdual);
}

inline Character char_product(const Character& a, const Character& b) {
    const HopfAlgebraData& h = *a.algebra;
    Vec values = vec_zero(h.field(), h.dim());
    for (size_t k = 0; k < h.dim(); ++k) {
        const Matrix& ck = h.comult()[k];
        FieldElem s = h.zero_scalar();
        for (size_t j = 0; j < h.dim(); ++j) {
            if (a.values[j].is_zero()) continue;
            for (size_t l = 0; l < h.dim(); ++l) {
                const FieldElem& c = ck.at(j, l);
                if (!c.is_zero() && !b.values[l].is_zero()) s += c * (a.values[j] * b.values[l]);
            }
        }
        values[k] = s;
    }
    return Character::from_values(h, std::move(values));
}

inline Character char_star(const Character& a) {
    const HopfAlgebraData& h = *a.algebra;
    Vec values = vec_zero(h.field(), h.dim());
    for (size_t i = 0; i < h.dim(); ++i) values[i] = vec_dot(h.antipode().row(i), a.values);
    return Character::from_values(h, std::move(values));
}

inline Character char_sum(const Character& a, const Character& b) {
    return Character::from_values(*a.algebra, vec_add(a.values, b.values));
}

inline Character char_power(const Character& a, size_t e) {
    Character r = Character::from_values(*a.algebra, a.algebra->counit()); // trivial character
    Character base = a;
    for (size_t k = 0; k < e; ++k) r = char_product(r, base);
    return r;
}

// Multiplicities of c in the irreducible basis; all must be nonnegative
// integers or the input was not a genuine character.
inline std::vector<long> decompose(const Character& c, const IrrData& irr) {
    const CycloField* f = c.algebra->field();
    std::vector<Vec> rows;
    for (const IrrBlock& b : irr.blocks) rows.push_back(b.character.values);
    Matrix basis = Matrix::from_rows(f, rows, c.algebra->dim());
    auto sol = solve_right(basis, Matrix::row_vector(c.values));
    if (!sol)
        throw InvalidInputError(c.algebra->name() +
                                ": functional is not in the span of the irreducible characters");
    std::vector<long> mult;
    for (size_t i = 0; i < irr.size(); ++i) {
        const FieldElem& m = sol->at(0, i);
        if (!m.is_rational() || !m.rational_value().is_integer() || m.rational_value().sign() < 0)
            throw InvalidInputError(c.algebra->name() +
                                    ": multiplicity " + m.to_string() +
                                    " is not a nonnegative integer; not a character");
        mult.push_back(m.rational_value().num().to_slonglong());
    }
    return mult;
}

inline Character regular_character(const HopfAlgebraData& h) {
    Vec values = vec_zero(h.field(), h.dim());
    for (size_t i = 0; i < h.dim(); ++i) {
        FieldElem tr = h.zero_scalar();
        for (size_t j = 0; j < h.dim(); ++j) tr += h.mult()[i].at(j, j);
        values[i] = tr;
    }
    return Character::from_values(h, std::move(values));
}

struct Representation {
    const HopfAlgebraData* algebra = nullptr;
    size_t module_dim = 0;
    // action of each basis element on COLUMN vectors, so that
    // rho(b_i) rho(b_j) = rho(b_i b_j) as ordinary matrix products
    std::vector<Matrix> matrices;
};

inline bool is_representation(const Representation& r) {
    const HopfAlgebraData& h = *r.algebra;
    const CycloField* f = h.field();
    Matrix rho_unit(f, r.module_dim, r.module_dim);
    for (size_t i = 0; i < h.dim(); ++i)
        if (!h.unit()[i].is_zero()) rho_unit = rho_unit + r.matrices[i].scaled(h.unit()[i]);
    if (rho_unit != Matrix::identity(f, r.module_dim)) return false;
    for (size_t i = 0; i < h.dim(); ++i)
        for (size_t j = 0; j < h.dim(); ++j) {
            Matrix expect(f, r.module_dim, r.module_dim);
            Vec prod = h.basis_product(i, j);
            for (size_t k = 0; k < h.dim(); ++k)
                if (!prod[k].is_zero()) expect = expect + r.matrices[k].scaled(prod[k]);
            if (r.matrices[i] * r.matrices[j] != expect) return false;
        }
    return true;
}

// The left module H * xi in its echelon basis. The block carries degree many
// copies of the simple module, which is exactly what the trivial-action tests
// need.
inline Representation rep_from_block(const HopfAlgebraData& h, const IrrData& irr,
                                     size_t block_index) {
    const IrrBlock& blk = irr.blocks[block_index];
    Representation r;
    r.algebra = &h;
    r.module_dim = blk.block_dim;
    for (size_t i = 0; i < h.dim(); ++i) {
        Matrix m(h.field(), blk.block_dim, blk.block_dim);
        for (size_t t = 0; t < blk.block_dim; ++t) {
            Vec img = h.multiply(vec_unit(h.field(), h.dim(), i), blk.block_space.basis().row(t));
            m.set_row(t, blk.block_space.coordinates_of(img));
        }
        r.matrices.push_back(m.transpose()); // column action: rho(ab) = rho(a) rho(b)
    }
    return r;
}

// Character of H acting on H / (H * K+) for a Hopf subalgebra K: the trace of
// the induced left multiplication on the quotient space.
inline Character induced_trivial_character(const HopfAlgebraData& h, const Subspace& k_space) {
    const CycloField* f = h.field();
    size_t n = h.dim();
    // K+ = K intersect ker eps
    Matrix eps_col(f, n, 1);
    for (size_t i = 0; i < n; ++i) eps_col.at(i, 0) = h.counit()[i];
    Subspace kplus = Subspace::intersect(k_space, left_kernel(eps_col));
    std::vector<Vec> rows;
    for (size_t i = 0; i < n; ++i)
        for (size_t a = 0; a < kplus.dim(); ++a)
            rows.push_back(h.multiply(vec_unit(f, n, i), kplus.basis().row(a)));
    Subspace j = Subspace::from_rows(f, rows, n); // left ideal H*K+
    std::vector<bool> is_pivot(n, false);
    for (size_t p : j.pivots()) is_pivot[p] = true;
    std::vector<size_t> keep;
    for (size_t q = 0; q < n; ++q)
        if (!is_pivot[q]) keep.push_back(q);
    Vec values = vec_zero(f, n);
    for (size_t i = 0; i < n; ++i) {
        FieldElem tr = h.zero_scalar();
        for (size_t t = 0; t < keep.size(); ++t) {
            Vec img = j.reduce(h.multiply(vec_unit(f, n, i), vec_unit(f, n, keep[t])));
            tr += img[keep[t]];
        }
        values[i] = tr;
    }
    return Character::from_values(h, std::move(values));
}

// phi : H* -> H, f -> f(S(Lambda_1)) Lambda_2, as a matrix acting on row
// vectors. A singular phi signals non-semisimple input upstream.
inline Matrix phi_matrix(const HopfAlgebraData& h, const Vec& lambda) {
    Matrix w = h.comult_of(lambda);
    Matrix m = h.antipode().transpose() * w;
    if (rank(m) != h.dim())
        throw NotSemisimpleError(h.name() + ": integral pairing map is singular");
    return m;
}

inline Vec phi_apply(const Matrix& phi, const Vec& functional) { return functional * phi; }

// exact solve against phi; the matrix is invertible for verified input
inline Vec phi_inverse(const Matrix& phi, const Vec& element) {
    auto sol = solve_right(phi, Matrix::row_vector(element));
    if (!sol) throw NotSemisimpleError("integral pairing map is singular");
    return sol->row(0);
}

} // namespace hopfkern
