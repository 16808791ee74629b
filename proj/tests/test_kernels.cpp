#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "hopfkern/corpus.hpp"
#include "hopfkern/kernels.hpp"

using namespace hopfkern;

// S3 basis: 0:e, 1/2/5: transpositions, 3/4: 3-cycles
static std::set<size_t> ker_as_group_elements(const AlgebraContext& ctx,
                                              const std::vector<size_t>& ker) {
    std::set<size_t> out;
    for (size_t j : ker) {
        const Vec& v = ctx.cochars.chi(j).values;
        for (size_t i = 0; i < v.size(); ++i)
            if (v == vec_unit(ctx.algebra().field(), v.size(), i)) out.insert(i);
    }
    return out;
}

static size_t find_char_of_degree(const IrrData& irr, long degree, bool want_trivial,
                                  const Vec& counit) {
    for (size_t i = 0; i < irr.size(); ++i) {
        if (irr.blocks[i].degree != degree) continue;
        bool is_triv = irr.chi(i).values == counit;
        if (want_trivial == is_triv) return i;
    }
    REQUIRE(false);
    return 0;
}

// index of the sign character of S3: degree 1, value -1 at a transposition
static size_t s3_sign_index(const AlgebraContext& ctx) {
    for (size_t i = 0; i < ctx.irr.size(); ++i) {
        if (ctx.irr.blocks[i].degree != 1) continue;
        if (ctx.irr.chi(i).values[1] == -FieldElem::one(ctx.algebra().field())) return i;
    }
    REQUIRE(false);
    return 0;
}

TEST_CASE("kernel sets of C2 characters") {
    AlgebraContext ctx = AlgebraContext::make(make_builtin("C2"));
    size_t sign = find_char_of_degree(ctx.irr, 1, false, ctx.algebra().counit());
    size_t triv = find_char_of_degree(ctx.irr, 1, true, ctx.algebra().counit());
    CHECK(ker_as_group_elements(ctx, ker_set(ctx.irr.chi(sign), ctx.cochars)) ==
          std::set<size_t>{0});
    CHECK(ker_as_group_elements(ctx, ker_set(ctx.irr.chi(triv), ctx.cochars)) ==
          std::set<size_t>{0, 1});
}

TEST_CASE("kernel of the sign character of S3 is the alternating subgroup") {
    AlgebraContext ctx = AlgebraContext::make(make_builtin("S3"));
    size_t sign = s3_sign_index(ctx);
    std::vector<size_t> ker = ker_set(ctx.irr.chi(sign), ctx.cochars);
    CHECK(ker_as_group_elements(ctx, ker) == std::set<size_t>{0, 3, 4});
    HopfSubalgebraHandle hchi = kernel_subalgebra(ctx, ker);
    CHECK(hchi.dim() == 3);
    CHECK(hchi.is_normal);
    // the trivial character has everything in its kernel
    size_t triv = find_char_of_degree(ctx.irr, 1, true, ctx.algebra().counit());
    CHECK(kernel_subalgebra(ctx, ker_set(ctx.irr.chi(triv), ctx.cochars)).dim() == 6);
    // the regular character is faithful: kernel span{1}
    std::vector<size_t> ker_reg = ker_set(regular_character(ctx.algebra()), ctx.cochars);
    CHECK(kernel_subalgebra(ctx, ker_reg).dim() == 1);
}

TEST_CASE("simple subcoalgebras") {
    AlgebraContext ctx = AlgebraContext::make(make_builtin("S3"));
    for (size_t j = 0; j < ctx.cochars.size(); ++j) {
        Subspace c = simple_subcoalgebra(ctx, j);
        CHECK(c.dim() == 1); // group algebra: all cocharacters are grouplike
        CHECK(c == Subspace::span_of(ctx.cochars.chi(j).values));
    }
    AlgebraContext kp = AlgebraContext::make(make_builtin("KP8"));
    std::multiset<size_t> dims;
    for (size_t j = 0; j < kp.cochars.size(); ++j)
        dims.insert(simple_subcoalgebra(kp, j).dim());
    CHECK(dims == std::multiset<size_t>{1, 1, 1, 1, 4});
}

static Representation regular_representation(const HopfAlgebraData& h) {
    Representation r;
    r.algebra = &h;
    r.module_dim = h.dim();
    for (size_t i = 0; i < h.dim(); ++i)
        r.matrices.push_back(
            h.left_mult_matrix(vec_unit(h.field(), h.dim(), i)).transpose());
    return r;
}

TEST_CASE("trivial-action subspaces") {
    AlgebraContext ctx = AlgebraContext::make(make_builtin("C2"));
    const HopfAlgebraData& h = ctx.algebra();
    const CycloField* f = h.field();

    CHECK(sm_space(trivial_representation(h)) == Subspace::full(f, 2));

    size_t sign = find_char_of_degree(ctx.irr, 1, false, h.counit());
    Representation m = rep_from_block(h, ctx.irr, sign);
    CHECK(sm_space(m) == Subspace::span_of(h.unit()));

    CHECK(sm_space(regular_representation(h)) == Subspace::span_of(h.unit()));
}

TEST_CASE("annihilators and the largest Hopf ideal of a module") {
    AlgebraContext ctx = AlgebraContext::make(make_builtin("C2"));
    const HopfAlgebraData& h = ctx.algebra();
    const CycloField* f = h.field();
    size_t sign = find_char_of_degree(ctx.irr, 1, false, h.counit());
    Representation m = rep_from_block(h, ctx.irr, sign);

    Vec oneplusg = {FieldElem::one(f), FieldElem::one(f)};
    CHECK(annihilator(m) == Subspace::span_of(oneplusg));
    CHECK(hopf_ideal_of_module(ctx, m).is_zero());

    CHECK(annihilator(regular_representation(h)).is_zero());
    CHECK(hopf_ideal_of_module(ctx, regular_representation(h)).is_zero());

    // trivial module: the ideal is ker eps
    Matrix eps_col(f, 2, 1);
    eps_col.at(0, 0) = h.counit()[0];
    eps_col.at(1, 0) = h.counit()[1];
    CHECK(hopf_ideal_of_module(ctx, trivial_representation(h)) == left_kernel(eps_col));
}

TEST_CASE("categorical Hopf kernels of basic morphisms") {
    HopfAlgebraData s3 = make_builtin("S3");
    const CycloField* f = s3.field();
    HopfMorphism idm = morphism_check(s3, s3, Matrix::identity(f, 6));
    CHECK(hopf_kernel(idm).space == Subspace::span_of(s3.unit()));

    HopfAlgebraData triv = group_algebra(groups::cyclic(1), 3, "k");
    Matrix eps_col(f, 6, 1);
    for (size_t i = 0; i < 6; ++i) eps_col.at(i, 0) = s3.counit()[i];
    HopfMorphism eps = morphism_check(s3, triv, eps_col);
    CHECK(hopf_kernel(eps).space == Subspace::full(f, 6));

    // projection onto S3 // A3 has the alternating algebra as kernel
    std::vector<Vec> rows = {vec_unit(f, 6, 0), vec_unit(f, 6, 3), vec_unit(f, 6, 4)};
    HopfSubalgebraHandle a3 = certify_subalgebra(s3, Subspace::from_rows(f, rows, 6));
    QuotientData q = quotient_by_subalgebra(s3, a3);
    HopfMorphism pi{&s3, q.quotient.get(), q.projection};
    CHECK(hopf_kernel(pi).space == a3.space);
}

TEST_CASE("kernel equalities hold for every irreducible character") {
    for (const std::string name : {"C2", "S3", "S3-dual", "KP8"}) {
        AlgebraContext ctx = AlgebraContext::make(make_builtin(name));
        for (size_t i = 0; i < ctx.irr.size(); ++i) {
            KernelReport rep = verify_kernel_theorems(ctx, i);
            INFO(name, " character ", i);
            CHECK(rep.ker_closed);
            CHECK(rep.hopf_kernel_matches);
            CHECK(rep.sm_oracle_matches);
            CHECK(rep.quotient_module_matches);
        }
    }
}

TEST_CASE("projection fixed space characterizes the Hopf kernel") {
    // HKer(pi) is the largest Hopf subalgebra of { h : pi(h) = eps(h) 1 }
    HopfAlgebraData s3 = make_builtin("S3");
    const CycloField* f = s3.field();
    std::vector<Vec> rows = {vec_unit(f, 6, 0), vec_unit(f, 6, 3), vec_unit(f, 6, 4)};
    HopfSubalgebraHandle a3 = certify_subalgebra(s3, Subspace::from_rows(f, rows, 6));
    for (const HopfSubalgebraHandle& k :
         {a3, certify_subalgebra(s3, Subspace::span_of(s3.unit()))}) {
        QuotientData q = quotient_by_subalgebra(s3, k);
        const HopfAlgebraData& b = *q.quotient;
        // T = { h : pi(h) = eps(h) 1_B }
        Matrix sys(f, 6, b.dim());
        for (size_t i = 0; i < 6; ++i) {
            Vec diff = vec_sub(q.projection.row(i), vec_scale(b.unit(), s3.counit()[i]));
            sys.set_row(i, diff);
        }
        Subspace fixed = left_kernel(sys);
        Subspace largest = largest_subcoalgebra_in(s3, fixed);
        HopfSubalgebraHandle cert = certify_subalgebra(s3, largest);
        CHECK(cert.is_hopf_subalgebra());
        HopfMorphism pi{&s3, &b, q.projection};
        CHECK(hopf_kernel(pi).space == largest);
    }
}

TEST_CASE("kernel power and sum laws") {
    for (const std::string name : {"S3", "KP8"}) {
        AlgebraContext ctx = AlgebraContext::make(make_builtin(name));
        const HopfAlgebraData& h = ctx.algebra();
        for (size_t i = 0; i < ctx.irr.size(); ++i) {
            const Character& chi = ctx.irr.chi(i);
            std::vector<size_t> base = ker_set(chi, ctx.cochars);
            // ker(chi) subset of ker(chi^n), intersection over n comes back to ker(chi)
            std::set<size_t> inter;
            for (size_t j = 0; j < ctx.cochars.size(); ++j) inter.insert(j);
            Character power = Character::from_values(h, h.counit()); // chi^0
            for (size_t e = 0; e <= h.dim(); ++e) {
                std::vector<size_t> kp = ker_set(power, ctx.cochars);
                if (e >= 1)
                    CHECK(std::includes(kp.begin(), kp.end(), base.begin(), base.end()));
                std::set<size_t> cur(kp.begin(), kp.end());
                std::set<size_t> next;
                std::set_intersection(inter.begin(), inter.end(), cur.begin(), cur.end(),
                                      std::inserter(next, next.begin()));
                inter = std::move(next);
                power = char_product(power, chi);
            }
            CHECK(inter == std::set<size_t>(base.begin(), base.end()));
        }
        // kernel of a sum is the intersection of kernels
        if (ctx.irr.size() >= 2) {
            Character c = char_sum(char_sum(ctx.irr.chi(0), ctx.irr.chi(1)), ctx.irr.chi(0));
            std::vector<size_t> ks = ker_set(c, ctx.cochars);
            std::vector<size_t> k0 = ker_set(ctx.irr.chi(0), ctx.cochars);
            std::vector<size_t> k1 = ker_set(ctx.irr.chi(1), ctx.cochars);
            std::vector<size_t> expect;
            std::set_intersection(k0.begin(), k0.end(), k1.begin(), k1.end(),
                                  std::back_inserter(expect));
            CHECK(ks == expect);
        }
    }
}

TEST_CASE("trivial action conditions agree: character test vs module test") {
    // chi(d) = eps(d) chi(1) iff d acts as eps(d) on the block module
    for (const std::string name : {"S3", "Q8", "KP8"}) {
        AlgebraContext ctx = AlgebraContext::make(make_builtin(name));
        const HopfAlgebraData& h = ctx.algebra();
        for (size_t i = 0; i < ctx.irr.size(); ++i) {
            Representation m = rep_from_block(h, ctx.irr, i);
            for (size_t j = 0; j < ctx.cochars.size(); ++j) {
                const Character& d = ctx.cochars.chi(j);
                bool char_cond =
                    char_eval(ctx.irr.chi(i), d.values) == d.degree * ctx.irr.chi(i).degree;
                Matrix action(h.field(), m.module_dim, m.module_dim);
                for (size_t t = 0; t < h.dim(); ++t)
                    if (!d.values[t].is_zero())
                        action = action + m.matrices[t].scaled(d.values[t]);
                bool module_cond =
                    action == Matrix::identity(h.field(), m.module_dim).scaled(d.degree);
                CHECK(char_cond == module_cond);
            }
        }
    }
}

TEST_CASE("largest subcoalgebra swallows every subcoalgebra under it") {
    std::mt19937 rng(7041);
    for (const std::string name : {"S3", "KP8"}) {
        AlgebraContext ctx = AlgebraContext::make(make_builtin(name));
        const HopfAlgebraData& h = ctx.algebra();
        const CycloField* f = h.field();
        std::vector<Subspace> simples;
        for (size_t j = 0; j < ctx.cochars.size(); ++j)
            simples.push_back(simple_subcoalgebra(ctx, j));
        for (int iter = 0; iter < 12; ++iter) {
            // v = a random sum of simple subcoalgebras plus a random vector
            Subspace v = Subspace::zero(f, h.dim());
            std::vector<size_t> chosen;
            for (size_t j = 0; j < simples.size(); ++j)
                if (rng() % 2) {
                    v = v + simples[j];
                    chosen.push_back(j);
                }
            Vec noise = vec_zero(f, h.dim());
            for (auto& x : noise)
                x = FieldElem::from_int(f, static_cast<long long>(rng() % 5) - 2);
            v = v + Subspace::span_of(noise);
            Subspace big = largest_subcoalgebra_in(h, v);
            CHECK(v.contains(big));
            CHECK(is_subcoalgebra(h, big));
            for (size_t j : chosen) CHECK(big.contains(simples[j]));
            // any simple subcoalgebra inside v must survive into the fixpoint
            for (size_t j = 0; j < simples.size(); ++j)
                if (v.contains(simples[j])) CHECK(big.contains(simples[j]));
        }
    }
}

TEST_CASE("subalgebra augmentation ideals detect kernel containment") {
    // K+ inside Ann(M) exactly when K inside H_M
    AlgebraContext ctx = AlgebraContext::make(make_builtin("S3"));
    const HopfAlgebraData& h = ctx.algebra();
    const CycloField* f = h.field();
    std::vector<Subspace> subalgebras = {
        Subspace::span_of(h.unit()),
        Subspace::from_rows(f, {vec_unit(f, 6, 0), vec_unit(f, 6, 1)}, 6), // <(12)>
        Subspace::from_rows(f, {vec_unit(f, 6, 0), vec_unit(f, 6, 3), vec_unit(f, 6, 4)}, 6),
        Subspace::full(f, 6),
    };
    for (size_t i = 0; i < ctx.irr.size(); ++i) {
        Representation m = rep_from_block(h, ctx.irr, i);
        Subspace ann = annihilator(m);
        Subspace hchi = kernel_subalgebra(ctx, ker_set(ctx.irr.chi(i), ctx.cochars)).space;
        for (const Subspace& k : subalgebras) {
            Subspace kplus = augmentation_ideal(h, k);
            CHECK(ann.contains(kplus) == hchi.contains(k));
        }
    }
}
