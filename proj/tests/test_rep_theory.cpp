#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>

#include "hopfkern/corpus.hpp"
#include "hopfkern/rep.hpp"

using namespace hopfkern;

// Frozen classical character tables, used as independent oracles.
// S3 basis order: 0:e, 1/2/5: transpositions, 3/4: 3-cycles.
static const std::vector<std::vector<long>> kS3Table = {
    {1, 1, 1, 1, 1, 1},    // trivial
    {1, -1, -1, 1, 1, -1}, // sign
    {2, 0, 0, -1, -1, 0},  // standard
};
// Q8 basis order: 1, i, j, k, -1, -i, -j, -k
static const std::vector<std::vector<long>> kQ8Table = {
    {1, 1, 1, 1, 1, 1, 1, 1},        // trivial
    {1, 1, -1, -1, 1, 1, -1, -1},    // kernel <i>
    {1, -1, 1, -1, 1, -1, 1, -1},    // kernel <j>
    {1, -1, -1, 1, 1, -1, -1, 1},    // kernel <k>
    {2, 0, 0, 0, -2, 0, 0, 0},       // 2-dimensional
};

static Vec int_vec(const CycloField* f, const std::vector<long>& v) {
    Vec out;
    for (long x : v) out.push_back(FieldElem::from_int(f, x));
    return out;
}

static bool irr_matches_table(const IrrData& irr, const std::vector<std::vector<long>>& table) {
    if (irr.size() != table.size()) return false;
    std::vector<bool> used(table.size(), false);
    for (const IrrBlock& b : irr.blocks) {
        bool found = false;
        for (size_t t = 0; t < table.size() && !found; ++t) {
            if (used[t]) continue;
            if (b.character.values == int_vec(irr.algebra->field(), table[t])) {
                used[t] = true;
                found = true;
            }
        }
        if (!found) return false;
    }
    return true;
}

static std::multiset<long> degree_multiset(const IrrData& irr) {
    std::multiset<long> d;
    for (const IrrBlock& b : irr.blocks) d.insert(b.degree);
    return d;
}

TEST_CASE("center dimensions") {
    HopfAlgebraData s3 = make_builtin("S3");
    CHECK(center(s3).dim() == 3); // one per conjugacy class
    HopfAlgebraData fs3 = make_builtin("S3-dual");
    CHECK(center(fs3).dim() == 6); // commutative
    HopfAlgebraData q8 = make_builtin("Q8");
    CHECK(center(q8).dim() == 5);
    HopfAlgebraData a4 = make_builtin("A4");
    CHECK(center(a4).dim() == 4);
    // the center dimension equals the number of blocks found downstream
    HopfAlgebraData kp = make_builtin("KP8");
    CHECK(center(kp).dim() == irr_characters(kp).size());
}

TEST_CASE("central primitive idempotents of the C2 group algebra") {
    HopfAlgebraData c2 = make_builtin("C2");
    const CycloField* f = c2.field();
    auto idems = central_primitive_idempotents(c2);
    REQUIRE(idems.size() == 2);
    Vec plus = {FieldElem::from_rational(f, Rational(1, 2)),
                FieldElem::from_rational(f, Rational(1, 2))};
    Vec minus = {FieldElem::from_rational(f, Rational(1, 2)),
                 FieldElem::from_rational(f, Rational(-1, 2))};
    CHECK(((idems[0] == plus && idems[1] == minus) || (idems[0] == minus && idems[1] == plus)));
}

TEST_CASE("irreducible characters match the classical tables") {
    HopfAlgebraData s3 = make_builtin("S3");
    IrrData irr = irr_characters(s3);
    CHECK(irr_matches_table(irr, kS3Table));
    CHECK(degree_multiset(irr) == std::multiset<long>{1, 1, 2});
    // block dimensions are the squares 1, 1, 4
    std::multiset<size_t> bd;
    for (const auto& b : irr.blocks) bd.insert(b.block_dim);
    CHECK(bd == std::multiset<size_t>{1, 1, 4});

    HopfAlgebraData q8 = make_builtin("Q8");
    CHECK(irr_matches_table(irr_characters(q8), kQ8Table));

    HopfAlgebraData d4 = make_builtin("D4");
    CHECK(degree_multiset(irr_characters(d4)) == std::multiset<long>{1, 1, 1, 1, 2});

    HopfAlgebraData a4 = make_builtin("A4");
    IrrData irr_a4 = irr_characters(a4);
    CHECK(degree_multiset(irr_a4) == std::multiset<long>{1, 1, 1, 3});

    HopfAlgebraData kp = make_builtin("KP8");
    CHECK(degree_multiset(irr_characters(kp)) == std::multiset<long>{1, 1, 1, 1, 2});
}

TEST_CASE("dual of a commutative algebra splits into lines") {
    HopfAlgebraData fs3 = make_builtin("S3-dual");
    IrrData irr = irr_characters(fs3);
    REQUIRE(irr.size() == 6);
    for (const IrrBlock& b : irr.blocks) CHECK(b.block_dim == 1);
    // the idempotents are exactly the delta basis vectors
    std::vector<bool> seen(6, false);
    for (const IrrBlock& b : irr.blocks)
        for (size_t i = 0; i < 6; ++i)
            if (b.idempotent == vec_unit(fs3.field(), 6, i)) seen[i] = true;
    for (size_t i = 0; i < 6; ++i) CHECK(seen[i]);
}

TEST_CASE("Wedderburn dimension count on every builtin") {
    for (const std::string& name : builtin_names()) {
        HopfAlgebraData h = make_builtin(name);
        IrrData irr = irr_characters(h);
        long sum = 0;
        for (const IrrBlock& b : irr.blocks) sum += b.degree * b.degree;
        CHECK(static_cast<size_t>(sum) == h.dim());
    }
}

TEST_CASE("character evaluation and arithmetic in the S3 group algebra") {
    HopfAlgebraData s3 = make_builtin("S3");
    const CycloField* f = s3.field();
    IrrData irr = irr_characters(s3);
    Character sign = Character::from_values(s3, int_vec(f, kS3Table[1]));
    Character triv = Character::from_values(s3, int_vec(f, kS3Table[0]));
    Character two = Character::from_values(s3, int_vec(f, kS3Table[2]));

    // evaluation at group elements (3 is a 3-cycle, 1 a transposition)
    CHECK(char_eval(sign, vec_unit(f, 6, 3)) == FieldElem::one(f));
    CHECK(char_eval(sign, vec_unit(f, 6, 1)) == -FieldElem::one(f));
    CHECK(char_eval(sign, s3.unit()) == sign.degree);

    // sign * sign = trivial
    CHECK(char_product(sign, sign).values == triv.values);
    CHECK(char_power(sign, 2).values == triv.values);
    CHECK(char_power(sign, 0).values == s3.counit());
    CHECK(char_power(two, 2).values == char_product(two, two).values);
    // all S3 characters are real: star fixes them
    for (const IrrBlock& b : irr.blocks)
        CHECK(char_star(b.character).values == b.character.values);
    // 2 (x) 2 = triv + sign + 2
    std::vector<long> m = decompose(char_product(two, two), irr);
    std::map<long, long> by_degree;
    for (size_t i = 0; i < irr.size(); ++i) by_degree[irr.blocks[i].degree] += m[i];
    CHECK(by_degree[1] == 2);
    CHECK(by_degree[2] == 1);

    // a non-character fails decomposition
    Character bogus = Character::from_values(s3, vec_unit(f, 6, 1));
    CHECK_THROWS_AS(decompose(bogus, irr), InvalidInputError);
}

TEST_CASE("regular character") {
    HopfAlgebraData c2 = make_builtin("C2");
    Character reg = regular_character(c2);
    CHECK(reg.values == Vec{FieldElem::from_int(c2.field(), 2), FieldElem::zero(c2.field())});

    // chi_reg = sum chi(1) chi over all builtins
    for (const std::string name : {"S3", "Q8", "KP8", "A4-dual"}) {
        HopfAlgebraData h = make_builtin(name);
        IrrData irr = irr_characters(h);
        std::vector<long> m = decompose(regular_character(h), irr);
        for (size_t i = 0; i < irr.size(); ++i) CHECK(m[i] == irr.blocks[i].degree);
    }
}

TEST_CASE("the integral pairs with the cocharacters as the regular character") {
    // dim(H) * Lambda = sum over Irr(H*) of eps(d) d, both sides independent
    for (const std::string name : {"C2", "S3", "Q8", "KP8"}) {
        HopfAlgebraData h = make_builtin(name);
        HopfAlgebraData hd = dual(h);
        Vec lam = integral(h);
        IrrData cochars = irr_cocharacters(hd);
        Vec rhs = vec_zero(h.field(), h.dim());
        for (const IrrBlock& b : cochars.blocks)
            rhs = vec_add(rhs, vec_scale(b.character.values, b.character.degree));
        CHECK(vec_scale(lam, FieldElem::from_int(h.field(), h.dim())) == rhs);
    }
}

TEST_CASE("grouplikes are the cocharacters of a group algebra") {
    HopfAlgebraData s3 = make_builtin("S3");
    IrrData cochars = irr_cocharacters(dual(s3));
    REQUIRE(cochars.size() == 6);
    std::vector<bool> seen(6, false);
    for (const IrrBlock& b : cochars.blocks) {
        CHECK(b.character.degree == FieldElem::one(s3.field()));
        for (size_t i = 0; i < 6; ++i)
            if (b.character.values == vec_unit(s3.field(), 6, i)) seen[i] = true;
    }
    for (size_t i = 0; i < 6; ++i) CHECK(seen[i]);
}

TEST_CASE("block representations") {
    HopfAlgebraData s3 = make_builtin("S3");
    IrrData irr = irr_characters(s3);
    for (size_t i = 0; i < irr.size(); ++i) {
        Representation r = rep_from_block(s3, irr, i);
        CHECK(is_representation(r));
        if (irr.blocks[i].degree == 1) {
            // one-dimensional blocks act by the character itself
            for (size_t j = 0; j < 6; ++j)
                CHECK(r.matrices[j].at(0, 0) == irr.chi(i).values[j]);
        }
    }
    HopfAlgebraData kp = make_builtin("KP8");
    IrrData irr_kp = irr_characters(kp);
    for (size_t i = 0; i < irr_kp.size(); ++i)
        CHECK(is_representation(rep_from_block(kp, irr_kp, i)));
}

TEST_CASE("induced trivial characters") {
    HopfAlgebraData s3 = make_builtin("S3");
    const CycloField* f = s3.field();

    // from span{1}: the regular character
    Character from_triv = induced_trivial_character(s3, Subspace::span_of(s3.unit()));
    CHECK(from_triv.values == regular_character(s3).values);

    // from H itself: the counit
    Character from_full = induced_trivial_character(s3, Subspace::full(f, 6));
    CHECK(from_full.values == s3.counit());

    // from the alternating subgroup algebra: trivial + sign
    std::vector<Vec> rows = {vec_unit(f, 6, 0), vec_unit(f, 6, 3), vec_unit(f, 6, 4)};
    Subspace a3 = Subspace::from_rows(f, rows, 6);
    Character ind = induced_trivial_character(s3, a3);
    CHECK(ind.degree == FieldElem::from_int(f, 2));
    Vec expect = vec_add(int_vec(f, kS3Table[0]), int_vec(f, kS3Table[1]));
    CHECK(ind.values == expect);
}

TEST_CASE("phi maps the dual onto the algebra") {
    HopfAlgebraData c2 = make_builtin("C2");
    const CycloField* f = c2.field();
    Matrix phi = phi_matrix(c2, integral(c2));
    // phi(delta_1) = 1/2, phi(delta_g) = g/2
    CHECK(vec_unit(f, 2, 0) * phi ==
          Vec{FieldElem::from_rational(f, Rational(1, 2)), FieldElem::zero(f)});
    CHECK(vec_unit(f, 2, 1) * phi ==
          Vec{FieldElem::zero(f), FieldElem::from_rational(f, Rational(1, 2))});
}

TEST_CASE("phi exchanges characters and central idempotents") {
    // phi(xi_d) = (eps(d)/|H|) d*  and  phi^{-1}(xi_chi) = chi(1) chi
    for (const std::string name : {"C2", "S3", "Q8", "KP8"}) {
        HopfAlgebraData h = make_builtin(name);
        HopfAlgebraData hd = dual(h);
        Matrix phi = phi_matrix(h, integral(h));
        Matrix phi_inv = inverse(phi);
        IrrData irr = irr_characters(h);
        IrrData cochars = irr_cocharacters(hd);
        FieldElem dim_inv = FieldElem::from_int(h.field(), h.dim()).inverse();
        for (const IrrBlock& b : cochars.blocks) {
            Vec dstar = h.antipode_of(b.character.values);
            Vec lhs = b.idempotent * phi;
            CHECK(lhs == vec_scale(dstar, b.character.degree * dim_inv));
        }
        for (const IrrBlock& b : irr.blocks) {
            Vec lhs = b.idempotent * phi_inv;
            CHECK(lhs == vec_scale(b.character.values, FieldElem::from_int(h.field(), b.degree)));
        }
    }
}

TEST_CASE("phi carries the character algebra onto the center") {
    HopfAlgebraData s3 = make_builtin("S3");
    Matrix phi = phi_matrix(s3, integral(s3));
    IrrData irr = irr_characters(s3);
    std::vector<Vec> rows;
    for (const IrrBlock& b : irr.blocks) rows.push_back(b.character.values * phi);
    CHECK(Subspace::from_rows(s3.field(), rows, 6) == center(s3));
    // and Z(H*) onto C(H*): the center of the dual onto the span of cocharacters
    HopfAlgebraData hd = dual(s3);
    Subspace zdual = center(hd);
    std::vector<Vec> rows2;
    for (size_t i = 0; i < zdual.dim(); ++i) rows2.push_back(zdual.basis().row(i) * phi);
    IrrData cochars = irr_cocharacters(hd);
    std::vector<Vec> crows;
    for (const IrrBlock& b : cochars.blocks) crows.push_back(b.character.values);
    CHECK(Subspace::from_rows(s3.field(), rows2, 6) ==
          Subspace::from_rows(s3.field(), crows, 6));
}

TEST_CASE("cyclic group algebras split exactly across cyclotomic orders") {
    // the characters of C_n are j -> (zeta^{jk})_k; comparing against the
    // power table checks the whole locate-reconstruct-certify pipeline,
    // including the degree-4 fields Q(zeta_8) and Q(zeta_12)
    for (unsigned n : {2u, 3u, 4u, 6u, 8u, 12u}) {
        HopfAlgebraData h = group_algebra(groups::cyclic(n), n, "C" + std::to_string(n));
        const CycloField* f = h.field();
        IrrData irr = irr_characters(h);
        REQUIRE(irr.size() == n);
        std::set<std::string> got, expect;
        for (const IrrBlock& b : irr.blocks) {
            CHECK(b.degree == 1);
            std::string key;
            for (const FieldElem& v : b.character.values) key += v.to_string() + ";";
            got.insert(key);
        }
        for (unsigned j = 0; j < n; ++j) {
            std::string key;
            for (unsigned k = 0; k < n; ++k)
                key += FieldElem::zeta_pow(f, static_cast<size_t>(j) * k).to_string() + ";";
            expect.insert(key);
        }
        CHECK(got == expect);
    }
}

TEST_CASE("a too-small base field is detected and reported") {
    // C4 over Q: the center needs the fourth roots of unity to split
    HopfAlgebraData c4q = group_algebra(groups::cyclic(4), 1, "C4-over-Q");
    CHECK(verify_hopf(c4q).all_pass()); // the algebra itself is fine
    CHECK_THROWS_AS(irr_characters(c4q), FieldTooSmallError);
}

TEST_CASE("character bound sanity through the numeric embedding") {
    // |chi(d)| <= eps(d) chi(1), reported numerically only
    for (const std::string name : {"S3", "Q8", "KP8"}) {
        HopfAlgebraData h = make_builtin(name);
        HopfAlgebraData hd = dual(h);
        IrrData irr = irr_characters(h);
        IrrData cochars = irr_cocharacters(hd);
        qnum::qcomplex zeta = qnum::root_of_unity(h.field()->order());
        for (const IrrBlock& bc : irr.blocks)
            for (const IrrBlock& bd : cochars.blocks) {
                FieldElem v = char_eval(bc.character, bd.character.values);
                double lhs = static_cast<double>(qnum::embed(v, zeta).abs());
                double rhs = static_cast<double>(
                    qnum::embed(bd.character.degree * bc.character.degree, zeta).abs());
                CHECK(lhs <= rhs + 1e-20);
            }
    }
}
