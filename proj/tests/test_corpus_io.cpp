#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <map>

#include "hopfkern/io.hpp"
#include "oracles.hpp"

using namespace hopfkern;

static bool same_structure(const HopfAlgebraData& a, const HopfAlgebraData& b) {
    return a.dim() == b.dim() && a.mult() == b.mult() && a.comult() == b.comult() &&
           a.unit() == b.unit() && a.counit() == b.counit() && a.antipode() == b.antipode();
}

// ---- brute-force re-derivation of the Kac-Paljutkin structure constants ----
// basis monomial x^a y^b z^c at index a + 2b + 4c; rewriting rules:
//   z x^p y^q = x^q y^p z,   z^2 = (1 + x + y - xy)/2
namespace kp {

struct Term {
    size_t idx;
    Rational coeff;
};

inline std::vector<Term> mono_mul(size_t m1, size_t m2) {
    size_t a = m1 & 1, b = (m1 >> 1) & 1, c = (m1 >> 2) & 1;
    size_t p = m2 & 1, q = (m2 >> 1) & 1, r = (m2 >> 2) & 1;
    if (c == 1) std::swap(p, q);
    size_t A = (a + p) % 2, B = (b + q) % 2;
    if (c + r <= 1) return {{A + 2 * B + 4 * (c + r), Rational(1)}};
    std::vector<Term> out;
    out.push_back({A + 2 * B, Rational(1, 2)});
    out.push_back({(A + 1) % 2 + 2 * B, Rational(1, 2)});
    out.push_back({A + 2 * ((B + 1) % 2), Rational(1, 2)});
    out.push_back({(A + 1) % 2 + 2 * ((B + 1) % 2), Rational(-1, 2)});
    return out;
}

} // namespace kp

TEST_CASE("Kac-Paljutkin constants re-derive from the presentation") {
    HopfAlgebraData h = kac_paljutkin();
    const CycloField* f = h.field();
    CHECK(h.dim() == 8);
    CHECK(f->order() == 8);

    // multiplication agrees with normal-form rewriting on every basis pair
    for (size_t i = 0; i < 8; ++i)
        for (size_t j = 0; j < 8; ++j) {
            Vec expect = vec_zero(f, 8);
            for (const kp::Term& t : kp::mono_mul(i, j))
                expect[t.idx] += FieldElem::from_rational(f, t.coeff);
            CHECK(h.basis_product(i, j) == expect);
        }

    // defining relations, directly
    auto mono = [&](size_t i) { return vec_unit(f, 8, i); };
    Vec x = mono(1), y = mono(2), z = mono(4);
    CHECK(h.multiply(x, x) == h.unit());
    CHECK(h.multiply(y, y) == h.unit());
    CHECK(h.multiply(x, y) == h.multiply(y, x));
    CHECK(h.multiply(z, x) == h.multiply(y, z)); // z x = y z
    CHECK(h.multiply(z, y) == h.multiply(x, z)); // z y = x z
    Vec zz = h.multiply(z, z);
    Vec expect_zz = vec_zero(f, 8);
    expect_zz[0] = expect_zz[1] = expect_zz[2] = FieldElem::from_rational(f, Rational(1, 2));
    expect_zz[3] = FieldElem::from_rational(f, Rational(-1, 2));
    CHECK(zz == expect_zz);

    // comultiplication: grouplikes on the group part, the twisted formula on z
    for (size_t i = 0; i < 4; ++i) {
        Matrix d = h.comult()[i];
        for (size_t j = 0; j < 8; ++j)
            for (size_t k = 0; k < 8; ++k)
                CHECK(d.at(j, k) == (j == i && k == i ? FieldElem::one(f) : FieldElem::zero(f)));
    }
    {
        // Delta(z) = (z(x)z + z(x)xz + yz(x)z - yz(x)xz)/2
        Matrix d = h.comult()[4];
        std::map<std::pair<size_t, size_t>, Rational> expect = {
            {{4, 4}, Rational(1, 2)},
            {{4, 5}, Rational(1, 2)},
            {{6, 4}, Rational(1, 2)},
            {{6, 5}, Rational(-1, 2)},
        };
        for (size_t j = 0; j < 8; ++j)
            for (size_t k = 0; k < 8; ++k) {
                auto it = expect.find({j, k});
                FieldElem want = it == expect.end()
                                     ? FieldElem::zero(f)
                                     : FieldElem::from_rational(f, it->second);
                CHECK(d.at(j, k) == want);
            }
    }

    // counit is 1 on every monomial; antipode swaps xz and yz and fixes the rest
    for (size_t i = 0; i < 8; ++i) CHECK(h.counit()[i] == FieldElem::one(f));
    for (size_t i = 0; i < 8; ++i) {
        size_t img = i == 5 ? 6 : i == 6 ? 5 : i;
        CHECK(h.antipode().row(i) == mono(img));
    }

    // the generators generate: products of x, y, z reach every basis monomial
    CHECK(h.multiply(x, y) == mono(3));
    CHECK(h.multiply(x, z) == mono(5));
    CHECK(h.multiply(y, z) == mono(6));
    CHECK(h.multiply(h.multiply(x, y), z) == mono(7));

    CHECK(verify_hopf(h).all_pass());
    CHECK(!is_commutative(h));
    CHECK(!is_cocommutative(h));
}

TEST_CASE("JSON round trips bit-exactly for every builtin") {
    for (const std::string& name : builtin_names()) {
        HopfAlgebraData h = make_builtin(name);
        json j = algebra_to_json(h);
        HopfAlgebraData back = algebra_from_json(j);
        CHECK(same_structure(h, back));
        CHECK(back.name() == h.name());
        CHECK(back.field()->order() == h.field()->order());
        // canonical: serialize(parse(serialize)) == serialize
        CHECK(algebra_to_json(back) == j);
    }
}

TEST_CASE("field elements serialize as rational strings") {
    HopfAlgebraData kp8 = make_builtin("KP8");
    json j = algebra_to_json(kp8);
    // z * z has coefficient 1/2 at the unit: mult[4][4][0] == ["1/2","0","0","0"]
    CHECK(j["mult"][4][4][0][0].get<std::string>() == "1/2");
    CHECK(j["mult"][4][4][3][0].get<std::string>() == "-1/2");
    CHECK(j["cyclotomic_order"].get<unsigned>() == 8);
}

TEST_CASE("optional metadata is accepted and ignored") {
    json j = algebra_to_json(make_builtin("C2"));
    j["metadata"] = {{"description", "order-two group algebra"},
                     {"expected_irr_degrees", {1, 1}}};
    HopfAlgebraData h = algebra_from_json(j);
    CHECK(h.dim() == 2);
    CHECK(verify_hopf(h).all_pass());
}

TEST_CASE("malformed algebra files are rejected") {
    CHECK_THROWS_AS(load_algebra_file("/nonexistent/path.json"), InvalidInputError);

    json good = algebra_to_json(make_builtin("C2"));
    json bad = good;
    bad.erase("antipode");
    CHECK_THROWS_AS(algebra_from_json(bad), InvalidInputError);

    bad = good;
    bad["dim"] = 3; // inconsistent with tensor shapes
    CHECK_THROWS_AS(algebra_from_json(bad), InvalidInputError);

    bad = good;
    bad["mult"][0][0][0] = json::array({"1", "2"}); // wrong coefficient count for phi(1)=1
    CHECK_THROWS_AS(algebra_from_json(bad), InvalidInputError);

    bad = good;
    bad["cyclotomic_order"] = 0;
    CHECK_THROWS_AS(algebra_from_json(bad), InvalidInputError);
}

TEST_CASE("a corrupted antipode still parses but fails verification") {
    json j = algebra_to_json(make_builtin("C2"));
    j["antipode"][0][0] = json::array({"0"});
    j["antipode"][1][1] = json::array({"0"});
    j["antipode"][0][1] = json::array({"0"});
    j["antipode"][1][0] = json::array({"0"});
    HopfAlgebraData h = algebra_from_json(j);
    AxiomReport rep = verify_hopf(h);
    CHECK(!rep.all_pass());
}

TEST_CASE("classical group kernels agree with the library kernel sets") {
    using namespace hopfkern::testing;
    for (const BuiltinGroup& g : builtin_groups()) {
        AlgebraContext ctx =
            AlgebraContext::make(group_algebra(g.table, g.cyclotomic_order, g.name));
        // Irr(H*) of a group algebra is exactly the set of group elements
        CHECK(ctx.cochars.size() == g.table.order);
        for (size_t i = 0; i < ctx.irr.size(); ++i) {
            std::vector<size_t> ker = ker_set(ctx.irr.chi(i), ctx.cochars);
            std::set<size_t> lib = ker_set_as_elements(g.table, ctx, ker);
            std::set<size_t> classical =
                classical_group_kernel(g.table, ctx.irr.chi(i).values);
            INFO(g.name, " character ", i);
            CHECK(lib == classical);
            // the kernel is a subgroup; its span is the kernel subalgebra
            CHECK(generated_subgroup(g.table, classical) == classical);
            CHECK(kernel_subalgebra(ctx, ker).dim() == classical.size());
        }
    }
}

TEST_CASE("a non-builtin algebra runs through the whole pipeline from a file") {
    // order-12 dihedral group over Q(zeta_6), written out and read back
    HopfAlgebraData d6 = group_algebra(groups::dihedral(6), 6, "D6");
    std::string path = "/tmp/hopfkern_d6_test.json";
    save_algebra_file(d6, path);
    AlgebraContext ctx = AlgebraContext::make(load_algebra_file(path));
    std::remove(path.c_str());

    std::multiset<long> degrees;
    for (const IrrBlock& b : ctx.irr.blocks) degrees.insert(b.degree);
    CHECK(degrees == std::multiset<long>{1, 1, 1, 1, 2, 2});
    CHECK(center(ctx.algebra()).dim() == 6); // six conjugacy classes

    // kernels and their equalities hold off the builtin corpus too
    for (size_t i = 0; i < ctx.irr.size(); ++i) {
        KernelReport r = verify_kernel_theorems(ctx, i);
        CHECK(r.hopf_kernel_matches);
        CHECK(r.sm_oracle_matches);
        CHECK(r.quotient_module_matches);
        CHECK(r.normal); // group representation kernels are normal
    }
}

TEST_CASE("builtin registry") {
    CHECK(builtin_names().size() == 16);
    for (const std::string& name : builtin_names()) {
        HopfAlgebraData h = make_builtin(name);
        CHECK(h.dim() >= 2);
        CHECK(h.dim() <= 12);
        CHECK(h.name() == name);
    }
    CHECK_THROWS_AS(make_builtin("nope"), std::invalid_argument);
}
