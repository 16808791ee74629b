#pragma once

// Built-in example algebras: group algebras and their duals for a family of
// small groups, and the 8-dimensional algebra of Kac and Paljutkin (the
// smallest semisimple Hopf algebra that is neither commutative nor
// cocommutative).

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopfkern/hopf.hpp"

namespace hopfkern {

struct GroupTable {
    size_t order = 0;
    std::vector<std::vector<size_t>> table; // table[i][j] = index of g_i g_j
    std::vector<std::string> names;

    size_t inverse(size_t i) const {
        for (size_t j = 0; j < order; ++j)
            if (table[i][j] == 0) return j;
        throw std::logic_error("GroupTable: no inverse");
    }

    size_t element_order(size_t i) const {
        size_t x = i, ord = 1;
        while (x != 0) {
            x = table[x][i];
            ++ord;
        }
        return ord;
    }

    // checked exhaustively: identity at index 0, closure, associativity,
    // unique inverses
    void validate() const {
        if (order == 0 || table.size() != order)
            throw std::invalid_argument("GroupTable: bad shape");
        for (const auto& row : table) {
            if (row.size() != order) throw std::invalid_argument("GroupTable: bad row");
            for (size_t v : row)
                if (v >= order) throw std::invalid_argument("GroupTable: entry out of range");
        }
        for (size_t i = 0; i < order; ++i)
            if (table[0][i] != i || table[i][0] != i)
                throw std::invalid_argument("GroupTable: index 0 is not the identity");
        for (size_t i = 0; i < order; ++i)
            for (size_t j = 0; j < order; ++j)
                for (size_t k = 0; k < order; ++k)
                    if (table[table[i][j]][k] != table[i][table[j][k]])
                        throw std::invalid_argument("GroupTable: not associative");
        for (size_t i = 0; i < order; ++i) inverse(i); // throws when missing
    }
};

namespace groups {

inline GroupTable cyclic(size_t n) {
    GroupTable t;
    t.order = n;
    t.table.assign(n, std::vector<size_t>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) t.table[i][j] = (i + j) % n;
    for (size_t i = 0; i < n; ++i) t.names.push_back(i == 0 ? "e" : "g^" + std::to_string(i));
    return t;
}

inline GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
    GroupTable t;
    t.order = a.order * b.order;
    t.table.assign(t.order, std::vector<size_t>(t.order));
    auto idx = [&](size_t i, size_t j) { return i * b.order + j; };
    for (size_t i1 = 0; i1 < a.order; ++i1)
        for (size_t j1 = 0; j1 < b.order; ++j1)
            for (size_t i2 = 0; i2 < a.order; ++i2)
                for (size_t j2 = 0; j2 < b.order; ++j2)
                    t.table[idx(i1, j1)][idx(i2, j2)] = idx(a.table[i1][i2], b.table[j1][j2]);
    for (size_t i = 0; i < a.order; ++i)
        for (size_t j = 0; j < b.order; ++j)
            t.names.push_back("(" + a.names[i] + "," + b.names[j] + ")");
    return t;
}

// group of the given one-line permutations, which must be listed with the
// identity first and be closed under composition
inline GroupTable from_permutations(std::vector<std::vector<size_t>> perms) {
    GroupTable t;
    t.order = perms.size();
    t.table.assign(t.order, std::vector<size_t>(t.order));
    auto find = [&](const std::vector<size_t>& p) -> size_t {
        for (size_t i = 0; i < perms.size(); ++i)
            if (perms[i] == p) return i;
        throw std::invalid_argument("GroupTable: permutations not closed");
    };
    for (size_t i = 0; i < t.order; ++i)
        for (size_t j = 0; j < t.order; ++j) {
            std::vector<size_t> comp(perms[i].size());
            for (size_t x = 0; x < comp.size(); ++x) comp[x] = perms[i][perms[j][x]];
            t.table[i][j] = find(comp);
        }
    for (const auto& p : perms) {
        std::string n;
        for (size_t x : p) n += std::to_string(x);
        t.names.push_back(n);
    }
    return t;
}

inline GroupTable symmetric3() {
    // all permutations of {0,1,2} in lexicographic order; identity first
    return from_permutations({{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}});
}

inline GroupTable alternating4() {
    std::vector<std::vector<size_t>> perms;
    std::vector<size_t> p = {0, 1, 2, 3};
    do {
        // parity by inversion count
        int inv = 0;
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = i + 1; j < 4; ++j)
                if (p[i] > p[j]) ++inv;
        if (inv % 2 == 0) perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return from_permutations(std::move(perms));
}

// symmetries of the regular n-gon: rot^r refl^s, index = r + n*s
inline GroupTable dihedral(size_t n) {
    GroupTable t;
    t.order = 2 * n;
    t.table.assign(2 * n, std::vector<size_t>(2 * n));
    auto idx = [n](size_t r, size_t s) { return r + n * s; };
    for (size_t r1 = 0; r1 < n; ++r1)
        for (size_t s1 = 0; s1 < 2; ++s1)
            for (size_t r2 = 0; r2 < n; ++r2)
                for (size_t s2 = 0; s2 < 2; ++s2) {
                    size_t r = s1 ? (r1 + n - r2) % n : (r1 + r2) % n;
                    t.table[idx(r1, s1)][idx(r2, s2)] = idx(r, (s1 + s2) % 2);
                }
    for (size_t s = 0; s < 2; ++s)
        for (size_t r = 0; r < n; ++r)
            t.names.push_back(std::string(s ? "sr" : "r") + std::to_string(r));
    return t;
}

inline GroupTable dihedral4() { return dihedral(4); }

inline GroupTable quaternion8() {
    // units 1,i,j,k with sign: index = unit + 4*(sign<0)
    GroupTable t;
    t.order = 8;
    t.table.assign(8, std::vector<size_t>(8));
    // unit products: uprod[a][b] = (unit, sign)
    static const int uprod[4][4][2] = {
        {{0, 1}, {1, 1}, {2, 1}, {3, 1}},
        {{1, 1}, {0, -1}, {3, 1}, {2, -1}},
        {{2, 1}, {3, -1}, {0, -1}, {1, 1}},
        {{3, 1}, {2, 1}, {1, -1}, {0, -1}},
    };
    for (size_t a = 0; a < 8; ++a)
        for (size_t b = 0; b < 8; ++b) {
            size_t ua = a % 4, ub = b % 4;
            int sign = (a < 4 ? 1 : -1) * (b < 4 ? 1 : -1) * uprod[ua][ub][1];
            size_t unit = static_cast<size_t>(uprod[ua][ub][0]);
            t.table[a][b] = unit + (sign < 0 ? 4 : 0);
        }
    t.names = {"1", "i", "j", "k", "-1", "-i", "-j", "-k"};
    return t;
}

} // namespace groups

// The group algebra C[G]: basis = group elements, Delta(g) = g (x) g,
// eps(g) = 1, S(g) = g^{-1}.
inline HopfAlgebraData group_algebra(const GroupTable& t, unsigned cyclotomic_order,
                                     const std::string& name) {
    t.validate();
    auto field = std::make_shared<const CycloField>(cyclotomic_order);
    const CycloField* f = field.get();
    size_t n = t.order;
    std::vector<Matrix> mult(n, Matrix(f, n, n));
    std::vector<Matrix> comult(n, Matrix(f, n, n));
    Matrix antipode(f, n, n);
    Vec unit = vec_unit(f, n, 0);
    Vec counit(n, FieldElem::one(f));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) mult[i].at(j, t.table[i][j]) = FieldElem::one(f);
        comult[i].at(i, i) = FieldElem::one(f);
        antipode.at(i, t.inverse(i)) = FieldElem::one(f);
    }
    return HopfAlgebraData(field, name, n, std::move(mult), std::move(unit),
                           std::move(comult), std::move(counit), std::move(antipode));
}

inline HopfAlgebraData dual_group_algebra(const GroupTable& t, unsigned cyclotomic_order,
                                          const std::string& name) {
    HopfAlgebraData ga = group_algebra(t, cyclotomic_order, name);
    return dual(ga);
}

// The Kac-Paljutkin algebra of dimension 8, basis x^a y^b z^c (index
// a + 2b + 4c) for the presentation
//   x^2 = y^2 = 1,  xy = yx,  zx = yz,  zy = xz,  z^2 = (1 + x + y - xy)/2,
//   Delta(x) = x(x)x,  Delta(y) = y(x)y,
//   Delta(z) = (z(x)z + z(x)xz + yz(x)z - yz(x)xz)/2,
//   eps = 1 on every basis monomial,  S fixes the basis except xz <-> yz.
// The structure constants are frozen data; the test suite re-derives them
// from the presentation by brute-force rewriting.
inline HopfAlgebraData kac_paljutkin() {
    struct Entry { uint8_t i, j, k; int8_t num; uint8_t den; };
    static const Entry kMult[] = {
        {0, 0, 0, 1, 1}, {0, 1, 1, 1, 1}, {0, 2, 2, 1, 1}, {0, 3, 3, 1, 1}, {0, 4, 4, 1, 1},
        {0, 5, 5, 1, 1}, {0, 6, 6, 1, 1}, {0, 7, 7, 1, 1}, {1, 0, 1, 1, 1}, {1, 1, 0, 1, 1},
        {1, 2, 3, 1, 1}, {1, 3, 2, 1, 1}, {1, 4, 5, 1, 1}, {1, 5, 4, 1, 1}, {1, 6, 7, 1, 1},
        {1, 7, 6, 1, 1}, {2, 0, 2, 1, 1}, {2, 1, 3, 1, 1}, {2, 2, 0, 1, 1}, {2, 3, 1, 1, 1},
        {2, 4, 6, 1, 1}, {2, 5, 7, 1, 1}, {2, 6, 4, 1, 1}, {2, 7, 5, 1, 1}, {3, 0, 3, 1, 1},
        {3, 1, 2, 1, 1}, {3, 2, 1, 1, 1}, {3, 3, 0, 1, 1}, {3, 4, 7, 1, 1}, {3, 5, 6, 1, 1},
        {3, 6, 5, 1, 1}, {3, 7, 4, 1, 1}, {4, 0, 4, 1, 1}, {4, 1, 6, 1, 1}, {4, 2, 5, 1, 1},
        {4, 3, 7, 1, 1}, {4, 4, 0, 1, 2}, {4, 4, 1, 1, 2}, {4, 4, 2, 1, 2}, {4, 4, 3, -1, 2},
        {4, 5, 0, 1, 2}, {4, 5, 1, -1, 2}, {4, 5, 2, 1, 2}, {4, 5, 3, 1, 2}, {4, 6, 0, 1, 2},
        {4, 6, 1, 1, 2}, {4, 6, 2, -1, 2}, {4, 6, 3, 1, 2}, {4, 7, 0, -1, 2}, {4, 7, 1, 1, 2},
        {4, 7, 2, 1, 2}, {4, 7, 3, 1, 2}, {5, 0, 5, 1, 1}, {5, 1, 7, 1, 1}, {5, 2, 4, 1, 1},
        {5, 3, 6, 1, 1}, {5, 4, 0, 1, 2}, {5, 4, 1, 1, 2}, {5, 4, 2, -1, 2}, {5, 4, 3, 1, 2},
        {5, 5, 0, -1, 2}, {5, 5, 1, 1, 2}, {5, 5, 2, 1, 2}, {5, 5, 3, 1, 2}, {5, 6, 0, 1, 2},
        {5, 6, 1, 1, 2}, {5, 6, 2, 1, 2}, {5, 6, 3, -1, 2}, {5, 7, 0, 1, 2}, {5, 7, 1, -1, 2},
        {5, 7, 2, 1, 2}, {5, 7, 3, 1, 2}, {6, 0, 6, 1, 1}, {6, 1, 4, 1, 1}, {6, 2, 7, 1, 1},
        {6, 3, 5, 1, 1}, {6, 4, 0, 1, 2}, {6, 4, 1, -1, 2}, {6, 4, 2, 1, 2}, {6, 4, 3, 1, 2},
        {6, 5, 0, 1, 2}, {6, 5, 1, 1, 2}, {6, 5, 2, 1, 2}, {6, 5, 3, -1, 2}, {6, 6, 0, -1, 2},
        {6, 6, 1, 1, 2}, {6, 6, 2, 1, 2}, {6, 6, 3, 1, 2}, {6, 7, 0, 1, 2}, {6, 7, 1, 1, 2},
        {6, 7, 2, -1, 2}, {6, 7, 3, 1, 2}, {7, 0, 7, 1, 1}, {7, 1, 5, 1, 1}, {7, 2, 6, 1, 1},
        {7, 3, 4, 1, 1}, {7, 4, 0, -1, 2}, {7, 4, 1, 1, 2}, {7, 4, 2, 1, 2}, {7, 4, 3, 1, 2},
        {7, 5, 0, 1, 2}, {7, 5, 1, 1, 2}, {7, 5, 2, -1, 2}, {7, 5, 3, 1, 2}, {7, 6, 0, 1, 2},
        {7, 6, 1, -1, 2}, {7, 6, 2, 1, 2}, {7, 6, 3, 1, 2}, {7, 7, 0, 1, 2}, {7, 7, 1, 1, 2},
        {7, 7, 2, 1, 2}, {7, 7, 3, -1, 2},
    };
    static const Entry kComult[] = {
        {0, 0, 0, 1, 1}, {1, 1, 1, 1, 1}, {2, 2, 2, 1, 1}, {3, 3, 3, 1, 1}, {4, 4, 4, 1, 2},
        {4, 4, 5, 1, 2}, {4, 6, 4, 1, 2}, {4, 6, 5, -1, 2}, {5, 5, 4, 1, 2}, {5, 5, 5, 1, 2},
        {5, 7, 4, -1, 2}, {5, 7, 5, 1, 2}, {6, 4, 6, 1, 2}, {6, 4, 7, -1, 2}, {6, 6, 6, 1, 2},
        {6, 6, 7, 1, 2}, {7, 5, 6, -1, 2}, {7, 5, 7, 1, 2}, {7, 7, 6, 1, 2}, {7, 7, 7, 1, 2},
    };
    static const uint8_t kAntipode[8] = {0, 1, 2, 3, 4, 6, 5, 7};

    auto field = std::make_shared<const CycloField>(8);
    const CycloField* f = field.get();
    const size_t n = 8;
    std::vector<Matrix> mult(n, Matrix(f, n, n));
    std::vector<Matrix> comult(n, Matrix(f, n, n));
    for (const Entry& e : kMult)
        mult[e.i].at(e.j, e.k) = FieldElem::from_rational(f, Rational(e.num, e.den));
    for (const Entry& e : kComult)
        comult[e.i].at(e.j, e.k) = FieldElem::from_rational(f, Rational(e.num, e.den));
    Matrix antipode(f, n, n);
    for (size_t i = 0; i < n; ++i) antipode.at(i, kAntipode[i]) = FieldElem::one(f);
    Vec unit = vec_unit(f, n, 0);
    Vec counit(n, FieldElem::one(f));
    return HopfAlgebraData(field, "KP8", n, std::move(mult), std::move(unit),
                           std::move(comult), std::move(counit), std::move(antipode));
}

// registry of built-in algebras, in the fixed order reports use
inline const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = {
        "C2",  "C2-dual",  "C4", "C4-dual", "V4",  "V4-dual",  "S3",  "S3-dual",
        "D4",  "D4-dual",  "Q8", "Q8-dual", "A4",  "A4-dual",  "KP8", "KP8-dual",
    };
    return names;
}

inline HopfAlgebraData make_builtin(const std::string& name) {
    std::string base = name;
    bool want_dual = false;
    if (base.size() > 5 && base.substr(base.size() - 5) == "-dual") {
        want_dual = true;
        base = base.substr(0, base.size() - 5);
    }
    HopfAlgebraData h;
    if (base == "C2") h = group_algebra(groups::cyclic(2), 1, "C2");
    else if (base == "C4") h = group_algebra(groups::cyclic(4), 4, "C4");
    else if (base == "V4")
        h = group_algebra(groups::direct_product(groups::cyclic(2), groups::cyclic(2)), 1, "V4");
    else if (base == "S3") h = group_algebra(groups::symmetric3(), 3, "S3");
    else if (base == "D4") h = group_algebra(groups::dihedral4(), 4, "D4");
    else if (base == "Q8") h = group_algebra(groups::quaternion8(), 4, "Q8");
    else if (base == "A4") h = group_algebra(groups::alternating4(), 3, "A4");
    else if (base == "KP8") h = kac_paljutkin();
    else throw std::invalid_argument("unknown builtin algebra '" + name + "'");
    return want_dual ? dual(h) : h;
}

} // namespace hopfkern
