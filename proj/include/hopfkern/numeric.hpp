#pragma once

// Numeric machinery used only to PROPOSE eigenvalue candidates: high-precision
// complex root location (Durand-Kerner on exact minimal polynomials) followed
// by exact reconstruction into Q(zeta_N) via an LLL integer-relation search.
// No numeric value ever enters a result; every candidate is certified exactly
// by the caller before use.

#include <cmath>
#include <string>
#include <vector>

#include "hopfkern/matrix.hpp"
#include "hopfkern/subspace.hpp"

namespace hopfkern {

#if defined(__SIZEOF_FLOAT128__)
using quad = __float128;
inline constexpr int kQuadMantissaBits = 112;
#else
using quad = long double;
inline constexpr int kQuadMantissaBits = 63;
#endif

// location could not separate or pin candidate eigenvalues numerically
struct NumericLocationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace qnum {

inline quad qabs(quad x) { return x < 0 ? -x : x; }

inline quad qsqrt(quad a) {
    if (a <= 0) return 0;
    quad x = static_cast<quad>(std::sqrt(static_cast<double>(static_cast<long double>(a))));
    for (int i = 0; i < 4; ++i) x = (x + a / x) / 2;
    return x;
}

inline quad from_bigint(const BigInt& v) {
    quad r = 0;
    for (size_t i = v.limb_count(); i-- > 0;) r = r * 4294967296.0 + static_cast<quad>(v.limb(i));
    return v.sign() < 0 ? -r : r;
}

inline quad from_rational(const Rational& v) {
    return from_bigint(v.num()) / from_bigint(v.den());
}

struct qcomplex {
    quad re = 0, im = 0;

    friend qcomplex operator+(qcomplex a, qcomplex b) { return {a.re + b.re, a.im + b.im}; }
    friend qcomplex operator-(qcomplex a, qcomplex b) { return {a.re - b.re, a.im - b.im}; }
    friend qcomplex operator*(qcomplex a, qcomplex b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend qcomplex operator/(qcomplex a, qcomplex b) {
        quad n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    quad norm2() const { return re * re + im * im; }
    quad abs() const { return qsqrt(norm2()); }
};

// primitive N-th root of unity, Newton-refined from a long double seed
inline qcomplex root_of_unity(unsigned n) {
    if (n == 1) return {1, 0};
    long double ang = 2.0L * 3.141592653589793238462643383279502884L / static_cast<long double>(n);
    qcomplex z{static_cast<quad>(cosl(ang)), static_cast<quad>(sinl(ang))};
    // Newton on z^n - 1
    for (int iter = 0; iter < 3; ++iter) {
        qcomplex p{1, 0};
        for (unsigned k = 0; k + 1 < n; ++k) p = p * z; // z^(n-1)
        qcomplex f = p * z - qcomplex{1, 0};
        qcomplex df = qcomplex{static_cast<quad>(n), 0} * p;
        z = z - f / df;
    }
    return z;
}

inline qcomplex embed(const FieldElem& x, const qcomplex& zeta) {
    // Horner over the power basis
    qcomplex r{0, 0};
    const auto& c = x.coeffs();
    for (size_t k = c.size(); k-- > 0;) {
        r = r * zeta;
        r.re += from_rational(c[k]);
    }
    return r;
}

// All complex roots of a monic polynomial by simultaneous (Durand-Kerner)
// iteration. Coefficients are little-endian with coeff.back() == 1.
inline std::vector<qcomplex> durand_kerner(const std::vector<qcomplex>& coeff, int max_iter) {
    size_t d = coeff.size() - 1;
    std::vector<qcomplex> x(d);
    quad radius = 1;
    for (size_t i = 0; i < d; ++i) {
        quad a = coeff[i].abs();
        if (a + 1 > radius) radius = a + 1;
    }
    qcomplex seed{static_cast<quad>(0.4), static_cast<quad>(0.9)}; // irrational angle spread
    qcomplex cur{1, 0};
    for (size_t i = 0; i < d; ++i) {
        cur = cur * seed;
        quad s = cur.abs();
        x[i] = {cur.re / s * radius, cur.im / s * radius};
    }
    auto eval = [&](qcomplex t) {
        qcomplex r{0, 0};
        for (size_t k = coeff.size(); k-- > 0;) r = r * t + coeff[k];
        return r;
    };
    const quad tol = static_cast<quad>(std::ldexp(1.0, -(kQuadMantissaBits - 14)));
    for (int iter = 0; iter < max_iter; ++iter) {
        quad worst = 0;
        for (size_t i = 0; i < d; ++i) {
            qcomplex denom{1, 0};
            for (size_t j = 0; j < d; ++j)
                if (j != i) denom = denom * (x[i] - x[j]);
            qcomplex delta = eval(x[i]) / denom;
            x[i] = x[i] - delta;
            quad da = delta.abs();
            if (da > worst) worst = da;
        }
        if (worst < tol * (radius + 1)) break;
    }
    return x;
}

} // namespace qnum

namespace lll {

// Lovasz-reduce an integer lattice basis (rows), delta = 3/4.
inline void reduce(std::vector<std::vector<BigInt>>& b) {
    size_t n = b.size();
    std::vector<std::vector<Rational>> mu(n, std::vector<Rational>(n));
    std::vector<Rational> bnorm(n); // |b*_i|^2
    auto gram = [&]() {
        std::vector<std::vector<Rational>> bstar(n, std::vector<Rational>(b[0].size()));
        for (size_t i = 0; i < n; ++i) {
            for (size_t c = 0; c < b[i].size(); ++c) bstar[i][c] = Rational(b[i][c]);
            for (size_t j = 0; j < i; ++j) {
                Rational num;
                for (size_t c = 0; c < b[i].size(); ++c)
                    num += Rational(b[i][c]) * bstar[j][c];
                mu[i][j] = bnorm[j].is_zero() ? Rational() : num / bnorm[j];
                for (size_t c = 0; c < b[i].size(); ++c)
                    bstar[i][c] -= mu[i][j] * bstar[j][c];
            }
            Rational nn;
            for (size_t c = 0; c < b[i].size(); ++c) nn += bstar[i][c] * bstar[i][c];
            bnorm[i] = nn;
        }
    };
    gram();
    auto round_rat = [](const Rational& r) {
        // nearest integer
        BigInt two_num = r.num() * BigInt(2);
        BigInt q, rem;
        BigInt::divmod(two_num + r.den() * (r.sign() < 0 ? BigInt(-1) : BigInt(1)),
                       r.den() * BigInt(2), q, rem);
        return q;
    };
    size_t k = 1;
    int guard = 0;
    while (k < n) {
        if (++guard > 10000) throw NumericLocationError("lattice reduction failed to converge");
        for (size_t j = k; j-- > 0;) {
            BigInt r = round_rat(mu[k][j]);
            if (!r.is_zero()) {
                for (size_t c = 0; c < b[k].size(); ++c) b[k][c] -= r * b[j][c];
                gram();
            }
        }
        Rational lhs = bnorm[k];
        Rational rhs = (Rational(3, 4) - mu[k][k - 1] * mu[k][k - 1]) * bnorm[k - 1];
        if (lhs >= rhs) {
            ++k;
        } else {
            std::swap(b[k], b[k - 1]);
            gram();
            if (k > 1) --k;
        }
    }
}

} // namespace lll

// Reconstruct exact elements of Q(zeta_N) from a numeric value: find small
// integers (a_0..a_{phi-1}, d) with sum a_k zeta^k close to d * value, then
// return sum (a_k/d) zeta^k. The caller certifies the result exactly; a failed
// reconstruction just yields no candidate.
inline std::optional<FieldElem> reconstruct_in_field(const CycloField* field,
                                                     const qnum::qcomplex& value,
                                                     const BigInt& denom_bound) {
    size_t phi = field->degree();
    qnum::qcomplex zeta = qnum::root_of_unity(field->order());
    // scale adapts so scaled entries stay inside long long range
    int scale_bits = kQuadMantissaBits >= 100 ? 60 : 44;
    {
        quad maxmag = value.abs();
        while (scale_bits > 8 &&
               maxmag * static_cast<quad>(std::ldexp(1.0L, scale_bits)) >
                   static_cast<quad>(std::ldexp(1.0L, 61)))
            --scale_bits;
    }
    const long double scale = std::ldexp(1.0L, scale_bits);
    auto round_to_bigint = [&](quad x) {
        long double v = static_cast<long double>(x) * scale;
        if (qnum::qabs(static_cast<quad>(v)) > static_cast<quad>(std::ldexp(1.0L, 62)))
            return std::optional<BigInt>();
        return std::optional<BigInt>(BigInt(static_cast<long long>(llrintl(v))));
    };

    std::vector<std::vector<BigInt>> basis;
    qnum::qcomplex zk{1, 0};
    for (size_t k = 0; k < phi; ++k) {
        std::vector<BigInt> row(phi + 3);
        row[k] = BigInt(1);
        auto re = round_to_bigint(zk.re), im = round_to_bigint(zk.im);
        if (!re || !im) return std::nullopt;
        row[phi + 1] = *re;
        row[phi + 2] = *im;
        basis.push_back(std::move(row));
        zk = zk * zeta;
    }
    {
        std::vector<BigInt> row(phi + 3);
        row[phi] = BigInt(1);
        auto re = round_to_bigint(value.re), im = round_to_bigint(value.im);
        if (!re || !im) return std::nullopt;
        row[phi + 1] = -*re;
        row[phi + 2] = -*im;
        basis.push_back(std::move(row));
    }
    lll::reduce(basis);

    const quad tol = static_cast<quad>(std::ldexp(1.0, -40));
    for (const auto& v : basis) {
        const BigInt& d = v[phi];
        if (d.is_zero()) continue;
        if (d.abs() > denom_bound) continue;
        // candidate sum a_k zeta^k / d; verify numerically before returning
        std::vector<Rational> coeffs(phi);
        for (size_t k = 0; k < phi; ++k) coeffs[k] = Rational(v[k], d);
        FieldElem cand(field, std::move(coeffs));
        qnum::qcomplex r = qnum::embed(cand, zeta) - value;
        if (r.abs() < tol) return cand;
    }
    return std::nullopt;
}

// Exact minimal polynomial of a square matrix, little-endian monic coefficients.
inline std::vector<FieldElem> minimal_polynomial(const Matrix& a) {
    const CycloField* f = a.field();
    size_t k = a.rows();
    std::vector<Vec> flat_powers;
    Matrix power = Matrix::identity(f, k);
    for (size_t m = 0;; ++m) {
        Vec flat;
        flat.reserve(k * k);
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) flat.push_back(power.at(i, j));
        std::optional<Matrix> dep;
        if (!flat_powers.empty()) {
            Matrix prev = Matrix::from_rows(f, flat_powers, k * k);
            dep = solve_right(prev, Matrix::row_vector(flat));
        }
        if (dep) {
            // x^m = sum_j dep_j x^j  ->  min poly = x^m - sum dep_j x^j
            std::vector<FieldElem> p(m + 1, FieldElem::zero(f));
            for (size_t j = 0; j < m; ++j) p[j] = -dep->at(0, j);
            p[m] = FieldElem::one(f);
            return p;
        }
        flat_powers.push_back(std::move(flat));
        if (m > k) throw std::logic_error("minimal_polynomial: no dependency found");
        power = power * a;
    }
}

// Candidate eigenvalues of `action` that lie in its base field. Numeric
// location proposes, exact reconstruction translates; certification is the
// caller's job. Pairwise separation below 2^-40 triggers one escalated retry.
inline std::vector<FieldElem> field_eigenvalue_candidates(const Matrix& action,
                                                          const BigInt& denom_bound) {
    const CycloField* f = action.field();
    std::vector<FieldElem> mp = minimal_polynomial(action);
    size_t deg = mp.size() - 1;
    std::vector<FieldElem> out;
    if (deg == 0) return out;
    if (deg == 1) {
        out.push_back(-mp[0]); // exact, no numerics involved
        return out;
    }
    qnum::qcomplex zeta = qnum::root_of_unity(f->order());
    std::vector<qnum::qcomplex> coeff;
    coeff.reserve(mp.size());
    for (const FieldElem& c : mp) coeff.push_back(qnum::embed(c, zeta));

    const quad sep = static_cast<quad>(std::ldexp(1.0, -40));
    std::vector<qnum::qcomplex> roots;
    for (int attempt = 0; attempt < 2; ++attempt) {
        roots = qnum::durand_kerner(coeff, attempt == 0 ? 400 : 4000);
        bool separated = true;
        for (size_t i = 0; i < roots.size() && separated; ++i)
            for (size_t j = i + 1; j < roots.size(); ++j)
                if ((roots[i] - roots[j]).abs() < sep) { separated = false; break; }
        if (separated) break;
        if (attempt == 1)
            throw NumericLocationError(
                "eigenvalue candidates not separated by 2^-40 after escalation");
    }
    for (const auto& r : roots) {
        auto cand = reconstruct_in_field(f, r, denom_bound);
        if (!cand) continue;
        bool dup = false;
        for (const FieldElem& e : out)
            if (e == *cand) { dup = true; break; }
        if (!dup) out.push_back(*cand);
    }
    return out;
}

} // namespace hopfkern
